#include "ncsym/twistor.hpp"
#include "ncsym/parser.hpp"
#include <functional>

namespace ncsym {

namespace {
enum { VT = 0, VQ = 1, VL = 2 };
}

ContextPtr twistor_context() {
    static ContextPtr ctx = Context::make({{"T"}, {"Q"}, {"lambda", true}});
    return ctx;
}

Expr hat_subst(const Expr& e) {
    // T^a Q^b lambda^c -> T^a Q^b lambda^(-2b-c)
    return e.map_monomials([](const Mono& m) {
        Mono n = m;
        n.e[VL] = -2 * m.e[VQ] - m.e[VL];
        return n;
    });
}

TwistorVectorField hatted_components(const TwistorVectorField& b) {
    ContextPtr c = b.bT.ctx();
    Expr l2 = Expr::variable(c, VL, -2);
    Expr l3Q = Expr::variable(c, VL, -3) * Expr::variable(c, VQ);
    TwistorVectorField h;
    h.bT = hat_subst(b.bT);
    h.bQ = hat_subst(l2 * b.bQ - l3Q.scaled(Coeff(2)) * b.bL);
    h.bL = hat_subst(-(l2 * b.bL));
    return h;
}

bool is_global(const TwistorVectorField& b) {
    TwistorVectorField h = hatted_components(b);
    for (const Expr* e : std::initializer_list<const Expr*>{
             &b.bT, &b.bQ, &b.bL, &h.bT, &h.bQ, &h.bL})
        if (!e->is_zero() && e->min_degree_in(VL) < 0) return false;
    return true;
}

TwistorVectorField twistor_bracket(const TwistorVectorField& a,
                                   const TwistorVectorField& b) {
    auto comp = [&](const TwistorVectorField& v, int i) -> const Expr& {
        return i == VT ? v.bT : (i == VQ ? v.bQ : v.bL);
    };
    TwistorVectorField r;
    Expr* out[3] = {&r.bT, &r.bQ, &r.bL};
    ContextPtr c = a.bT.ctx();
    for (int i = 0; i < 3; ++i) {
        Expr v(c);
        for (int j = 0; j < 3; ++j) {
            v = v + comp(a, j) * comp(b, i).diff(j);
            v = v - comp(b, j) * comp(a, i).diff(j);
        }
        *out[i] = v;
    }
    return r;
}

namespace {

// ansatz over the monomial box T^a Q^b lambda^c
LinExpr box_ansatz(ContextPtr ctx, int tmax, int qmax, int lmin, int lmax,
                   Unknowns& u, const std::string& tag) {
    LinExpr le(ctx);
    for (int a = 0; a <= tmax; ++a)
        for (int b = 0; b <= qmax; ++b)
            for (int c = lmin; c <= lmax; ++c) {
                Mono m;
                m.e = {a, b, c};
                int id = u.add(tag + "[" + std::to_string(u.size()) + "]");
                le.lin[id] = Expr::from_terms(ctx, 0, TermMap{{m, Coeff(1)}});
            }
    return le;
}

LinExpr lin_map(const LinExpr& le, const std::function<Expr(const Expr&)>& f) {
    LinExpr r(le.ctx);
    r.cst = f(le.cst);
    for (auto& [j, e] : le.lin) {
        Expr fe = f(e);
        if (!fe.is_zero()) r.lin[j] = fe;
    }
    return r;
}

Expr negative_lambda_part(const Expr& e) {
    if (e.is_zero()) return e;
    TermMap t;
    for (const auto& [m, c] : e.terms())
        if (m.e[VL] < 0) t[m] = c;
    return Expr::from_terms(e.ctx(), e.rho_pow(), std::move(t));
}

std::vector<Row> flatten_twistor(const std::vector<TwistorVectorField>& fs) {
    struct Key {
        int comp;
        Mono mono;
        bool operator<(const Key& o) const {
            if (comp != o.comp) return comp < o.comp;
            return MonoLess{}(mono, o.mono);
        }
    };
    std::map<Key, long> dict;
    std::vector<std::vector<std::pair<Key, Coeff>>> raw;
    for (const auto& f : fs) {
        std::vector<std::pair<Key, Coeff>> entries;
        const Expr* comps[3] = {&f.bT, &f.bQ, &f.bL};
        for (int a = 0; a < 3; ++a)
            for (const auto& [m, c] : comps[a]->terms()) {
                Key k{a, m};
                dict.emplace(k, 0);
                entries.push_back({k, c});
            }
        raw.push_back(std::move(entries));
    }
    long id = 0;
    for (auto& [k, v] : dict) v = id++;
    std::vector<Row> rows;
    for (auto& entries : raw) {
        Row r;
        for (auto& [k, c] : entries) r[dict[k]] = c;
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

std::vector<TwistorVectorField> global_vector_fields(int NT) {
    if (NT < 0) throw std::invalid_argument("global_vector_fields: NT must be >= 0");
    ContextPtr ctx = twistor_context();
    Unknowns u;
    LinExpr bT = box_ansatz(ctx, NT, 2, -3, 4, u, "T");
    LinExpr bQ = box_ansatz(ctx, NT, 2, -3, 4, u, "Q");
    LinExpr bL = box_ansatz(ctx, NT, 2, -3, 4, u, "L");
    Expr l2 = Expr::variable(ctx, VL, -2);
    Expr l3Q = Expr::variable(ctx, VL, -3) * Expr::variable(ctx, VQ);
    LinExpr hT = lin_map(bT, hat_subst);
    LinExpr hQ = lin_map(bQ * l2 - (bL * l3Q).scaled(Coeff(2)), hat_subst);
    LinExpr hL = lin_map(-(bL * l2), hat_subst);
    LinearSystem sys(u);
    for (const LinExpr* e : {&bT, &bQ, &bL, &hT, &hQ, &hL})
        sys.add_equation(lin_map(*e, negative_lambda_part));
    SolveResult res = solve(std::move(sys));
    CanonicalFamily fam = canonicalize_family(res, u.size());
    std::vector<TwistorVectorField> out;
    for (const auto& v : fam.primary) {
        TwistorVectorField f;
        f.bT = bT.evaluate(v);
        f.bQ = bQ.evaluate(v);
        f.bL = bL.evaluate(v);
        out.push_back(std::move(f));
    }
    return out;
}

bool same_twistor_span(const std::vector<TwistorVectorField>& a,
                       const std::vector<TwistorVectorField>& b) {
    std::vector<TwistorVectorField> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    auto rows = flatten_twistor(joint);
    std::vector<Row> ra(rows.begin(), rows.begin() + a.size());
    std::vector<Row> rb(rows.begin() + a.size(), rows.end());
    return span_equal(std::move(ra), std::move(rb));
}

bool twistor_in_span(const TwistorVectorField& x,
                     const std::vector<TwistorVectorField>& basis) {
    std::vector<TwistorVectorField> joint = basis;
    joint.push_back(x);
    auto rows = flatten_twistor(joint);
    std::vector<Row> rb(rows.begin(), rows.end() - 1);
    return span_dim(rb) == span_dim(std::move(rows));
}

bool twistor_closed(const std::vector<TwistorVectorField>& basis) {
    std::vector<TwistorVectorField> joint = basis;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            joint.push_back(twistor_bracket(basis[i], basis[j]));
    auto rows = flatten_twistor(joint);
    std::vector<Row> base(rows.begin(), rows.begin() + basis.size());
    int d0 = span_dim(base);
    return d0 == span_dim(std::move(rows));
}

namespace {

// working chart for the incidence computation: t,x,y,z then lambda and Q
ContextPtr pushwork_context() {
    static ContextPtr ctx =
        Context::make({{"t"}, {"x"}, {"y"}, {"z"}, {"lambda", true}, {"Qv"}});
    return ctx;
}

Expr incidence_Q(ContextPtr w) {
    // lambda^2 (x - i y) - 2 lambda z - (x + i y)
    Expr x = Expr::variable(w, 1), y = Expr::variable(w, 2), z = Expr::variable(w, 3);
    Expr l = Expr::variable(w, 4);
    Expr iy = y.scaled(Coeff::i());
    return l * l * (x - iy) - (l * z).scaled(Coeff(2)) - (x + iy);
}

Expr to_pushwork(const Expr& e) {
    // T -> t, Q -> Qv, lambda -> lambda
    return e.reindex(pushwork_context(), {0, 5, 4});
}

} // namespace

Pushforward pushforward(const TwistorVectorField& b) {
    ContextPtr w = pushwork_context();
    Expr Qi = incidence_Q(w);
    Expr dQdl = Qi.diff(4);
    auto restrict_inc = [&](const Expr& e) { return to_pushwork(e).subst(5, Qi); };
    Expr R = restrict_inc(b.bQ) - dQdl * restrict_inc(b.bL);
    Expr Lt = restrict_inc(b.bT);
    if (Lt.degree_in(4) != 0 || Lt.min_degree_in(4) != 0)
        throw std::domain_error("pushforward: Lambda^t depends on lambda: " + Lt.str());
    for (int k = R.min_degree_in(4); k <= R.degree_in(4); ++k) {
        if (k >= 0 && k <= 2) continue;
        Expr witness = R.coefficient_of(4, k);
        if (!witness.is_zero())
            throw std::domain_error("pushforward: no lambda-independent solution; "
                                    "lambda^" + std::to_string(k) + " residual " + witness.str());
    }
    Expr R0 = R.coefficient_of(4, 0), R1 = R.coefficient_of(4, 1), R2 = R.coefficient_of(4, 2);
    Coeff half = Coeff(1) / Coeff(2);
    Coeff ihalf = Coeff::i() * half;
    ContextPtr st = spacetime_context(3);
    // drop lambda and Qv on the way out; both are gone by construction
    std::vector<int> out_map = {0, 1, 2, 3, -1, -1};
    auto down = [&](const Expr& e) { return e.reindex(st, out_map); };
    Pushforward P;
    P.X = VectorField(st, 4);
    P.X.comp[0] = down(Lt);
    P.X.comp[1] = down((R2 - R0).scaled(half));
    P.X.comp[2] = down((R2 + R0).scaled(ihalf));
    P.X.comp[3] = down(-R1.scaled(half));
    // cnc block data: X^i = omega^i_j(t) x^j + chi(t) x^i + eta^i(t)
    Expr M[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = P.X.comp[i + 1].diff(j + 1);
    Coeff third = Coeff(1) / Coeff(3);
    P.chi = (M[0][0] + M[1][1] + M[2][2]).scaled(third);
    auto omega = [&](int i, int j) { return (M[i][j] - M[j][i]).scaled(half); };
    P.omega_xy = omega(0, 1);
    P.omega_zx = omega(2, 0);
    P.omega_zy = omega(2, 1);
    P.h = P.X.comp[0];
    for (int i = 0; i < 3; ++i) {
        Expr eta = P.X.comp[i + 1];
        for (int j = 0; j < 3; ++j) {
            Expr coeff = (M[i][j] + M[j][i]).scaled(half);
            if (i == j) coeff = coeff; // symmetric part; trace included below
            Expr lin = (omega(i, j) + (i == j ? P.chi : Expr(st)));
            eta = eta - lin * Expr::variable(st, j + 1);
        }
        P.eta.push_back(eta);
    }
    // the image must be of cnc type: no shear, h a function of t only
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Expr shear = (M[i][j] + M[j][i]).scaled(half);
            if (i == j) shear = shear - P.chi;
            if (!shear.is_zero())
                throw std::domain_error("pushforward: image is not of cnc type");
        }
    for (int i = 1; i <= 3; ++i)
        if (P.h.degree_in(i) != 0)
            throw std::domain_error("pushforward: X^t depends on space");
    return P;
}

TwistorVectorField lift_to_twistor(const VectorField& X) {
    ContextPtr st = X.ctx;
    ContextPtr tw = twistor_context();
    Expr M[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = X.comp[i + 1].diff(j + 1);
    Coeff half = Coeff(1) / Coeff(2);
    Coeff third = Coeff(1) / Coeff(3);
    Expr chi = (M[0][0] + M[1][1] + M[2][2]).scaled(third);
    auto omega = [&](int i, int j) { return (M[i][j] - M[j][i]).scaled(half); };
    std::vector<Expr> eta;
    for (int i = 0; i < 3; ++i) {
        Expr e = X.comp[i + 1];
        for (int j = 0; j < 3; ++j)
            e = e - (omega(i, j) + (i == j ? chi : Expr(st))) * Expr::variable(st, j + 1);
        eta.push_back(e);
    }
    // dictionary inversion
    Expr g = omega(0, 1).scaled(-Coeff::i());
    Expr f = (omega(2, 0) + omega(2, 1).scaled(Coeff::i())).scaled(half);
    Expr d = omega(2, 0) - omega(2, 1).scaled(Coeff::i());
    Expr b = chi + g;
    Expr e_ = eta[0] - eta[1].scaled(Coeff::i());
    Expr c_ = -eta[2].scaled(Coeff(2));
    Expr a_ = -(eta[0] + eta[1].scaled(Coeff::i()));
    std::vector<int> tmap(st->size(), -1);
    tmap[0] = VT;
    auto toT = [&](const Expr& e) {
        for (int i = 1; i <= 3; ++i)
            if (e.degree_in(i) != 0)
                throw std::domain_error("lift_to_twistor: field is not of cnc type");
        return e.reindex(tw, tmap);
    };
    Expr Q = Expr::variable(tw, VQ), l = Expr::variable(tw, VL);
    TwistorVectorField r;
    r.bT = toT(X.comp[0]);
    r.bQ = toT(a_) + toT(b) * Q + toT(c_) * l + toT(d) * l * Q + toT(e_) * l * l;
    r.bL = toT(f) + toT(g) * l + (toT(d) * l * l).scaled(half);
    return r;
}

CncCheck verify_cnc_correspondence(int NT) {
    CncCheck out;
    std::vector<TwistorVectorField> basis = global_vector_fields(NT);
    out.dimension = (int)basis.size();
    std::vector<VectorField> images;
    for (size_t k = 0; k < basis.size(); ++k) {
        try {
            Pushforward P = pushforward(basis[k]);
            images.push_back(P.X);
            // round trip
            TwistorVectorField back = lift_to_twistor(P.X);
            if (!(back == basis[k])) {
                out.ok = false;
                out.offender = (int)k;
                out.reason = "round-trip lift differs";
                return out;
            }
        } catch (const std::domain_error& ex) {
            out.ok = false;
            out.offender = (int)k;
            out.reason = ex.what();
            return out;
        }
    }
    // injectivity: the image span has the full dimension
    if (span_dim(flatten(images)) != (int)basis.size()) {
        out.ok = false;
        out.reason = "pushforward not injective";
        return out;
    }
    // bracket homomorphism on all pairs
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            VectorField lhs = pushforward(twistor_bracket(basis[i], basis[j])).X;
            VectorField rhs = lie_bracket(images[i], images[j]);
            if (!(lhs == rhs)) {
                out.ok = false;
                out.offender = (int)i;
                out.reason = "bracket homomorphism fails";
                return out;
            }
        }
    return out;
}

TwistorConnection::TwistorConnection() {
    ContextPtr c = twistor_context();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int g = 0; g < 3; ++g) gamma[a][b][g] = Expr(c);
}

TwistorConnection connection_patch(const TwistorConnection& G) {
    ContextPtr c = twistor_context();
    Expr zero(c);
    Expr Q = Expr::variable(c, VQ);
    auto lam = [&](int k) { return Expr::variable(c, VL, k); };
    // J[alpha][mu] = d Zhat^alpha / d Z^mu
    Expr J[3][3] = {{Expr::integer(c, 1), zero, zero},
                    {zero, lam(-2), (lam(-3) * Q).scaled(Coeff(-2))},
                    {zero, zero, -lam(-2)}};
    // Jinv[nu][beta] = d Z^nu / d Zhat^beta, written in unhatted coordinates
    Expr Ji[3][3] = {{Expr::integer(c, 1), zero, zero},
                     {zero, lam(2), (lam(1) * Q).scaled(Coeff(-2))},
                     {zero, zero, -lam(2)}};
    // H[alpha][nu][rho] = d^2 Zhat^alpha / dZ^nu dZ^rho
    Expr H[3][3][3];
    for (auto& plane : H)
        for (auto& row : plane)
            for (auto& e : row) e = zero;
    H[VQ][VQ][VL] = lam(-3).scaled(Coeff(-2));
    H[VQ][VL][VQ] = H[VQ][VQ][VL];
    H[VQ][VL][VL] = (lam(-4) * Q).scaled(Coeff(6));
    H[VL][VL][VL] = lam(-3).scaled(Coeff(2));
    TwistorConnection out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int g = 0; g < 3; ++g) {
                Expr v(c);
                for (int mu = 0; mu < 3; ++mu) {
                    if (J[a][mu].is_zero()) continue;
                    for (int nu = 0; nu < 3; ++nu) {
                        if (Ji[nu][b].is_zero()) continue;
                        for (int rho = 0; rho < 3; ++rho) {
                            if (Ji[rho][g].is_zero() || G.at(mu, nu, rho).is_zero())
                                continue;
                            v = v + J[a][mu] * Ji[nu][b] * Ji[rho][g] * G.at(mu, nu, rho);
                        }
                    }
                }
                for (int nu = 0; nu < 3; ++nu)
                    for (int rho = 0; rho < 3; ++rho) {
                        if (Ji[nu][b].is_zero() || Ji[rho][g].is_zero()
                            || H[a][nu][rho].is_zero())
                            continue;
                        v = v - Ji[nu][b] * Ji[rho][g] * H[a][nu][rho];
                    }
                out.at(a, b, g) = v;
            }
    return out;
}

TwistorConnection vertical_connection(const Expr& Sigma, const Expr& Xi,
                                      const Expr& Phi0, const Expr& Phi1,
                                      const Expr& Phi2, const Expr& Psi) {
    ContextPtr c = twistor_context();
    TwistorConnection G;
    Expr l = Expr::variable(c, VL), Q = Expr::variable(c, VQ);
    G.at(VT, VT, VT) = Sigma;
    G.at(VQ, VT, VQ) = Xi;
    G.at(VQ, VQ, VT) = Xi;
    G.at(VQ, VT, VT) = Phi0 + Phi1 * l + Phi2 * l * l + Psi * Q;
    return G;
}

bool gbundle_obstructed(int laurent_bound) {
    ContextPtr c = twistor_context();
    Unknowns u;
    LinExpr Glll = box_ansatz(c, 1, 2, -laurent_bound, laurent_bound, u, "lll");
    LinExpr GlQl = box_ansatz(c, 1, 2, -laurent_bound, laurent_bound, u, "lQl");
    LinExpr GlQQ = box_ansatz(c, 1, 2, -laurent_bound, laurent_bound, u, "lQQ");
    Expr lam = Expr::variable(c, VL), Q = Expr::variable(c, VQ);
    // holomorphy of the section on the unhatted chart
    LinearSystem sys(u);
    for (const LinExpr* e : {&Glll, &GlQl, &GlQQ})
        sys.add_equation(lin_map(*e, negative_lambda_part));
    // hatted lambda-lambda-lambda component must be holomorphic at lambda^ = 0:
    // Ghat^l_ll = -lambda^2 G^l_ll - 4 lambda Q G^l_Ql - 4 Q^2 G^l_QQ - 2 lambda
    LinExpr row = -(Glll * (lam * lam)) - (GlQl * (lam * Q)).scaled(Coeff(4))
                  - (GlQQ * (Q * Q)).scaled(Coeff(4));
    row = row + LinExpr(-(lam.scaled(Coeff(2))));
    sys.add_equation(lin_map(lin_map(row, hat_subst), negative_lambda_part));
    SolveResult res = solve(std::move(sys));
    return !res.consistent;
}

std::vector<VerticalField> vertical_projective_fields(int NT) {
    ContextPtr c = twistor_context();
    Unknowns u;
    LinExpr h = box_ansatz(c, NT, 0, 0, 0, u, "h");
    LinExpr a = box_ansatz(c, NT, 0, 0, 0, u, "a");
    LinExpr b = box_ansatz(c, NT, 0, 0, 0, u, "b");
    LinExpr cc = box_ansatz(c, NT, 0, 0, 0, u, "c");
    LinExpr d = box_ansatz(c, NT, 0, 0, 0, u, "d");
    LinExpr e = box_ansatz(c, NT, 0, 0, 0, u, "e");
    LinExpr kT = box_ansatz(c, NT, 1, -2, 2, u, "kT");
    LinExpr kQ = box_ansatz(c, NT, 1, -2, 2, u, "kQ");
    Expr Q = Expr::variable(c, VQ), l = Expr::variable(c, VL);
    LinExpr bQ = a + b * Q + cc * l + d * (l * Q) + e * (l * l);
    const LinExpr* beta[2] = {&h, &bQ};
    const LinExpr* kappa[2] = {&kT, &kQ};
    Coeff half = Coeff(1) / Coeff(2);
    LinearSystem sys(u);
    for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
            for (int C = B; C < 2; ++C) {
                LinExpr eq = beta[A]->diff(B).diff(C);
                if (A == B) eq -= kappa[C]->scaled(half);
                if (A == C) eq -= kappa[B]->scaled(half);
                sys.add_equation(eq);
            }
    SolveResult res = solve(std::move(sys));
    CanonicalFamily fam = canonicalize_family(res, u.size());
    std::vector<VerticalField> out;
    for (const auto& v : fam.primary) {
        VerticalField f;
        f.bT = h.evaluate(v);
        f.bQ = bQ.evaluate(v);
        f.kappaT = kT.evaluate(v);
        f.kappaQ = kQ.evaluate(v);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<TwistorVectorField> stilde_basis(int NT) {
    ContextPtr c = twistor_context();
    std::vector<TwistorVectorField> out;
    for (const VerticalField& f : vertical_projective_fields(NT)) {
        TwistorVectorField b;
        b.bT = f.bT;
        b.bQ = f.bQ;
        // reintroduce the lambda-part 1/2 lambda^2 d0 tied to the d-coefficient
        Expr d = f.bQ.coefficient_of(VL, 1).coefficient_of(VQ, 1);
        b.bL = (Expr::variable(c, VL, 2) * d).scaled(Coeff(1) / Coeff(2));
        out.push_back(std::move(b));
    }
    TwistorVectorField f0, g0;
    f0.bT = Expr(c); f0.bQ = Expr(c); f0.bL = Expr::integer(c, 1);
    g0.bT = Expr(c); g0.bQ = Expr(c); g0.bL = Expr::variable(c, VL);
    out.push_back(f0);
    out.push_back(g0);
    return out;
}

std::vector<TwistorVectorField> cga_basis() {
    ContextPtr c = twistor_context();
    auto f = [&](const std::string& t, const std::string& q, const std::string& l) {
        TwistorVectorField v;
        v.bT = parse(t, c);
        v.bQ = parse(q, c);
        v.bL = parse(l, c);
        return v;
    };
    return {
        f("1", "0", "0"),                                     // time translation
        f("0", "lambda^2 - 1", "0"),                          // x translation
        f("0", "-i*lambda^2 - i", "0"),                       // y translation
        f("0", "-2*lambda", "0"),                             // z translation
        f("T", "Q", "0"),                                     // dilation
        f("0", "i*Q", "i*lambda"),                            // rotation xy
        f("0", "-i*lambda*Q", "-1/2*i*lambda^2 + 1/2*i"),     // rotation yz
        f("0", "-lambda*Q", "-1/2 - 1/2*lambda^2"),           // rotation zx
        f("0", "lambda^2*T - T", "0"),                        // boost x
        f("0", "-i*lambda^2*T - i*T", "0"),                   // boost y
        f("0", "-2*lambda*T", "0"),                           // boost z
        f("-T^2", "-2*T*Q", "0"),                             // special (time)
        f("0", "lambda^2*T^2 - T^2", "0"),                    // special x
        f("0", "-i*lambda^2*T^2 - i*T^2", "0"),               // special y
        f("0", "-2*lambda*T^2", "0"),                         // special z
    };
}

std::vector<VectorField> cga_spacetime_images() {
    ContextPtr st = spacetime_context(3);
    auto v = [&](const std::string& t, const std::string& x, const std::string& y,
                 const std::string& z) {
        VectorField X(st, 4);
        X.comp[0] = parse(t, st);
        X.comp[1] = parse(x, st);
        X.comp[2] = parse(y, st);
        X.comp[3] = parse(z, st);
        return X;
    };
    return {
        v("1", "0", "0", "0"),
        v("0", "1", "0", "0"),
        v("0", "0", "1", "0"),
        v("0", "0", "0", "1"),
        v("t", "x", "y", "z"),
        v("0", "-y", "x", "0"),
        v("0", "0", "-z", "y"),
        v("0", "z", "0", "-x"),
        v("0", "t", "0", "0"),
        v("0", "0", "t", "0"),
        v("0", "0", "0", "t"),
        v("-t^2", "-2*t*x", "-2*t*y", "-2*t*z"),
        v("0", "t^2", "0", "0"),
        v("0", "0", "t^2", "0"),
        v("0", "0", "0", "t^2"),
    };
}

} // namespace ncsym
