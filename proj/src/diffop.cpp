#include "ncsym/diffop.hpp"
#include "ncsym/parser.hpp"
#include <functional>
#include <sstream>

namespace ncsym {

void DiffOp::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

DiffOp DiffOp::from_coeff(ContextPtr c, Expr e) {
    DiffOp op(c);
    DMono m(c->size(), 0);
    if (!e.is_zero()) op.terms_[m] = std::move(e);
    return op;
}

DiffOp DiffOp::partial(ContextPtr c, int var, int power) {
    DiffOp op(c);
    DMono m(c->size(), 0);
    m[var] = power;
    op.terms_[m] = Expr::integer(c, 1);
    return op;
}

int DiffOp::order() const {
    int d = 0;
    for (const auto& [m, e] : terms_) {
        int t = 0;
        for (int k : m) t += k;
        d = std::max(d, t);
    }
    return d;
}

Expr DiffOp::coefficient(const DMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Expr(ctx_) : it->second;
}

void DiffOp::set_coefficient(const DMono& m, Expr e) {
    if (e.is_zero()) terms_.erase(m);
    else terms_[m] = std::move(e);
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r = *this;
    for (const auto& [m, e] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) r.terms_[m] = e;
        else it->second = it->second + e;
    }
    r.prune();
    return r;
}

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& [m, e] : r.terms_) e = -e;
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scaled(const Coeff& c) const {
    DiffOp r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, e] : terms_) r.terms_[m] = e.scaled(c);
    return r;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        for (size_t v = 0; v < it->first.size(); ++v)
            for (int k = 0; k < it->first[v]; ++k) os << "*d" << ctx_->vars[v].name;
        first = false;
    }
    return os.str();
}

namespace {

// enumerate gamma <= alpha componentwise together with prod C(alpha_v, gamma_v)
void foreach_sub(const DMono& alpha,
                 const std::function<void(const DMono&, long)>& fn) {
    DMono gamma(alpha.size(), 0);
    std::function<void(size_t, long)> rec = [&](size_t pos, long binom) {
        if (pos == alpha.size()) {
            fn(gamma, binom);
            return;
        }
        long c = 1;
        for (int g = 0; g <= alpha[pos]; ++g) {
            if (g > 0) c = c * (alpha[pos] - g + 1) / g;
            gamma[pos] = g;
            rec(pos + 1, binom * c);
        }
        gamma[pos] = 0;
    };
    rec(0, 1);
}

template <class T>
T diff_many(const T& e, const DMono& m) {
    T r = e;
    for (size_t v = 0; v < m.size(); ++v)
        for (int k = 0; k < m[v]; ++k) r = r.diff((int)v);
    return r;
}

// generic normal-ordered composition over coefficient rings
template <class TP, class TQ, class TR>
std::map<DMono, TR> compose_terms(const std::map<DMono, TP>& P,
                                  const std::map<DMono, TQ>& Q,
                                  const std::function<TR(const TP&, const TQ&)>& mul) {
    std::map<DMono, TR> out;
    for (const auto& [alpha, a] : P) {
        for (const auto& [beta, b] : Q) {
            foreach_sub(alpha, [&](const DMono& gamma, long binom) {
                TQ db = diff_many(b, [&] {
                    DMono d = alpha;
                    for (size_t v = 0; v < d.size(); ++v) d[v] -= gamma[v];
                    return d;
                }());
                DMono m = gamma;
                for (size_t v = 0; v < m.size(); ++v) m[v] += beta[v];
                TR piece = mul(a, db);
                if (binom != 1) piece = piece.scaled(Coeff(binom));
                auto it = out.find(m);
                if (it == out.end()) out.emplace(m, piece);
                else it->second = it->second + piece;
            });
        }
    }
    return out;
}

using LinOp = std::map<DMono, LinExpr>;

LinOp prune_lin(LinOp op) {
    for (auto it = op.begin(); it != op.end();)
        it = it->second.is_zero() ? op.erase(it) : std::next(it);
    return op;
}

LinOp compose_expr_lin(const DiffOp& P, const LinOp& Q) {
    return prune_lin(compose_terms<Expr, LinExpr, LinExpr>(
        P.terms(), Q, [](const Expr& a, const LinExpr& b) { return b * a; }));
}

LinOp compose_lin_expr(const LinOp& P, const DiffOp& Q) {
    return prune_lin(compose_terms<LinExpr, Expr, LinExpr>(
        P, Q.terms(), [](const LinExpr& a, const Expr& b) { return a * b; }));
}

// leading structure of a divisor u d_t + (d_t-free); throws if unsuitable
Coeff divisor_unit(const DiffOp& D, int tvar) {
    Coeff u;
    bool found = false;
    for (const auto& [m, e] : D.terms()) {
        if (m[tvar] == 0) continue;
        DMono pure(m.size(), 0);
        pure[tvar] = 1;
        if (m != pure || !e.is_constant())
            throw std::domain_error("right_divide: divisor lacks an invertible d_t leading term");
        u = e.constant_value();
        found = true;
    }
    if (!found || u.is_zero())
        throw std::domain_error("right_divide: divisor lacks an invertible d_t leading term");
    return u;
}

template <class Op>
int max_t_order(const Op& terms, int tvar) {
    int k = 0;
    for (const auto& [m, e] : terms) k = std::max(k, m[tvar]);
    return k;
}

} // namespace

std::string to_string(const DiffOp& op) { return op.str(); }

DiffOp parse_diffop(const std::string& text, ContextPtr ctx, int d) {
    // parse over an extended chart with one token per derivative direction,
    // then split each monomial into coefficient and derivative parts
    std::vector<Variable> vars = ctx->vars;
    std::vector<int> dvar(d + 1);
    for (int a = 0; a <= d; ++a) {
        vars.push_back({"d" + ctx->vars[a].name});
        dvar[a] = (int)vars.size() - 1;
    }
    ContextPtr ext = Context::make(vars, ctx->radical_vars);
    Expr e = parse(text, ext);
    DiffOp op(ctx);
    std::vector<int> back(ext->size(), -1);
    for (int i = 0; i < ctx->size(); ++i) back[i] = i;
    std::map<DMono, TermMap> buckets;
    for (const auto& [m, cf] : e.terms()) {
        DMono dm(ctx->size(), 0);
        Mono coeff = m;
        for (int a = 0; a <= d; ++a) {
            dm[a] = m.e[dvar[a]];
            coeff.e[dvar[a]] = 0;
        }
        buckets[dm][coeff] = cf;
    }
    for (auto& [dm, t] : buckets) {
        Expr cf = Expr::from_terms(ext, e.rho_pow(), std::move(t)).reindex(ctx, back);
        op.set_coefficient(dm, op.coefficient(dm) + cf);
    }
    return op;
}

DiffOp compose(const DiffOp& P, const DiffOp& Q) {
    DiffOp r(P.ctx());
    auto terms = compose_terms<Expr, Expr, Expr>(
        P.terms(), Q.terms(), [](const Expr& a, const Expr& b) { return a * b; });
    for (auto& [m, e] : terms)
        if (!e.is_zero()) r.set_coefficient(m, std::move(e));
    return r;
}

Division right_divide(const DiffOp& P, const DiffOp& D, int tvar) {
    Coeff uinv = divisor_unit(D, tvar).inv();
    Division res;
    res.quotient = DiffOp(P.ctx());
    DiffOp rem = P;
    while (true) {
        int k = max_t_order(rem.terms(), tvar);
        if (k == 0) break;
        DiffOp qk(P.ctx());
        for (const auto& [m, e] : rem.terms()) {
            if (m[tvar] != k) continue;
            DMono qm = m;
            qm[tvar] -= 1;
            qk.set_coefficient(qm, e.scaled(uinv));
        }
        res.quotient = res.quotient + qk;
        rem = rem - compose(qk, D);
    }
    res.remainder = rem;
    return res;
}

SymmetryCertificate is_symmetry(const DiffOp& D, const DiffOp& Delta, int tvar) {
    SymmetryCertificate cert;
    cert.op = D;
    cert.divisor = Delta;
    Division div = right_divide(compose(Delta, D), Delta, tvar);
    cert.delta = div.quotient;
    cert.residual = div.remainder;
    cert.ok = div.remainder.is_zero();
    return cert;
}

DiffOp free_schrodinger(ContextPtr ctx, int d) {
    DiffOp op = DiffOp::partial(ctx, 0).scaled(Coeff::i());
    Coeff half_m = (Coeff(1) / Coeff(2)) * Coeff::m(-1);
    for (int j = 1; j <= d; ++j)
        op = op + DiffOp::partial(ctx, j, 2).scaled(half_m);
    return op;
}

DiffOp covariant_schrodinger(const Expr& V, const std::vector<Expr>& A) {
    ContextPtr ctx = V.ctx();
    const int d = (int)A.size();
    if (V.degree_in(0) != 0)
        throw std::domain_error("covariant_schrodinger: V must not depend on t");
    for (const auto& a : A)
        if (a.degree_in(0) != 0)
            throw std::domain_error("covariant_schrodinger: A must not depend on t");
    DiffOp op = DiffOp::partial(ctx, 0).scaled(Coeff::i());
    Coeff half_m = (Coeff(1) / Coeff(2)) * Coeff::m(-1);
    for (int j = 1; j <= d; ++j) {
        DiffOp Pj = DiffOp::partial(ctx, j).scaled(-Coeff::i())
                    + DiffOp::from_coeff(ctx, A[j - 1].scaled(Coeff::m()));
        op = op - compose(Pj, Pj).scaled(half_m);
    }
    op = op - DiffOp::from_coeff(ctx, V.scaled(Coeff::m()));
    return op;
}

namespace {

struct OpAnsatz {
    Unknowns unknowns;
    int n_primary = 0;
    LinOp D;
};

bool uses_radical_expr(const Expr& e) {
    if (e.rho_pow() > 0) return true;
    for (const auto& [m, c] : e.terms())
        if (m.r) return true;
    return false;
}

OperatorBasis solve_symmetries(const DiffOp& Delta, int d, int order, int deg,
                               int s_extra_deg, bool radical) {
    ContextPtr ctx = Delta.ctx();
    std::vector<int> coords;
    for (int a = 0; a <= d; ++a) coords.push_back(a);
    OpAnsatz A;
    // top-order coefficients first: they form the primary (symbol) block
    std::vector<DMono> monos;
    {
        std::function<void(DMono&, int, int)> rec = [&](DMono& cur, int pos, int left) {
            if (pos == (int)coords.size()) {
                monos.push_back(cur);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[coords[pos]] = e;
                rec(cur, pos + 1, left - e);
            }
            cur[coords[pos]] = 0;
        };
        DMono cur(ctx->size(), 0);
        rec(cur, 0, order);
    }
    std::stable_sort(monos.begin(), monos.end(), [](const DMono& a, const DMono& b) {
        int ta = 0, tb = 0;
        for (int k : a) ta += k;
        for (int k : b) tb += k;
        return ta > tb;
    });
    bool primary_done = false;
    for (const auto& m : monos) {
        int total = 0;
        for (int k : m) total += k;
        if (total < order && !primary_done) {
            A.n_primary = A.unknowns.size();
            primary_done = true;
        }
        LinExpr le = poly_ansatz(ctx, coords, deg + (total == 0 ? s_extra_deg : 0),
                                 A.unknowns, "c");
        if (total == 0 && radical)
            le += radical_ansatz(ctx, coords, deg + s_extra_deg, A.unknowns, "c");
        A.D[m] = le;
    }
    if (!primary_done) A.n_primary = A.unknowns.size();

    LinOp C = compose_expr_lin(Delta, A.D);
    // right-divide by Delta and collect the remainder
    Coeff uinv = divisor_unit(Delta, 0).inv();
    while (true) {
        int k = max_t_order(C, 0);
        if (k == 0) break;
        LinOp qk;
        for (const auto& [m, e] : C) {
            if (m[0] != k) continue;
            DMono qm = m;
            qm[0] -= 1;
            qk[qm] = e.scaled(uinv);
        }
        LinOp qd = compose_lin_expr(qk, Delta);
        for (auto& [m, e] : qd) {
            auto it = C.find(m);
            if (it == C.end()) C.emplace(m, -e);
            else it->second -= e;
        }
        C = prune_lin(std::move(C));
    }
    LinearSystem sys(A.unknowns);
    for (auto& [m, e] : C) sys.add_equation(e);
    SolveResult res = solve(std::move(sys));
    CanonicalFamily fam = canonicalize_family(res, A.n_primary);

    OperatorBasis out;
    out.order = order;
    out.ansatz_degree = deg;
    out.n_lower = (int)fam.trivial.size();
    for (const auto& v : fam.primary) {
        DiffOp op(ctx);
        for (const auto& [m, le] : A.D) op.set_coefficient(m, le.evaluate(v));
        SymComponents sym(ctx, d + 1, order);
        for (const auto& [m, le] : A.D) {
            int total = 0;
            for (int k : m) total += k;
            if (total != order) continue;
            std::vector<int> idx;
            for (int a = 0; a <= d; ++a)
                for (int k = 0; k < m[a]; ++k) idx.push_back(a);
            Expr val = le.evaluate(v);
            if (!val.is_zero())
                sym.set(idx, val.scaled(Coeff(1) / Coeff(SymComponents::orderings(idx))));
        }
        out.symbols.push_back(std::move(sym));
        out.ops.push_back(std::move(op));
    }
    return out;
}

} // namespace

OperatorBasis first_order_symmetries(const Expr& V, const std::vector<Expr>& A, int deg) {
    DiffOp Delta = covariant_schrodinger(V, A);
    bool radical = uses_radical_expr(V);
    for (const auto& a : A) radical = radical || uses_radical_expr(a);
    return solve_symmetries(Delta, (int)A.size(), 1, deg, 2, radical);
}

OperatorBasis higher_symmetries(int order, int deg) {
    if (order < 1) throw std::invalid_argument("higher_symmetries: order must be >= 1");
    ContextPtr ctx = spacetime_context(3);
    DiffOp Delta = free_schrodinger(ctx, 3);
    return solve_symmetries(Delta, 3, order, deg, 2, false);
}

// ---- light-cone machinery -------------------------------------------------

ContextPtr lightcone_context(int N) {
    std::vector<Variable> vars;
    for (int i = 1; i <= N - 2; ++i) vars.push_back({"x" + std::to_string(i)});
    vars.push_back({"xp"});
    vars.push_back({"xm"});
    return Context::make(std::move(vars));
}

DiffOp lightcone_laplacian(ContextPtr c) {
    int N = c->size();
    DiffOp op(c);
    for (int i = 0; i < N - 2; ++i) op = op + DiffOp::partial(c, i, 2);
    DMono pm(c->size(), 0);
    pm[N - 2] = 1;
    pm[N - 1] = 1;
    op.set_coefficient(pm, Expr::integer(c, -2));
    return op;
}

namespace {

std::vector<std::vector<int>> sorted_multis(int dim, int rank) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if ((int)cur.size() == rank) {
            out.push_back(cur);
            return;
        }
        for (int a = lo; a < dim; ++a) {
            cur.push_back(a);
            rec(a);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

CktSolveResult solve_flat_ckt(int N, int rank, int deg, bool lightcone) {
    if (N < 2 || rank < 1) throw std::invalid_argument("solve_flat_ckt: bad N or rank");
    ContextPtr ctx = lightcone_context(N);
    const int plus = N - 2, minus = N - 1;
    auto gup = [&](int a, int b) -> long {
        if (a < N - 2 && a == b) return 1;
        if ((a == plus && b == minus) || (a == minus && b == plus)) return -1;
        return 0;
    };
    std::vector<int> avars;
    for (int v = 0; v < N; ++v)
        if (!(lightcone && v == minus)) avars.push_back(v);

    Unknowns u;
    std::map<std::vector<int>, LinExpr> S, K;
    for (const auto& idx : sorted_multis(N, rank))
        S[idx] = poly_ansatz(ctx, avars, deg, u, "S");
    int n_primary = u.size();
    for (const auto& idx : sorted_multis(N, rank - 1))
        K[idx] = poly_ansatz(ctx, avars, deg, u, "k");

    auto dup = [&](const LinExpr& e, int mu) {
        if (mu < N - 2) return e.diff(mu);
        if (mu == plus) return -e.diff(minus);
        return -e.diff(plus);
    };
    LinearSystem sys(u);
    for (const auto& multi : sorted_multis(N, rank + 1)) {
        LinExpr eq(ctx);
        std::vector<int> p = multi;
        do {
            std::vector<int> rest(p.begin() + 1, p.end());
            std::sort(rest.begin(), rest.end());
            eq += dup(S.at(rest), p[0]);
            long g = gup(p[0], p[1]);
            if (g != 0) {
                std::vector<int> krest(p.begin() + 2, p.end());
                std::sort(krest.begin(), krest.end());
                eq -= K.at(krest).scaled(Coeff(g));
            }
        } while (std::next_permutation(p.begin(), p.end()));
        sys.add_equation(eq);
    }
    SolveResult res = solve(std::move(sys));
    CanonicalFamily fam = canonicalize_family(res, n_primary);
    CktSolveResult out;
    out.rank = rank;
    out.ansatz_degree = deg;
    out.n_trivial = (int)fam.trivial.size();
    for (const auto& v : fam.primary) {
        SymComponents sc(ctx, N, rank);
        for (const auto& [idx, le] : S) sc.set(idx, le.evaluate(v));
        out.S.push_back(std::move(sc));
    }
    return out;
}

DiffOp lightcone_reduce(const DiffOp& D) {
    ContextPtr lc = D.ctx();
    const int N = lc->size();
    const int plus = N - 2, minus = N - 1;
    ContextPtr st = spacetime_context(N - 2);
    std::vector<int> varmap(N, -1);
    for (int i = 0; i < N - 2; ++i) varmap[i] = i + 1;
    varmap[plus] = 0;
    DiffOp out(st);
    for (const auto& [m, e] : D.terms()) {
        if (e.degree_in(minus) != 0)
            throw std::domain_error("lightcone_reduce: coefficient depends on x^-");
        Expr c = e.reindex(st, varmap);
        int km = m[minus];
        if (km > 0) {
            Coeff f = Coeff(1);
            for (int k = 0; k < km; ++k) f = f * (-Coeff::i()) * Coeff::m();
            c = c.scaled(f);
        }
        DMono nm(st->size(), 0);
        nm[0] = m[plus];
        for (int i = 0; i < N - 2; ++i) nm[i + 1] = m[i];
        out.set_coefficient(nm, out.coefficient(nm) + c);
    }
    return out;
}

SymComponents lightcone_project_symbol(const SymComponents& S, ContextPtr st) {
    return lightcone_project_lower(S, st, 0);
}

SymComponents lightcone_project_lower(const SymComponents& S, ContextPtr st, int q) {
    const int N = S.dim;
    const int plus = N - 2, minus = N - 1;
    std::vector<int> varmap(S.ctx->size(), -1);
    for (int i = 0; i < N - 2; ++i) varmap[i] = i + 1;
    varmap[plus] = 0;
    long binom = 1;
    for (int k = 1; k <= q; ++k) binom = binom * (S.rank - k + 1) / k;
    SymComponents out(st, N - 1, S.rank - q);
    for (const auto& [idx, e] : S.c) {
        int nminus = 0;
        for (int a : idx) nminus += (a == minus);
        if (nminus != q) continue;
        std::vector<int> nidx;
        for (int a : idx) {
            if (a == minus) continue;
            nidx.push_back(a == plus ? 0 : a + 1);
        }
        if (e.degree_in(minus) != 0)
            throw std::domain_error("lightcone projection: x^- dependent component");
        out.set(nidx, e.reindex(st, varmap).scaled(Coeff(binom)));
    }
    return out;
}

} // namespace ncsym
