#include "ncsym/symsolve.hpp"

namespace ncsym {

namespace {

struct VFAnsatz {
    Unknowns unknowns;
    int n_primary = 0;
    std::vector<LinExpr> X;          // components X^a
    LinExpr f, g;
    std::vector<LinExpr> phi;        // one-form phi_a
};

VFAnsatz build_vf_ansatz(const NCSpacetime& S, int deg, bool with_projective) {
    VFAnsatz A;
    std::vector<int> coords;
    for (int a = 0; a <= S.d; ++a) coords.push_back(a);
    for (int a = 0; a <= S.d; ++a)
        A.X.push_back(poly_ansatz(S.ctx, coords, deg, A.unknowns, "X"));
    A.n_primary = A.unknowns.size();
    A.f = poly_ansatz(S.ctx, coords, deg, A.unknowns, "f");
    A.g = poly_ansatz(S.ctx, coords, deg, A.unknowns, "g");
    if (with_projective)
        for (int a = 0; a <= S.d; ++a)
            A.phi.push_back(poly_ansatz(S.ctx, coords, deg, A.unknowns, "phi"));
    return A;
}

// (L_X h)^{ab} with LinExpr X over a background h
LinExpr lie_h(const NCSpacetime& S, const std::vector<LinExpr>& X, int a, int b) {
    const int n = S.d + 1;
    LinExpr v(S.ctx);
    for (int c = 0; c < n; ++c) {
        v += X[c] * S.h.at({a, b}).diff(c);
        v -= X[a].diff(c) * S.h.at({c, b});
        v -= X[b].diff(c) * S.h.at({a, c});
    }
    return v;
}

LinExpr lie_theta(const NCSpacetime& S, const std::vector<LinExpr>& X, int a) {
    const int n = S.d + 1;
    LinExpr v(S.ctx);
    for (int b = 0; b < n; ++b) {
        v += X[b] * S.theta.at({a}).diff(b);
        v += X[b].diff(a) * S.theta.at({b});
    }
    return v;
}

LinExpr lie_gamma(const NCSpacetime& S, const TensorField<Expr>& G,
                  const std::vector<LinExpr>& X, int a, int b, int c) {
    const int n = S.d + 1;
    LinExpr v = X[a].diff(b).diff(c);
    for (int d = 0; d < n; ++d) {
        v += X[d] * G.at({a, b, c}).diff(d);
        v -= X[a].diff(d) * G.at({d, b, c});
        v += X[d].diff(c) * G.at({a, d, b});
        v += X[d].diff(b) * G.at({a, d, c});
    }
    return v;
}

struct SolveKind {
    bool projective;
    bool fg_zero;
    const char* label;
};

VectorFieldBasis solve_vf(const NCSpacetime& S, int deg, const SolveKind& kind) {
    const int n = S.d + 1;
    VFAnsatz A = build_vf_ansatz(S, deg, kind.projective);
    LinearSystem sys(A.unknowns);
    Coeff half = Coeff(1) / Coeff(2);

    // L_X h = f h
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            sys.add_equation(lie_h(S, A.X, a, b) - A.f * S.h.at({a, b}));
    // L_X theta = g theta
    for (int a = 0; a < n; ++a)
        sys.add_equation(lie_theta(S, A.X, a) - A.g * S.theta.at({a}));

    if (kind.projective) {
        Connection C = connection(S);
        // L_X Gamma^a_bc = delta^a_(b phi_c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    LinExpr rhs(S.ctx);
                    if (a == b) rhs += A.phi[c].scaled(half);
                    if (a == c) rhs += A.phi[b].scaled(half);
                    sys.add_equation(lie_gamma(S, C.gamma, A.X, a, b, c) - rhs);
                }
        // compatibility constraints, with the equations substituted in:
        // (d_c f) h^{ab} + delta^a_(c phi_d) h^{db} + delta^b_(c phi_d) h^{ad} = 0
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) {
                    LinExpr e = A.f.diff(c) * S.h.at({a, b});
                    for (int d = 0; d < n; ++d) {
                        LinExpr pa(S.ctx);
                        if (a == c) pa += A.phi[d].scaled(half);
                        if (a == d) pa += A.phi[c].scaled(half);
                        e += pa * S.h.at({d, b});
                        LinExpr pb(S.ctx);
                        if (b == c) pb += A.phi[d].scaled(half);
                        if (b == d) pb += A.phi[c].scaled(half);
                        e += pb * S.h.at({a, d});
                    }
                    sys.add_equation(e);
                }
        // (d_c g) theta_a - delta^d_(c phi_a) theta_d = 0
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a) {
                LinExpr e = A.g.diff(c) * S.theta.at({a});
                e -= (A.phi[a] * S.theta.at({c})).scaled(half);
                e -= (A.phi[c] * S.theta.at({a})).scaled(half);
                sys.add_equation(e);
            }
    }
    if (kind.fg_zero) sys.add_equation(A.f + A.g);

    SolveResult res = solve(std::move(sys));
    CanonicalFamily fam = canonicalize_family(res, A.n_primary);
    VectorFieldBasis out;
    out.algebra = kind.label;
    out.ansatz_degree = deg;
    out.n_trivial = (int)fam.trivial.size();
    for (const auto& v : fam.primary) {
        VectorField X(S.ctx, n);
        for (int a = 0; a < n; ++a) X.comp[a] = A.X[a].evaluate(v);
        out.fields.push_back(std::move(X));
        ConformalData cd;
        cd.f = A.f.evaluate(v);
        cd.g = A.g.evaluate(v);
        if (kind.projective)
            for (int a = 0; a < n; ++a) cd.phi.push_back(A.phi[a].evaluate(v));
        out.conformal.push_back(std::move(cd));
    }
    return out;
}

} // namespace

VectorFieldBasis solve_sk_vectors(const NCSpacetime& S, int deg) {
    if (!S.vomega)
        throw std::domain_error("solve_sk_vectors: spacetime is not of (V, Omega) type");
    if (deg < 2) throw std::invalid_argument("solve_sk_vectors: ansatz degree must be >= 2");
    return solve_vf(S, deg, {true, true, "sch"});
}

VectorFieldBasis solve_expanded_sch(const NCSpacetime& S, int deg) {
    if (!S.vomega)
        throw std::domain_error("solve_expanded_sch: spacetime is not of (V, Omega) type");
    if (deg < 2) throw std::invalid_argument("solve_expanded_sch: ansatz degree must be >= 2");
    return solve_vf(S, deg, {true, false, "sch~"});
}

VectorFieldBasis solve_cgal(const NCSpacetime& S, int deg) {
    return solve_vf(S, deg, {false, false, "cgal"});
}

std::vector<Expr> sk_residual(const NCSpacetime& S, const VectorField& X,
                              const ConformalData& cd) {
    const int n = S.d + 1;
    std::vector<LinExpr> XL;
    for (int a = 0; a < n; ++a) XL.push_back(LinExpr(X.comp[a]));
    std::vector<Expr> bad;
    auto push = [&](const LinExpr& e) {
        if (!e.cst.is_zero()) bad.push_back(e.cst);
    };
    Coeff half = Coeff(1) / Coeff(2);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            push(lie_h(S, XL, a, b) - LinExpr(cd.f * S.h.at({a, b})));
    for (int a = 0; a < n; ++a)
        push(lie_theta(S, XL, a) - LinExpr(cd.g * S.theta.at({a})));
    if (!cd.phi.empty()) {
        Connection C = connection(S);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    Expr rhs(S.ctx);
                    if (a == b) rhs = rhs + cd.phi[c].scaled(half);
                    if (a == c) rhs = rhs + cd.phi[b].scaled(half);
                    push(lie_gamma(S, C.gamma, XL, a, b, c) - LinExpr(rhs));
                }
    }
    return bad;
}

} // namespace ncsym
