#include "ncsym/geometry.hpp"
#include <stdexcept>

namespace ncsym {

namespace {

int eps3(int i, int j, int k) {
    // spatial indices 1..3, eps(1,2,3) = +1
    if (i == j || j == k || i == k) return 0;
    if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
        (i == 3 && j == 1 && k == 2))
        return 1;
    return -1;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::domain_error("geometry: " + msg);
}

} // namespace

ContextPtr spacetime_context(int d) {
    std::vector<Variable> vars;
    vars.push_back({"t"});
    if (d == 3) {
        vars.push_back({"x"});
        vars.push_back({"y"});
        vars.push_back({"z"});
    } else {
        for (int i = 1; i <= d; ++i) vars.push_back({"x" + std::to_string(i)});
    }
    vars.push_back({"pi"});
    std::vector<int> rad;
    if (d >= 2)
        for (int i = 1; i <= d; ++i) rad.push_back(i);
    return Context::make(std::move(vars), std::move(rad));
}

NCSpacetime make_flat_spacetime(int d) {
    ContextPtr ctx = spacetime_context(d);
    NCSpacetime S;
    S.ctx = ctx;
    S.d = d;
    int n = d + 1;
    S.h = TensorField<Expr>(ctx, n, 2, 0);
    S.theta = TensorField<Expr>(ctx, n, 0, 1);
    S.U = TensorField<Expr>(ctx, n, 1, 0);
    S.A = TensorField<Expr>(ctx, n, 0, 1);
    for (int i = 1; i <= d; ++i) S.h.at({i, i}) = Expr::integer(ctx, 1);
    S.theta.at({0}) = Expr::integer(ctx, 1);
    S.U.at({0}) = Expr::integer(ctx, 1);
    S.vomega = VOmegaData{Expr(ctx), Expr(ctx)};
    return S;
}

namespace {

// vector potential with curl A = B for a divergence-free polynomial B,
// via the linear homotopy A_i = -eps_{ijk} x^j int_0^1 s B^k(sx) ds
std::vector<Expr> vector_potential(const ContextPtr& ctx, const std::vector<Expr>& B) {
    std::vector<Expr> A(3, Expr(ctx));
    for (int k = 1; k <= 3; ++k) {
        const Expr& Bk = B[k - 1];
        require(Bk.rho_pow() == 0, "Coriolis field must be polynomial");
        for (const auto& [mono, coeff] : Bk.terms()) {
            require(!mono.r, "Coriolis field must be polynomial");
            int deg = mono.total_degree();
            Coeff w = coeff / Coeff(deg + 2);
            Expr term = Expr::from_terms(ctx, 0, TermMap{{mono, w}});
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    int s = eps3(i, j, k);
                    if (!s) continue;
                    Expr piece = Expr::variable(ctx, j) * term;
                    if (s > 0) A[i - 1] = A[i - 1] - piece;
                    else A[i - 1] = A[i - 1] + piece;
                }
        }
    }
    return A;
}

} // namespace

NCSpacetime make_vomega_spacetime(const Expr& V, const Expr& Omega) {
    ContextPtr ctx = V.ctx();
    require(ctx != nullptr && ctx == Omega.ctx(), "V and Omega need a common chart");
    NCSpacetime S = make_flat_spacetime(3);
    // reparse inputs into the canonical flat chart if contexts differ in identity
    require(ctx->size() == S.ctx->size(), "expected a d=3 spacetime chart");
    std::vector<int> idmap(ctx->size());
    for (int i = 0; i < ctx->size(); ++i) idmap[i] = S.ctx->require(ctx->vars[i].name);
    Expr Vc = V.reindex(S.ctx, idmap);
    Expr Oc = Omega.reindex(S.ctx, idmap);
    ctx = S.ctx;
    require(Vc.degree_in(0) == 0 && Oc.degree_in(0) == 0,
            "V and Omega must not depend on t");
    // A = -V dt + A_Omega with curl A_Omega = -2 grad Omega, which makes
    // F = dA reproduce Gamma^i_jt = eps^{ilk} delta_jl d_k Omega
    std::vector<Expr> gradm2(3, Expr(ctx));
    for (int i = 1; i <= 3; ++i) gradm2[i - 1] = Oc.diff(i).scaled(Coeff(-2));
    std::vector<Expr> AOm = vector_potential(ctx, gradm2);
    S.A.at({0}) = -Vc;
    for (int i = 1; i <= 3; ++i) S.A.at({i}) = AOm[i - 1];
    S.vomega = VOmegaData{Vc, Oc};
    return S;
}

NCSpacetime make_spacetime(ContextPtr ctx, int d, TensorField<Expr> h,
                           TensorField<Expr> theta, TensorField<Expr> U,
                           TensorField<Expr> A) {
    NCSpacetime S;
    S.ctx = ctx;
    S.d = d;
    S.h = std::move(h);
    S.theta = std::move(theta);
    S.U = std::move(U);
    S.A = std::move(A);
    int n = d + 1;
    require(S.h.symmetric_in(0, 1), "h must be symmetric");
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            require(S.h.at({a, b}).is_constant(), "h must have constant components");
        }
        require(S.theta.at({a}).is_constant(), "theta must have constant components");
    }
    // h(theta, .) = 0
    for (int a = 0; a < n; ++a) {
        Expr s(ctx);
        for (int b = 0; b < n; ++b) s = s + S.h.at({a, b}) * S.theta.at({b});
        require(s.is_zero(), "theta must span the kernel of h");
    }
    // d theta = 0
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            require((S.theta.at({b}).diff(a) - S.theta.at({a}).diff(b)).is_zero(),
                    "theta must be closed");
    // theta(U) = 1
    Expr tu(ctx);
    for (int a = 0; a < n; ++a) tu = tu + S.theta.at({a}) * S.U.at({a});
    require((tu - Expr::integer(ctx, 1)).is_zero(), "theta(U) must equal 1");
    // rank d
    std::vector<Row> hrows;
    for (int a = 0; a < n; ++a) {
        Row r;
        for (int b = 0; b < n; ++b) {
            Coeff c = S.h.at({a, b}).constant_value();
            if (!c.is_zero()) r[b] = c;
        }
        hrows.push_back(std::move(r));
    }
    require(span_dim(hrows) == d, "h must have rank d");
    return S;
}

TensorField<Expr> lower_metric(const NCSpacetime& S) {
    const int n = S.dim();
    ContextPtr ctx = S.ctx;
    // Gauss-Jordan of the constant matrix h with an identity transform
    std::vector<std::vector<Coeff>> H(n, std::vector<Coeff>(n)), E(n, std::vector<Coeff>(n));
    for (int a = 0; a < n; ++a) {
        E[a][a] = Coeff(1);
        for (int b = 0; b < n; ++b) H[a][b] = S.h.at({a, b}).constant_value();
    }
    std::vector<int> pivot_col(n, -1);
    int prow = 0;
    for (int col = 0; col < n && prow < n; ++col) {
        int sel = -1;
        for (int r = prow; r < n; ++r)
            if (!H[r][col].is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(H[sel], H[prow]);
        std::swap(E[sel], E[prow]);
        Coeff inv = H[prow][col].inv();
        for (int c = 0; c < n; ++c) { H[prow][c] *= inv; E[prow][c] *= inv; }
        for (int r = 0; r < n; ++r) {
            if (r == prow || H[r][col].is_zero()) continue;
            Coeff f = H[r][col];
            for (int c = 0; c < n; ++c) {
                H[r][c] -= f * H[prow][c];
                E[r][c] -= f * E[prow][c];
            }
        }
        pivot_col[prow] = col;
        ++prow;
    }
    TensorField<Expr> hl(ctx, n, 0, 2);
    for (int c = 0; c < n; ++c) {
        // w^a = delta^a_c - theta_c U^a
        std::vector<Expr> w(n, Expr(ctx));
        for (int a = 0; a < n; ++a) {
            if (a == c) w[a] = Expr::integer(ctx, 1);
            w[a] = w[a] - S.theta.at({c}) * S.U.at({a});
        }
        // y = E w, then v_pivotcol = y_row (free components zero)
        std::vector<Expr> v(n, Expr(ctx));
        for (int rw = 0; rw < prow; ++rw) {
            Expr y(ctx);
            for (int a = 0; a < n; ++a) y = y + w[a].scaled(E[rw][a]);
            v[pivot_col[rw]] = y;
        }
        // consistency of the particular solution
        for (int a = 0; a < n; ++a) {
            Expr s(ctx);
            for (int b = 0; b < n; ++b) s = s + v[b].scaled(S.h.at({a, b}).constant_value());
            require((s - w[a]).is_zero(), "h_ab defining system is inconsistent");
        }
        // fix the kernel component with h_ab U^b = 0
        Expr fix(ctx);
        for (int b = 0; b < n; ++b) fix = fix + v[b] * S.U.at({b});
        for (int b = 0; b < n; ++b) v[b] = v[b] - fix * S.theta.at({b});
        for (int b = 0; b < n; ++b) hl.at({b, c}) = v[b];
    }
    require(hl.symmetric_in(0, 1), "h_ab solution is not symmetric");
    for (int a = 0; a < n; ++a) {
        Expr s(ctx);
        for (int b = 0; b < n; ++b) s = s + hl.at({a, b}) * S.U.at({b});
        require(s.is_zero(), "h_ab U^b must vanish");
    }
    return hl;
}

TensorField<Expr> field_strength(const NCSpacetime& S) {
    const int n = S.dim();
    TensorField<Expr> F(S.ctx, n, 0, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            F.at({a, b}) = S.A.at({b}).diff(a) - S.A.at({a}).diff(b);
    return F;
}

Connection connection(const NCSpacetime& S) {
    return connection_from_F(S, field_strength(S));
}

Connection connection_from_F(const NCSpacetime& S, const TensorField<Expr>& F) {
    const int n = S.dim();
    ContextPtr ctx = S.ctx;
    TensorField<Expr> hl = lower_metric(S);
    Connection C;
    C.gamma = TensorField<Expr>(ctx, n, 1, 2);
    Coeff half = Coeff(1) / Coeff(2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) {
                Expr g(ctx);
                for (int dd = 0; dd < n; ++dd) {
                    Expr metric_part = hl.at({c, dd}).diff(b) + hl.at({b, dd}).diff(c)
                                       - hl.at({b, c}).diff(dd);
                    g = g + (S.h.at({a, dd}) * metric_part).scaled(half);
                    Expr fpart = S.theta.at({b}) * F.at({c, dd})
                                 + S.theta.at({c}) * F.at({b, dd});
                    g = g + (S.h.at({a, dd}) * fpart).scaled(half);
                }
                Expr clock = (S.theta.at({c}).diff(b) + S.theta.at({b}).diff(c)).scaled(half);
                g = g + clock * S.U.at({a});
                C.gamma.at({a, b, c}) = g;
                C.gamma.at({a, c, b}) = g;
            }
    return C;
}

TensorField<Expr> riemann(const Connection& C, ContextPtr ctx, int n) {
    TensorField<Expr> R(ctx, n, 1, 3);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Expr v = C.gamma.at({a, d, b}).diff(c) - C.gamma.at({a, c, b}).diff(d);
                    for (int e = 0; e < n; ++e) {
                        v = v + C.gamma.at({a, c, e}) * C.gamma.at({e, d, b});
                        v = v - C.gamma.at({a, d, e}) * C.gamma.at({e, c, b});
                    }
                    R.at({a, b, c, d}) = v;
                }
    return R;
}

TensorField<Expr> riemann(const NCSpacetime& S) {
    return riemann(connection(S), S.ctx, S.dim());
}

TensorField<Expr> ricci(const TensorField<Expr>& riem) {
    int n = riem.dim();
    TensorField<Expr> ric(riem.ctx(), n, 0, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Expr v(riem.ctx());
            for (int c = 0; c < n; ++c) v = v + riem.at({c, a, c, b});
            ric.at({a, b}) = v;
        }
    return ric;
}

TensorField<Expr> ricci(const NCSpacetime& S) { return ricci(riemann(S)); }

bool check_trautman(const NCSpacetime& S) { return check_trautman(S, connection(S)); }

bool check_trautman(const NCSpacetime& S, const Connection& C) {
    const int n = S.dim();
    TensorField<Expr> R = riemann(C, S.ctx, n);
    Coeff half = Coeff(1) / Coeff(2);
    for (int b = 0; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
            for (int d = 0; d < n; ++d)
                for (int e = d; e < n; ++e) {
                    Expr v(S.ctx);
                    for (int a = 0; a < n; ++a) {
                        Expr rsym = (R.at({c, d, e, a}) + R.at({c, e, d, a})).scaled(half);
                        Expr rsym2 = (R.at({b, d, e, a}) + R.at({b, e, d, a})).scaled(half);
                        v = v + (S.h.at({a, b}) * rsym - S.h.at({a, c}) * rsym2).scaled(half);
                    }
                    if (!v.is_zero()) return false;
                }
    return true;
}

TensorField<Expr> field_equation_residual(const NCSpacetime& S, const Expr& rho_mass,
                                          const Expr& G) {
    TensorField<Expr> ric = ricci(S);
    Expr pi = Expr::variable(S.ctx, "pi");
    Expr factor = Expr::integer(S.ctx, 4) * pi * G * rho_mass;
    int n = S.dim();
    TensorField<Expr> res(S.ctx, n, 0, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            res.at({a, b}) = ric.at({a, b}) - factor * S.theta.at({a}) * S.theta.at({b});
    return res;
}

TensorField<Expr> covariant_deriv_h(const NCSpacetime& S, const Connection& C) {
    int n = S.dim();
    TensorField<Expr> r(S.ctx, n, 2, 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Expr v = S.h.at({a, b}).diff(c);
                for (int d = 0; d < n; ++d) {
                    v = v + C.gamma.at({a, c, d}) * S.h.at({d, b});
                    v = v + C.gamma.at({b, c, d}) * S.h.at({a, d});
                }
                r.at({a, b, c}) = v;
            }
    return r;
}

TensorField<Expr> covariant_deriv_theta(const NCSpacetime& S, const Connection& C) {
    int n = S.dim();
    TensorField<Expr> r(S.ctx, n, 0, 2);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            Expr v = S.theta.at({a}).diff(c);
            for (int d = 0; d < n; ++d) v = v - C.gamma.at({d, c, a}) * S.theta.at({d});
            r.at({a, c}) = v;
        }
    return r;
}

} // namespace ncsym
