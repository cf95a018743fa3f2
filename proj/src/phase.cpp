#include "ncsym/phase.hpp"
#include <algorithm>
#include <functional>

namespace ncsym {

PhaseSpace make_phase_space(const NCSpacetime& S) {
    PhaseSpace P;
    P.S = &S;
    P.d = S.d;
    std::vector<Variable> vars = S.ctx->vars;
    std::vector<std::string> coord_names;
    for (int a = 0; a <= S.d; ++a) coord_names.push_back(S.ctx->vars[a].name);
    for (auto& n : coord_names) vars.push_back({"p_" + n});
    P.pctx = Context::make(std::move(vars), S.ctx->radical_vars);
    return P;
}

Expr lift_to_phase(const PhaseSpace& P, const Expr& e) {
    std::vector<int> map(e.ctx()->size());
    for (int i = 0; i < e.ctx()->size(); ++i) map[i] = i;
    return e.reindex(P.pctx, map);
}

Expr project_to_chart(const PhaseSpace& P, const Expr& e) {
    const ContextPtr& sctx = P.S->ctx;
    std::vector<int> map(P.pctx->size(), -1);
    for (int i = 0; i < sctx->size(); ++i) map[i] = i;
    return e.reindex(sctx, map);
}

Expr hamiltonian(const PhaseSpace& P) {
    const NCSpacetime& S = *P.S;
    const int n = P.dim();
    std::vector<Expr> Pi(n, Expr(P.pctx));
    for (int a = 0; a < n; ++a)
        Pi[a] = Expr::variable(P.pctx, P.mom(a)) + lift_to_phase(P, S.A.at({a}));
    Expr H(P.pctx);
    Coeff half = Coeff(1) / Coeff(2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            H = H + (lift_to_phase(P, S.h.at({a, b})) * Pi[a] * Pi[b]).scaled(half);
    for (int a = 0; a < n; ++a) H = H - lift_to_phase(P, S.U.at({a})) * Pi[a];
    return H;
}

PhaseFlow geodesic_spray(const PhaseSpace& P) {
    const NCSpacetime& S = *P.S;
    const int n = P.dim();
    PhaseFlow G;
    G.dx.assign(n, Expr(P.pctx));
    G.dp.assign(n, Expr(P.pctx));
    std::vector<Expr> Pi(n, Expr(P.pctx));
    for (int b = 0; b < n; ++b)
        Pi[b] = Expr::variable(P.pctx, P.mom(b)) + lift_to_phase(P, S.A.at({b}));
    Coeff half = Coeff(1) / Coeff(2);
    for (int a = 0; a < n; ++a) {
        // dx component: U^a - h^{ab} Pi_b
        Expr v = lift_to_phase(P, S.U.at({a}));
        for (int b = 0; b < n; ++b) v = v - lift_to_phase(P, S.h.at({a, b})) * Pi[b];
        G.dx[a] = v;
        // dp component: 1/2 d_a h^{cd} Pi_c Pi_d + h^{cd} Pi_c d_a A_d
        //               - d_a U^b Pi_b - U^b d_a A_b
        Expr w(P.pctx);
        for (int c = 0; c < n; ++c)
            for (int dd = 0; dd < n; ++dd) {
                w = w + (lift_to_phase(P, S.h.at({c, dd}).diff(a)) * Pi[c] * Pi[dd]).scaled(half);
                w = w + lift_to_phase(P, S.h.at({c, dd})) * Pi[c]
                        * lift_to_phase(P, S.A.at({dd}).diff(a));
            }
        for (int b = 0; b < n; ++b) {
            w = w - lift_to_phase(P, S.U.at({b}).diff(a)) * Pi[b];
            w = w - lift_to_phase(P, S.U.at({b})) * lift_to_phase(P, S.A.at({b}).diff(a));
        }
        G.dp[a] = w;
    }
    return G;
}

PhaseFlow hamiltonian_vector_field(const PhaseSpace& P, const Expr& H) {
    const int n = P.dim();
    PhaseFlow X;
    X.dx.assign(n, Expr(P.pctx));
    X.dp.assign(n, Expr(P.pctx));
    for (int a = 0; a < n; ++a) {
        X.dx[a] = -H.diff(P.mom(a));
        X.dp[a] = H.diff(P.coord(a));
    }
    return X;
}

Expr poisson(const PhaseSpace& P, const Expr& f, const Expr& g) {
    Expr r(P.pctx);
    for (int a = 0; a < P.dim(); ++a) {
        r = r + f.diff(P.mom(a)) * g.diff(P.coord(a));
        r = r - f.diff(P.coord(a)) * g.diff(P.mom(a));
    }
    return r;
}

LinExpr poisson(const PhaseSpace& P, const LinExpr& f, const Expr& g) {
    LinExpr r(P.pctx);
    for (int a = 0; a < P.dim(); ++a) {
        r = r + f.diff(P.mom(a)) * g.diff(P.coord(a));
        r = r - f.diff(P.coord(a)) * g.diff(P.mom(a));
    }
    return r;
}

Expr SymComponents::get(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = c.find(idx);
    return it == c.end() ? Expr(ctx) : it->second;
}

void SymComponents::set(std::vector<int> idx, Expr v) {
    std::sort(idx.begin(), idx.end());
    if (v.is_zero()) c.erase(idx);
    else c[idx] = std::move(v);
}

bool SymComponents::is_zero() const {
    for (auto& [k, v] : c)
        if (!v.is_zero()) return false;
    return true;
}

long SymComponents::orderings(const std::vector<int>& idx) {
    long fact = 1;
    for (size_t k = 2; k <= idx.size(); ++k) fact *= (long)k;
    long denom = 1;
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        for (size_t k = 2; k <= j - i; ++k) denom *= (long)k;
        i = j;
    }
    return fact / denom;
}

Expr lift(const PhaseSpace& P, const SymComponents& X) {
    Expr out(P.pctx);
    for (const auto& [idx, v] : X.c) {
        Expr mono = Expr::integer(P.pctx, 1);
        for (int a : idx) mono = mono * Expr::variable(P.pctx, P.mom(a));
        out = out + (lift_to_phase(P, v) * mono).scaled(Coeff(SymComponents::orderings(idx)));
    }
    return out;
}

SymComponents unlift(const PhaseSpace& P, const Expr& poly, int rank) {
    SymComponents X(P.S->ctx, P.dim(), rank);
    std::map<std::vector<int>, TermMap> buckets;
    for (const auto& [m, c] : poly.terms()) {
        std::vector<int> idx;
        for (int a = 0; a < P.dim(); ++a)
            for (int k = 0; k < m.e[P.mom(a)]; ++k) idx.push_back(a);
        if ((int)idx.size() != rank)
            throw std::domain_error("unlift: polynomial not momentum-homogeneous of the given rank");
        Mono stripped = m;
        for (int a = 0; a < P.dim(); ++a) stripped.e[P.mom(a)] = 0;
        buckets[idx][stripped] = c;
    }
    for (auto& [idx, t] : buckets) {
        Expr v = Expr::from_terms(P.pctx, poly.rho_pow(), std::move(t));
        Coeff w = Coeff(1) / Coeff(SymComponents::orderings(idx));
        X.set(idx, project_to_chart(P, v.scaled(w)));
    }
    return X;
}

SymComponents schouten_bracket(const PhaseSpace& P, const SymComponents& X,
                               const SymComponents& Y) {
    Expr b = poisson(P, lift(P, X), lift(P, Y));
    int rank = X.rank + Y.rank - 1;
    return unlift(P, b, rank);
}

Expr conserved_quantity(const PhaseSpace& P, const SymTensor& T) {
    Expr q = lift(P, T.X);
    for (const auto& chi : T.chi) q = q + lift(P, chi);
    return q;
}

namespace {

std::vector<Row> flatten_symbols_joint(const std::vector<SymComponents>& xs) {
    int K = 0;
    for (const auto& x : xs)
        for (const auto& [idx, e] : x.c) K = std::max(K, e.rho_pow());
    struct Key {
        std::vector<int> idx;
        Mono mono;
        bool operator<(const Key& o) const {
            if (idx != o.idx) return idx < o.idx;
            return MonoLess{}(mono, o.mono);
        }
    };
    std::map<Key, long> dict;
    std::vector<std::vector<std::pair<Key, Coeff>>> raw;
    for (const auto& x : xs) {
        std::vector<std::pair<Key, Coeff>> entries;
        for (const auto& [idx, e] : x.c) {
            if (e.is_zero()) continue;
            TermMap t = e.terms();
            for (int k = e.rho_pow(); k < K; ++k) {
                TermMap rho;
                for (int v : e.ctx()->radical_vars) {
                    Mono m;
                    m.e.assign(e.ctx()->size(), 0);
                    m.e[v] = 2;
                    rho[m] = Coeff(1);
                }
                t = term_mul(*e.ctx(), t, rho);
            }
            for (const auto& [m, c] : t) {
                Key key{idx, m};
                dict.emplace(key, 0);
                entries.push_back({key, c});
            }
        }
        raw.push_back(std::move(entries));
    }
    long id = 0;
    for (auto& [k, v] : dict) v = id++;
    std::vector<Row> rows;
    for (auto& entries : raw) {
        Row r;
        for (auto& [k, c] : entries) {
            auto it = r.find(dict[k]);
            if (it == r.end()) r[dict[k]] = c;
            else it->second += c;
        }
        for (auto it = r.begin(); it != r.end();)
            it = it->second.is_zero() ? r.erase(it) : std::next(it);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

bool same_symbol_span(const std::vector<SymComponents>& a,
                      const std::vector<SymComponents>& b) {
    std::vector<SymComponents> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    auto rows = flatten_symbols_joint(joint);
    std::vector<Row> ra(rows.begin(), rows.begin() + a.size());
    std::vector<Row> rb(rows.begin() + a.size(), rows.end());
    return span_equal(std::move(ra), std::move(rb));
}

bool symbol_in_span(const SymComponents& x, const std::vector<SymComponents>& basis) {
    std::vector<SymComponents> joint = basis;
    joint.push_back(x);
    auto rows = flatten_symbols_joint(joint);
    std::vector<Row> rb(rows.begin(), rows.end() - 1);
    return span_dim(rb) == span_dim(std::move(rows));
}

int symbol_span_dim(const std::vector<SymComponents>& xs) {
    return span_dim(flatten_symbols_joint(xs));
}

namespace {

std::vector<std::vector<int>> sorted_indices(int dim, int rank) {
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

bool spacetime_uses_radical(const NCSpacetime& S) {
    auto uses = [](const Expr& e) {
        if (e.rho_pow() > 0) return true;
        for (const auto& [m, c] : e.terms())
            if (m.r) return true;
        return false;
    };
    for (const auto& e : S.A.components())
        if (uses(e)) return true;
    for (const auto& e : S.h.components())
        if (uses(e)) return true;
    for (const auto& e : S.U.components())
        if (uses(e)) return true;
    return false;
}

struct TensorAnsatz {
    Unknowns unknowns;
    int n_primary = 0;
    std::map<std::vector<int>, LinExpr> X;
    std::vector<std::map<std::vector<int>, LinExpr>> chi, f;
};

TensorAnsatz build_tensor_ansatz(const PhaseSpace& P, int rank, int deg, bool with_f) {
    const NCSpacetime& S = *P.S;
    TensorAnsatz A;
    std::vector<int> coords;
    for (int a = 0; a <= S.d; ++a) coords.push_back(a);
    bool radical = spacetime_uses_radical(S) && P.pctx->has_radical();
    for (const auto& idx : sorted_indices(P.dim(), rank))
        A.X[idx] = poly_ansatz(P.pctx, coords, deg, A.unknowns, "X");
    A.n_primary = A.unknowns.size();
    // lower-order functions may carry extra polynomial degree on curved
    // backgrounds (one step per descent from the top symbol)
    A.chi.resize(rank);
    for (int m = 0; m < rank; ++m)
        for (const auto& idx : sorted_indices(P.dim(), m)) {
            int cdeg = deg + (rank - m);
            LinExpr le = poly_ansatz(P.pctx, coords, cdeg, A.unknowns, "chi");
            if (radical)
                le += radical_ansatz(P.pctx, coords, cdeg + 1, A.unknowns, "chi");
            A.chi[m][idx] = le;
        }
    if (with_f) {
        A.f.resize(rank);
        for (int m = 0; m < rank; ++m)
            for (const auto& idx : sorted_indices(P.dim(), m)) {
                int fdeg = deg + (rank - m);
                LinExpr le = poly_ansatz(P.pctx, coords, fdeg, A.unknowns, "f");
                if (radical)
                    le += radical_ansatz(P.pctx, coords, fdeg + 1, A.unknowns, "f");
                A.f[m][idx] = le;
            }
    }
    return A;
}

LinExpr lift_lin(const PhaseSpace& P, const std::map<std::vector<int>, LinExpr>& comp) {
    LinExpr out(P.pctx);
    for (const auto& [idx, le] : comp) {
        Expr mono = Expr::integer(P.pctx, 1);
        for (int a : idx) mono = mono * Expr::variable(P.pctx, P.mom(a));
        out += (le * mono).scaled(Coeff(SymComponents::orderings(idx)));
    }
    return out;
}

SymComponents eval_components(const PhaseSpace& P,
                              const std::map<std::vector<int>, LinExpr>& comp, int rank,
                              const std::map<int, Coeff>& values) {
    SymComponents X(P.S->ctx, P.dim(), rank);
    for (const auto& [idx, le] : comp)
        X.set(idx, project_to_chart(P, le.evaluate(values)));
    return X;
}

TensorSolveResult solve_tensor(const NCSpacetime& S, int rank, int deg, bool sk) {
    if (rank < 1) throw std::invalid_argument("tensor solver: rank must be >= 1");
    PhaseSpace P = make_phase_space(S);
    TensorAnsatz A = build_tensor_ansatz(P, rank, deg, sk);
    Expr H = hamiltonian(P);
    LinExpr Q = lift_lin(P, A.X);
    for (int m = 0; m < rank; ++m) Q += lift_lin(P, A.chi[m]);
    LinExpr eq = poisson(P, Q, H);
    if (sk) {
        LinExpr fsum(P.pctx);
        for (int m = 0; m < rank; ++m) fsum += lift_lin(P, A.f[m]);
        eq -= fsum * H;
    }
    LinearSystem sys(A.unknowns);
    sys.add_equation(eq);
    SolveResult res = solve(std::move(sys));
    CanonicalFamily fam = canonicalize_family(res, A.n_primary);
    TensorSolveResult out;
    out.rank = rank;
    out.ansatz_degree = deg;
    out.n_trivial = (int)fam.trivial.size();
    for (const auto& v : fam.primary) {
        SymTensor T;
        T.X = eval_components(P, A.X, rank, v);
        for (int m = 0; m < rank; ++m)
            T.chi.push_back(eval_components(P, A.chi[m], m, v));
        if (sk)
            for (int m = 0; m < rank; ++m)
                T.f.push_back(eval_components(P, A.f[m], m, v));
        out.tensors.push_back(std::move(T));
    }
    return out;
}

} // namespace

TensorSolveResult solve_killing_tensors(const NCSpacetime& S, int rank, int deg) {
    return solve_tensor(S, rank, deg, false);
}

TensorSolveResult solve_sk_tensors(const NCSpacetime& S, int rank, int deg) {
    return solve_tensor(S, rank, deg, true);
}

VectorFieldBasis solve_killing_vectors(const NCSpacetime& S, int deg) {
    TensorSolveResult r = solve_killing_tensors(S, 1, deg);
    VectorFieldBasis b;
    b.algebra = "killing";
    b.ansatz_degree = deg;
    b.n_trivial = r.n_trivial;
    for (const auto& T : r.tensors) {
        VectorField X(S.ctx, S.d + 1);
        for (int a = 0; a <= S.d; ++a) X.comp[a] = T.X.get({a});
        b.fields.push_back(std::move(X));
        b.chi0.push_back(T.chi[0].get({}));
    }
    return b;
}

} // namespace ncsym
