#include "ncsym/linsys.hpp"
#include <algorithm>
#include <functional>

namespace ncsym {

LinExpr LinExpr::operator+(const LinExpr& o) const {
    LinExpr r = *this;
    r.cst = r.cst + o.cst;
    for (auto& [j, e] : o.lin) {
        auto it = r.lin.find(j);
        if (it == r.lin.end()) r.lin[j] = e;
        else {
            it->second = it->second + e;
            if (it->second.is_zero()) r.lin.erase(it);
        }
    }
    return r;
}

LinExpr LinExpr::operator-() const {
    LinExpr r = *this;
    r.cst = -r.cst;
    for (auto& [j, e] : r.lin) e = -e;
    return r;
}

LinExpr LinExpr::operator-(const LinExpr& o) const { return *this + (-o); }

LinExpr LinExpr::operator*(const Expr& e) const {
    LinExpr r = *this;
    r.cst = r.cst * e;
    for (auto it = r.lin.begin(); it != r.lin.end();) {
        it->second = it->second * e;
        it = it->second.is_zero() ? r.lin.erase(it) : std::next(it);
    }
    return r;
}

LinExpr LinExpr::scaled(const Coeff& c) const {
    LinExpr r = *this;
    r.cst = r.cst.scaled(c);
    for (auto it = r.lin.begin(); it != r.lin.end();) {
        it->second = it->second.scaled(c);
        it = it->second.is_zero() ? r.lin.erase(it) : std::next(it);
    }
    return r;
}

LinExpr LinExpr::diff(int var) const {
    LinExpr r(ctx);
    r.cst = cst.diff(var);
    for (auto& [j, e] : lin) {
        Expr d = e.diff(var);
        if (!d.is_zero()) r.lin[j] = d;
    }
    return r;
}

Expr LinExpr::evaluate(const std::map<int, Coeff>& values) const {
    Expr e = cst;
    for (auto& [j, c] : lin) {
        auto it = values.find(j);
        if (it != values.end() && !it->second.is_zero()) e = e + c.scaled(it->second);
    }
    return e;
}

void LinearSystem::add_equation(const LinExpr& le) {
    // clear the shared rho denominator, then match per monomial
    int K = le.cst.rho_pow();
    for (auto& [j, e] : le.lin) K = std::max(K, e.rho_pow());
    ContextPtr ctx = le.ctx;
    std::map<Mono, Row, MonoLess> by_mono;
    auto scatter = [&](const Expr& e, long col) {
        if (e.is_zero()) return;
        TermMap t = e.terms();
        for (int k = e.rho_pow(); k < K; ++k) {
            // multiply numerator by rho without re-normalizing
            TermMap rho;
            for (int v : ctx->radical_vars) {
                Mono m;
                m.e.assign(ctx->size(), 0);
                m.e[v] = 2;
                rho[m] = Coeff(1);
            }
            t = term_mul(*ctx, t, rho);
        }
        for (const auto& [m, c] : t) {
            auto& row = by_mono[m];
            auto it = row.find(col);
            if (it == row.end()) row[col] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    };
    for (auto& [j, e] : le.lin) scatter(e, j);
    scatter(le.cst, CONST_COL);
    for (auto& [m, row] : by_mono)
        if (!row.empty()) rows.push_back(std::move(row));
}

namespace {

void axpy(Row& target, const Coeff& factor, const Row& src) {
    for (const auto& [c, v] : src) {
        auto it = target.find(c);
        if (it == target.end()) {
            Coeff nv = factor * v;
            if (!nv.is_zero()) target[c] = std::move(nv);
        } else {
            it->second += factor * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

} // namespace

std::vector<long> rref(std::vector<Row>& rows) {
    // bucket by leading column, forward-eliminate, then back-substitute
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Row& r) { return r.empty(); }),
               rows.end());
    std::map<long, std::vector<Row>> buckets;
    for (auto& r : rows) buckets[r.begin()->first].push_back(std::move(r));
    rows.clear();

    std::vector<long> pivots;
    std::vector<Row> done;
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        long col = node.key();
        auto& bucket = node.mapped();
        // sparsest row as pivot keeps fill-in down; any choice gives the same RREF
        size_t best = 0;
        for (size_t i = 1; i < bucket.size(); ++i)
            if (bucket[i].size() < bucket[best].size()) best = i;
        Row piv = std::move(bucket[best]);
        bucket.erase(bucket.begin() + best);
        Coeff inv = piv.begin()->second.inv();
        for (auto& [c, v] : piv) v *= inv;
        for (auto& r : bucket) {
            Coeff f = -r.begin()->second;
            axpy(r, f, piv);
            r.erase(col);
            if (!r.empty()) buckets[r.begin()->first].push_back(std::move(r));
        }
        pivots.push_back(col);
        done.push_back(std::move(piv));
    }
    // back-substitution to reduced form
    for (int i = (int)done.size() - 2; i >= 0; --i) {
        for (size_t j = i + 1; j < done.size(); ++j) {
            auto it = done[i].find(pivots[j]);
            if (it != done[i].end()) {
                Coeff f = -it->second;
                axpy(done[i], f, done[j]);
            }
        }
    }
    rows = std::move(done);
    return pivots;
}

int span_dim(std::vector<Row> rows) {
    return (int)rref(rows).size();
}

bool span_equal(std::vector<Row> a, std::vector<Row> b) {
    auto pa = rref(a), pb = rref(b);
    return pa == pb && a == b;
}

SolveResult solve(LinearSystem sys) {
    SolveResult res;
    auto pivots = rref(sys.rows);
    std::vector<std::pair<long, Row>> pivrows;
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == CONST_COL) {
            res.consistent = false; // a nonzero constant equation survived
            return res;
        }
        pivrows.emplace_back(pivots[k], sys.rows[k]);
    }
    std::vector<bool> is_pivot(sys.n_unknowns, false);
    for (auto& [c, r] : pivrows) is_pivot[c] = true;
    for (int f = 0; f < sys.n_unknowns; ++f) {
        if (is_pivot[f]) continue;
        std::map<int, Coeff> v;
        v[f] = Coeff(1);
        for (auto& [p, row] : pivrows) {
            auto it = row.find(f);
            if (it != row.end()) v[(int)p] = -it->second;
        }
        res.basis.push_back(std::move(v));
    }
    for (auto& [p, row] : pivrows) {
        auto it = row.find(CONST_COL);
        if (it != row.end()) res.particular[(int)p] = -it->second;
    }
    return res;
}

std::vector<Mono> monomials_up_to(const ContextPtr& ctx, const std::vector<int>& vars,
                                  int deg) {
    std::vector<Mono> out;
    Mono base;
    base.e.assign(ctx->size(), 0);
    std::function<void(size_t, int, Mono&)> rec = [&](size_t pos, int left, Mono& cur) {
        if (pos == vars.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur.e[vars[pos]] = e;
            rec(pos + 1, left - e, cur);
        }
        cur.e[vars[pos]] = 0;
    };
    rec(0, deg, base);
    return out;
}

LinExpr poly_ansatz(ContextPtr ctx, const std::vector<int>& vars, int deg,
                    Unknowns& u, const std::string& prefix) {
    LinExpr le(ctx);
    for (const Mono& m : monomials_up_to(ctx, vars, deg)) {
        int id = u.add(prefix + "[" + std::to_string(u.size()) + "]");
        le.lin[id] = Expr::from_terms(ctx, 0, TermMap{{m, Coeff(1)}});
    }
    return le;
}

LinExpr radical_ansatz(ContextPtr ctx, const std::vector<int>& vars, int deg,
                       Unknowns& u, const std::string& prefix) {
    LinExpr le(ctx);
    for (Mono m : monomials_up_to(ctx, vars, deg)) {
        m.r = true;
        int id = u.add(prefix + "r[" + std::to_string(u.size()) + "]");
        le.lin[id] = Expr::from_terms(ctx, 1, TermMap{{m, Coeff(1)}});
    }
    return le;
}

CanonicalFamily canonicalize_family(const SolveResult& res, int n_primary) {
    std::vector<Row> rows;
    for (const auto& v : res.basis) {
        Row r;
        for (const auto& [j, c] : v) r[j] = c;
        rows.push_back(std::move(r));
    }
    rref(rows);
    CanonicalFamily fam;
    for (const auto& r : rows) {
        if (r.empty()) continue;
        std::map<int, Coeff> v;
        for (const auto& [c, val] : r) v[(int)c] = val;
        if (r.begin()->first < n_primary) fam.primary.push_back(std::move(v));
        else fam.trivial.push_back(std::move(v));
    }
    return fam;
}

} // namespace ncsym
