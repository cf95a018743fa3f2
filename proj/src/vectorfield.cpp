#include "ncsym/vectorfield.hpp"
#include <sstream>

namespace ncsym {

std::string VectorField::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (int a = 0; a < size(); ++a) {
        if (comp[a].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << comp[a].str() << ")*d_" << names[a];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    VectorField r(X.ctx, X.size());
    for (int a = 0; a < X.size(); ++a) {
        Expr v(X.ctx);
        for (int b = 0; b < X.size(); ++b) {
            v = v + X.comp[b] * Y.comp[a].diff(b);
            v = v - Y.comp[b] * X.comp[a].diff(b);
        }
        r.comp[a] = v;
    }
    return r;
}

VectorField jacobi_residual(const VectorField& X, const VectorField& Y, const VectorField& Z) {
    VectorField r1 = lie_bracket(X, lie_bracket(Y, Z));
    VectorField r2 = lie_bracket(Y, lie_bracket(Z, X));
    VectorField r3 = lie_bracket(Z, lie_bracket(X, Y));
    for (int a = 0; a < r1.size(); ++a)
        r1.comp[a] = r1.comp[a] + r2.comp[a] + r3.comp[a];
    return r1;
}

namespace {

struct FlatKey {
    int comp;
    Mono mono;
    bool operator<(const FlatKey& o) const {
        if (comp != o.comp) return comp < o.comp;
        return MonoLess{}(mono, o.mono);
    }
};

// flatten a joint list over shared columns; all components are brought to
// the common rho denominator so the map is linear
std::vector<Row> flatten_joint(const std::vector<VectorField>& fs) {
    int K = 0;
    for (const auto& f : fs)
        for (const auto& e : f.comp) K = std::max(K, e.rho_pow());
    std::map<FlatKey, long> dict;
    std::vector<std::vector<std::pair<FlatKey, Coeff>>> raw;
    for (const auto& f : fs) {
        std::vector<std::pair<FlatKey, Coeff>> entries;
        for (int a = 0; a < f.size(); ++a) {
            const Expr& e = f.comp[a];
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
                dict.emplace(FlatKey{a, m}, 0);
                entries.push_back({FlatKey{a, m}, c});
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

std::vector<Row> flatten(const std::vector<VectorField>& fs) { return flatten_joint(fs); }

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
    std::vector<VectorField> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    auto rows = flatten_joint(joint);
    std::vector<Row> ra(rows.begin(), rows.begin() + a.size());
    std::vector<Row> rb(rows.begin() + a.size(), rows.end());
    return span_equal(std::move(ra), std::move(rb));
}

bool in_span(const VectorField& x, const std::vector<VectorField>& basis) {
    std::vector<VectorField> joint = basis;
    joint.push_back(x);
    auto rows = flatten_joint(joint);
    std::vector<Row> rb(rows.begin(), rows.end() - 1);
    int d0 = span_dim(rb);
    return d0 == span_dim(std::move(rows));
}

namespace {

void reduce_against(Row& r, const std::vector<Row>& echelon) {
    for (const auto& prow : echelon) {
        if (prow.empty()) continue;
        auto it = r.find(prow.begin()->first);
        if (it == r.end()) continue;
        Coeff f = -it->second;
        for (const auto& [c, v] : prow) {
            auto jt = r.find(c);
            if (jt == r.end()) {
                Coeff nv = f * v;
                if (!nv.is_zero()) r[c] = std::move(nv);
            } else {
                jt->second += f * v;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
    }
}

} // namespace

std::optional<std::pair<int, int>> closure_check(const std::vector<VectorField>& basis) {
    std::vector<VectorField> joint = basis;
    std::vector<std::pair<int, int>> which;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            joint.push_back(lie_bracket(basis[i], basis[j]));
            which.emplace_back((int)i, (int)j);
        }
    auto rows = flatten_joint(joint);
    std::vector<Row> base(rows.begin(), rows.begin() + basis.size());
    rref(base);
    for (size_t k = 0; k < which.size(); ++k) {
        Row r = rows[basis.size() + k];
        reduce_against(r, base);
        if (!r.empty()) return which[k];
    }
    return std::nullopt;
}

std::vector<std::vector<std::vector<Coeff>>>
structure_constants(const std::vector<VectorField>& basis) {
    const int n = (int)basis.size();
    std::vector<std::vector<std::vector<Coeff>>> c(
        n, std::vector<std::vector<Coeff>>(n, std::vector<Coeff>(n)));
    std::vector<VectorField> joint = basis;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) joint.push_back(lie_bracket(basis[i], basis[j]));
    auto rows = flatten_joint(joint);
    size_t br = basis.size();
    for (int i = 0, k = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            LinearSystem sys(n);
            std::map<long, Row> cols;
            for (int b = 0; b < n; ++b)
                for (const auto& [col, v] : rows[b]) cols[col][b] = v;
            for (const auto& [col, v] : rows[br + k]) {
                auto& row = cols[col];
                row[CONST_COL] = -v;
            }
            for (auto& [col, row] : cols) sys.rows.push_back(row);
            SolveResult res = solve(std::move(sys));
            if (!res.consistent)
                throw std::domain_error("structure_constants: basis does not close");
            for (auto& [b, v] : res.particular) c[i][j][b] = v;
            for (int b = 0; b < n; ++b) c[j][i][b] = -c[i][j][b];
        }
    return c;
}

} // namespace ncsym
