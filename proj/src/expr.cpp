#include "ncsym/expr.hpp"
#include <sstream>
#include <stdexcept>

namespace ncsym {

namespace {

Mono unit_mono(const Context& c) {
    Mono m;
    m.e.assign(c.size(), 0);
    return m;
}

// rho as a term map
TermMap rho_terms(const Context& c) {
    TermMap t;
    for (int v : c.radical_vars) {
        Mono m = unit_mono(c);
        m.e[v] = 2;
        t[m] = Coeff(1);
    }
    return t;
}

void add_term(TermMap& t, const Mono& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) t.emplace(m, c);
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

// exact division of a term map by rho; nullopt if not divisible
std::optional<TermMap> divide_rho(const Context& ctx, TermMap part) {
    if (ctx.radical_vars.empty()) return std::nullopt;
    TermMap rho = rho_terms(ctx);
    const Mono lead_rho = rho.rbegin()->first; // largest monomial of rho
    int lv = -1;
    for (int i = 0; i < ctx.size(); ++i)
        if (lead_rho.e[i] == 2) { lv = i; break; }
    TermMap q;
    while (!part.empty()) {
        Mono lm = part.rbegin()->first;
        Coeff lc = part.rbegin()->second;
        if (lm.e[lv] < 2) return std::nullopt;
        Mono qm = lm;
        qm.e[lv] -= 2;
        add_term(q, qm, lc);
        for (const auto& [rm, rc] : rho) {
            Mono pm = qm;
            for (int i = 0; i < ctx.size(); ++i) pm.e[i] += rm.e[i];
            pm.r = qm.r;
            add_term(part, pm, -(lc * rc));
        }
    }
    return q;
}

} // namespace

TermMap term_mul(const Context& ctx, const TermMap& a, const TermMap& b) {
    TermMap out;
    TermMap rho = ctx.has_radical() ? rho_terms(ctx) : TermMap{};
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono m;
            m.e.resize(ma.e.size());
            for (size_t i = 0; i < ma.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
            Coeff c = ca * cb;
            if (ma.r && mb.r) {
                // r * r = rho
                for (const auto& [rm, rc] : rho) {
                    Mono mm = m;
                    for (size_t i = 0; i < mm.e.size(); ++i) mm.e[i] += rm.e[i];
                    add_term(out, mm, c * rc);
                }
            } else {
                m.r = ma.r || mb.r;
                add_term(out, m, c);
            }
        }
    }
    return out;
}

void Expr::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    if (terms_.empty()) { rho_pow_ = 0; return; }
    while (rho_pow_ > 0) {
        TermMap even, odd;
        for (const auto& [m, c] : terms_) (m.r ? odd : even)[m] = c;
        auto qe = divide_rho(*ctx_, even);
        if (!qe) break;
        std::optional<TermMap> qo;
        if (odd.empty()) qo = TermMap{};
        else {
            qo = divide_rho(*ctx_, odd);
            if (!qo) break;
        }
        TermMap merged = *qe;
        for (auto& [m, c] : *qo) merged[m] = c;
        terms_ = std::move(merged);
        --rho_pow_;
    }
}

Expr Expr::constant(ContextPtr c, Coeff v) {
    Expr e(c);
    if (!v.is_zero()) e.terms_[unit_mono(*c)] = std::move(v);
    return e;
}

Expr Expr::variable(ContextPtr c, int var, int power) {
    if (var < 0 || var >= c->size()) throw std::invalid_argument("Expr: bad variable index");
    Expr e(c);
    if (power < 0 && !c->vars[var].laurent)
        throw std::domain_error("Expr: negative power of non-Laurent variable " + c->vars[var].name);
    Mono m = unit_mono(*c);
    m.e[var] = power;
    e.terms_[m] = Coeff(1);
    return e;
}

Expr Expr::variable(ContextPtr c, const std::string& name, int power) {
    return variable(c, c->require(name), power);
}

Expr Expr::radical(ContextPtr c) {
    if (!c->has_radical()) throw std::domain_error("Expr: context has no radical");
    Expr e(c);
    Mono m = unit_mono(*c);
    m.r = true;
    e.terms_[m] = Coeff(1);
    return e;
}

Expr Expr::rho(ContextPtr c, int power) {
    if (!c->has_radical()) throw std::domain_error("Expr: context has no radical");
    if (power >= 0) {
        Expr e = integer(c, 1);
        Expr base = from_terms(c, 0, rho_terms(*c));
        for (int k = 0; k < power; ++k) e = e * base;
        return e;
    }
    Expr e(c);
    e.rho_pow_ = -power;
    e.terms_[unit_mono(*c)] = Coeff(1);
    return e;
}

Expr Expr::from_terms(ContextPtr c, int rho_pow, TermMap t) {
    Expr e(c);
    e.rho_pow_ = rho_pow;
    e.terms_ = std::move(t);
    e.normalize();
    return e;
}

bool Expr::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1 || rho_pow_ != 0) return false;
    const Mono& m = terms_.begin()->first;
    return !m.r && m.total_degree() == 0 && m == unit_mono(*ctx_);
}

Coeff Expr::constant_value() const {
    if (is_zero()) return Coeff();
    if (!is_constant()) throw std::domain_error("Expr: not a constant");
    return terms_.begin()->second;
}

Expr Expr::operator+(const Expr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int k = std::max(rho_pow_, o.rho_pow_);
    TermMap a = terms_, b = o.terms_;
    auto lift = [&](TermMap& t, int from) {
        for (int j = from; j < k; ++j) t = term_mul(*ctx_, t, rho_terms(*ctx_));
    };
    lift(a, rho_pow_);
    lift(b, o.rho_pow_);
    for (const auto& [m, c] : b) add_term(a, m, c);
    return from_terms(ctx_, k, std::move(a));
}

Expr Expr::operator-() const {
    Expr e = *this;
    for (auto& [m, c] : e.terms_) c = -c;
    return e;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    return from_terms(ctx_, rho_pow_ + o.rho_pow_, term_mul(*ctx_, terms_, o.terms_));
}

Expr Expr::scaled(const Coeff& c) const {
    if (c.is_zero()) return Expr(ctx_);
    Expr e = *this;
    for (auto& [m, v] : e.terms_) v *= c;
    return e;
}

Expr Expr::pow(int n) const {
    if (n == 0) return integer(ctx_, 1);
    if (n > 0) {
        Expr e = *this, acc = integer(ctx_, 1);
        int k = n;
        while (k > 0) {
            if (k & 1) acc = acc * e;
            e = e * e;
            k >>= 1;
        }
        return acc;
    }
    // negative power: invertible single monomials only
    if (terms_.size() != 1)
        throw std::domain_error("Expr: negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    Expr inv(ctx_);
    Mono im = unit_mono(*ctx_);
    for (int i = 0; i < ctx_->size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!ctx_->vars[i].laurent)
            throw std::domain_error("Expr: negative power of non-Laurent variable "
                                    + ctx_->vars[i].name);
        im.e[i] = -m.e[i];
    }
    im.r = m.r;                      // r^-1 = r * rho^-1
    inv.terms_[im] = c.inv();
    inv.rho_pow_ = m.r ? 1 : 0;
    if (rho_pow_ > 0) inv = inv * rho(ctx_, rho_pow_); // (rho^-k)^-1 = rho^k
    inv.normalize();
    return inv.pow(-n);
}

Expr Expr::diff(int var) const {
    if (is_zero()) return *this;
    bool radical_var = false;
    for (int rv : ctx_->radical_vars) radical_var |= (rv == var);
    const int k = rho_pow_;
    if (!radical_var) {
        // plain term-wise power rule; rho and r are constants in var
        TermMap out;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Mono dm = m;
            dm.e[var] -= 1;
            add_term(out, dm, c * Coeff(GaussRat(Rat(m.e[var]))));
        }
        return from_terms(ctx_, k, std::move(out));
    }
    // d/dv [(P + Q r) rho^-k] =
    //   rho^-(k+1) [ dP rho - 2k v P  +  r ( dQ rho + (1-2k) v Q ) ]
    TermMap out;
    TermMap rho = rho_terms(*ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] != 0) {
            Mono dm = m;
            dm.e[var] -= 1;
            Coeff dc = c * Coeff(GaussRat(Rat(m.e[var])));
            for (const auto& [rm, rc] : rho) {
                Mono mm = dm;
                for (int i = 0; i < ctx_->size(); ++i) mm.e[i] += rm.e[i];
                add_term(out, mm, dc * rc);
            }
        }
        long f = m.r ? (1 - 2 * k) : (-2 * k);
        if (f != 0) {
            Mono mm = m;
            mm.e[var] += 1;
            add_term(out, mm, c * Coeff(GaussRat(Rat(f))));
        }
    }
    return from_terms(ctx_, k + 1, std::move(out));
}

Expr Expr::diff(const std::string& name) const { return diff(ctx_->require(name)); }

Expr Expr::subst(int var, const Expr& value) const {
    for (int rv : ctx_->radical_vars)
        if (rv == var) throw std::domain_error("Expr: cannot substitute a radical variable");
    if (min_degree_in(var) < 0)
        throw std::domain_error("Expr: substitution into negative powers");
    // bucket raw term maps by exponent of var, then Horner in the value
    std::map<int, TermMap> buckets;
    for (const auto& [m, c] : terms_) {
        Mono stripped = m;
        int k = m.e[var];
        stripped.e[var] = 0;
        add_term(buckets[k], stripped, c);
    }
    Expr acc(ctx_);
    int prev = -1;
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
        if (prev >= 0)
            for (int j = it->first; j < prev; ++j) acc = acc * value;
        acc = acc + from_terms(ctx_, 0, it->second);
        prev = it->first;
    }
    if (prev > 0)
        for (int j = 0; j < prev; ++j) acc = acc * value;
    if (rho_pow_ != 0) acc = acc * rho(ctx_, -rho_pow_);
    return acc;
}

Expr Expr::reindex(ContextPtr newctx, const std::vector<int>& varmap) const {
    TermMap out;
    for (const auto& [m, c] : terms_) {
        Mono nm;
        nm.e.assign(newctx->size(), 0);
        nm.r = m.r;
        for (int i = 0; i < ctx_->size(); ++i) {
            if (m.e[i] == 0) continue;
            int j = varmap.at(i);
            if (j < 0) throw std::domain_error("Expr: reindex drops a used variable");
            nm.e[j] = m.e[i];
        }
        out[nm] = c;
    }
    return from_terms(newctx, rho_pow_, std::move(out));
}

Expr Expr::map_monomials(const std::function<Mono(const Mono&)>& f) const {
    TermMap out;
    for (const auto& [m, c] : terms_) add_term(out, f(m), c);
    return from_terms(ctx_, rho_pow_, std::move(out));
}

int Expr::degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int t = m.total_degree();
        if (first || t > d) d = t;
        first = false;
    }
    return d;
}

int Expr::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

int Expr::min_degree_in(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.e[var] < d) d = m.e[var];
        first = false;
    }
    return d;
}

Expr Expr::coefficient_of(int var, int k) const {
    TermMap out;
    for (const auto& [m, c] : terms_) {
        if (m.e[var] != k) continue;
        Mono nm = m;
        nm.e[var] = 0;
        out[nm] = c;
    }
    return from_terms(ctx_, rho_pow_, std::move(out));
}

std::string Expr::str() const { return to_string(*this); }

std::string to_string(const Expr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& ctx = *e.ctx();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const Mono& m = it->first;
        Coeff c = it->second;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (neg) cs = cs.substr(1);
        std::vector<std::string> factors;
        bool unit_coeff = (cs == "1");
        if (!unit_coeff) factors.push_back(cs);
        for (int i = 0; i < ctx.size(); ++i) {
            if (m.e[i] == 0) continue;
            std::string f = ctx.vars[i].name;
            if (m.e[i] != 1) f += "^" + std::to_string(m.e[i]);
            factors.push_back(f);
        }
        if (m.r) factors.push_back("r");
        if (e.rho_pow() > 0)
            factors.push_back("rho^-" + std::to_string(e.rho_pow()));
        if (factors.empty()) factors.push_back(cs.empty() ? "1" : cs);
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
        first = false;
    }
    return os.str();
}

} // namespace ncsym
