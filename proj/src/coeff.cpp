#include "ncsym/coeff.hpp"
#include <sstream>
#include <stdexcept>

namespace ncsym {

std::string to_string(const GaussRat& g) {
    auto rat = [](const Rat& r) { return r.get_str(); };
    if (g.im == 0) return rat(g.re);
    std::ostringstream os;
    if (g.re == 0) {
        if (g.im == 1) return "i";
        if (g.im == -1) return "-i";
        os << rat(g.im) << "*i";
        return os.str();
    }
    os << "(" << rat(g.re);
    if (g.im == 1) os << "+i";
    else if (g.im == -1) os << "-i";
    else if (g.im > 0) os << "+" << rat(g.im) << "*i";
    else os << "-" << rat(-g.im) << "*i";
    os << ")";
    return os.str();
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) {
        if (k < c.size()) r.c[k] += c[k];
        if (k < o.c.size()) r.c[k] += o.c[k];
    }
    r.trim();
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& g : r.c) g = -g;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    MPoly r;
    r.c.assign(c.size() + o.c.size() - 1, GaussRat(0));
    for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = 0; b < o.c.size(); ++b)
            r.c[a + b] += c[a] * o.c[b];
    r.trim();
    return r;
}

void MPoly::divmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r) {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
    r = a;
    q = {};
    if (r.deg() >= b.deg()) q.c.assign(r.deg() - b.deg() + 1, GaussRat(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        GaussRat f = r.lead() / b.lead();
        int shift = r.deg() - b.deg();
        q.c[shift] += f;
        for (int k = 0; k <= b.deg(); ++k) r.c[k + shift] -= f * b.c[k];
        r.trim();
    }
    q.trim();
}

MPoly MPoly::gcd(MPoly a, MPoly b) {
    while (!b.is_zero()) {
        MPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    GaussRat inv = a.lead().inv();
    for (auto& g : a.c) g *= inv;
    return a;
}

Coeff::Coeff(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("Coeff: zero denominator");
    reduce();
}

Coeff Coeff::m(int power) {
    Coeff c;
    if (power >= 0) {
        c.num.c.assign(power + 1, GaussRat(0));
        c.num.c[power] = GaussRat(1);
    } else {
        c.num = MPoly::one();
        c.den.c.assign(-power + 1, GaussRat(0));
        c.den.c[-power] = GaussRat(1);
    }
    return c;
}

void Coeff::reduce() {
    if (num.is_zero()) { den = MPoly::one(); return; }
    MPoly g = MPoly::gcd(num, den);
    if (g.deg() > 0) {
        MPoly q, r;
        MPoly::divmod(num, g, q, r); num = q;
        MPoly::divmod(den, g, q, r); den = q;
    }
    // strip common m^k factors (gcd above already handles them since m | both
    // implies m | gcd); make the denominator monic
    GaussRat lead = den.lead();
    if (!lead.is_one()) {
        GaussRat inv = lead.inv();
        for (auto& c : num.c) c *= inv;
        for (auto& c : den.c) c *= inv;
    }
}

bool Coeff::is_one() const {
    return num.deg() == 0 && den.deg() == 0 && num.c[0].is_one();
}

GaussRat Coeff::constant() const {
    if (num.is_zero()) return GaussRat(0);
    if (num.deg() > 0 || den.deg() > 0) throw std::domain_error("Coeff: not m-free");
    return num.c[0];
}

Coeff Coeff::operator+(const Coeff& o) const {
    return Coeff(num * o.den + o.num * den, den * o.den);
}
Coeff Coeff::operator-(const Coeff& o) const {
    return Coeff(num * o.den - o.num * den, den * o.den);
}
Coeff Coeff::operator*(const Coeff& o) const {
    if (is_zero() || o.is_zero()) return {};
    return Coeff(num * o.num, den * o.den);
}
Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }
Coeff Coeff::operator-() const {
    Coeff c = *this;
    c.num = -c.num;
    return c;
}
Coeff Coeff::inv() const {
    if (is_zero()) throw std::domain_error("Coeff: division by zero");
    return Coeff(den, num);
}

namespace {
// is p == c*m^k? return k, set cval
bool monomial_in_m(const MPoly& p, int& k, GaussRat& cval) {
    if (p.is_zero()) { k = 0; cval = GaussRat(0); return true; }
    int nz = -1;
    for (int j = 0; j <= p.deg(); ++j) {
        if (!p.c[j].is_zero()) {
            if (nz >= 0) return false;
            nz = j;
        }
    }
    k = nz;
    cval = p.c[nz];
    return true;
}

std::string poly_str(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int k = p.deg(); k >= 0; --k) {
        if (p.c[k].is_zero()) continue;
        std::string cs = to_string(p.c[k]);
        if (!first && cs[0] != '-') s += "+";
        if (k == 0) { s += cs; }
        else {
            if (p.c[k].is_one()) s += "m";
            else if ((-p.c[k]).is_one()) s += "-m";
            else s += cs + "*m";
            if (k != 1) s += "^" + std::to_string(k);
        }
        first = false;
    }
    return s;
}
} // namespace

std::string to_string(const Coeff& c) {
    if (c.is_zero()) return "0";
    int kn = 0, kd = 0;
    GaussRat cn, cd;
    bool mn = monomial_in_m(c.num, kn, cn);
    bool md = monomial_in_m(c.den, kd, cd);
    if (mn && md) {
        GaussRat v = cn / cd;
        int k = kn - kd;
        if (k == 0) return to_string(v);
        std::string s;
        if (v.is_one()) s = "m";
        else if ((-v).is_one()) s = "-m";
        else s = to_string(v) + "*m";
        if (k != 1) s += "^" + std::to_string(k);
        return s;
    }
    if (md && kd == 0 && cd.is_one()) return "(" + poly_str(c.num) + ")";
    return "(" + poly_str(c.num) + ")*(" + poly_str(c.den) + ")^-1";
}

} // namespace ncsym
