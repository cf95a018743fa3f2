// The coefficient field Q(i)(m): rational functions of the mass parameter m
// with Gaussian-rational coefficients.  Almost every value occurring in
// practice is a Laurent monomial c*m^k; the general quotient form only shows
// up transiently inside eliminations, but it has to be exact there.
#pragma once

#include "ncsym/rational.hpp"
#include <vector>
#include <string>

namespace ncsym {

// dense univariate polynomial in m, coefficient of m^k at c[k]; empty == 0
struct MPoly {
    std::vector<GaussRat> c;

    MPoly() = default;
    MPoly(GaussRat g) { if (!g.is_zero()) c.push_back(std::move(g)); }

    static MPoly one() { return MPoly(GaussRat(1)); }
    static MPoly m() { MPoly p; p.c = {GaussRat(0), GaussRat(1)}; return p; }

    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    void trim() { while (!c.empty() && c.back().is_zero()) c.pop_back(); }
    const GaussRat& lead() const { return c.back(); }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const { return c == o.c; }

    // division in Q(i)[m]; requires exact-field coefficients
    static void divmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r);
    static MPoly gcd(MPoly a, MPoly b); // monic gcd
};

// num/den with den monic and gcd(num,den)=1; den never zero.
// An extra Laurent shift is not stored: negative powers of m live as a plain
// m^k denominator, which gcd reduction keeps minimal automatically.
struct Coeff {
    MPoly num, den = MPoly::one();

    Coeff() = default;
    Coeff(long n) : num(GaussRat(n)) {}
    Coeff(GaussRat g) : num(std::move(g)) {}
    Coeff(MPoly n, MPoly d);

    static Coeff one() { return Coeff(GaussRat(1)); }
    static Coeff i() { return Coeff(GaussRat::i()); }
    static Coeff m(int power = 1);

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num.deg() <= 0 && den.deg() <= 0; }
    // constant value if m-free (den==1, num constant); throws otherwise
    GaussRat constant() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inv() const;
    Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
    Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
    Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }

    bool operator==(const Coeff& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

private:
    void reduce();
};

// Grammar-compatible printing.  Laurent monomials print as "2*m^-1" style;
// polynomial values as "(m^2+1)"; general quotients fall back to
// "(num)*(den)^-1" which only appears in intermediate diagnostics.
std::string to_string(const Coeff& c);

} // namespace ncsym
