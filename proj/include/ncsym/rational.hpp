// Gaussian rationals a + b*i with exact GMP rational components.
// The base field for every coefficient in the engine.
#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace ncsym {

using Rat = mpq_class;

struct GaussRat {
    Rat re{0}, im{0};

    GaussRat() = default;
    GaussRat(long n) : re(n) {}
    GaussRat(const Rat& r) : re(r) { this->re.canonicalize(); }
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {
        this->re.canonicalize();
        this->im.canonicalize();
    }

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat inv() const {
        Rat n = re * re + im * im;
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return {re / n, -im / n};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    // total order, used only for canonical map layouts
    bool operator<(const GaussRat& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};

inline GaussRat grat(long num, long den = 1) { return GaussRat(Rat(num, den)); }

// Prints in the expression grammar: "3", "-1/2", "i", "2*i", "(1+2*i)" etc.
// Pure-imaginary and complex values keep a shape the parser reads back.
std::string to_string(const GaussRat& g);

} // namespace ncsym
