// Exact scalar expressions: elements of the coordinate ring
//
//     Q(i)(m)[x_1..x_n, r] / (r^2 - rho),   localized at rho = sum x_i^2,
//
// stored as (P + Q*r) * rho^-k with k minimal and P, Q canonical polynomial
// term maps.  Variables flagged Laurent (lambda) may carry negative
// exponents.  Two Exprs are equal iff their representations are identical.
#pragma once

#include "ncsym/coeff.hpp"
#include "ncsym/context.hpp"
#include <map>
#include <functional>
#include <optional>

namespace ncsym {

struct Mono {
    std::vector<int> e; // exponent per context variable
    bool r = false;     // carries one factor of the radical

    int total_degree() const {
        int t = 0;
        for (int k : e) t += k;
        return t;
    }
    bool operator==(const Mono& o) const { return r == o.r && e == o.e; }
};

// graded lex: total degree first, then exponents (earlier var more
// significant), radical factor last
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.e != b.e) return a.e < b.e;
        return a.r < b.r;
    }
};

using TermMap = std::map<Mono, Coeff, MonoLess>;

class Expr {
public:
    Expr() = default;
    explicit Expr(ContextPtr c) : ctx_(std::move(c)) {}

    static Expr constant(ContextPtr c, Coeff v);
    static Expr integer(ContextPtr c, long v) { return constant(c, Coeff(v)); }
    static Expr variable(ContextPtr c, int var, int power = 1);
    static Expr variable(ContextPtr c, const std::string& name, int power = 1);
    static Expr radical(ContextPtr c);           // r
    static Expr rho(ContextPtr c, int power);    // rho^power, any integer power
    // raw constructor; normalizes (rho reduction, zero stripping)
    static Expr from_terms(ContextPtr c, int rho_pow, TermMap t);

    const ContextPtr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    int rho_pow() const { return rho_pow_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Coeff constant_value() const; // throws if not constant

    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    Expr operator-() const;
    Expr& operator+=(const Expr& o) { *this = *this + o; return *this; }
    Expr& operator-=(const Expr& o) { *this = *this - o; return *this; }
    Expr& operator*=(const Expr& o) { *this = *this * o; return *this; }
    Expr scaled(const Coeff& c) const;
    // integer power; negative exponents only for single invertible monomials
    Expr pow(int n) const;

    bool operator==(const Expr& o) const {
        return rho_pow_ == o.rho_pow_ && terms_ == o.terms_;
    }
    bool operator!=(const Expr& o) const { return !(*this == o); }

    // formal partial derivative; knows d(r)/dx_i = x_i r/rho for radical vars
    Expr diff(int var) const;
    Expr diff(const std::string& name) const;

    // substitute value for every occurrence of var (must appear with
    // non-negative exponents; var may not be a radical variable)
    Expr subst(int var, const Expr& value) const;

    // move to another context; varmap[i] = index in new context of old var i.
    // Radical variables must map onto the new context's radical variables.
    Expr reindex(ContextPtr newctx, const std::vector<int>& varmap) const;

    // apply an exponent-vector transform monomial-wise (used for patching
    // maps like Laurent chart changes); f must be injective on monomials
    Expr map_monomials(const std::function<Mono(const Mono&)>& f) const;

    int degree() const;             // max total degree over terms (Laurent counts negative)
    int degree_in(int var) const;   // max exponent of var
    int min_degree_in(int var) const;
    // coefficient of var^k (collecting all other factors), var non-radical
    Expr coefficient_of(int var, int k) const;

    std::string str() const;

private:
    ContextPtr ctx_;
    int rho_pow_ = 0;
    TermMap terms_;

    void normalize();
    friend struct ExprTestAccess;
};

std::string to_string(const Expr& e);

// product over a term map, reducing r^2 = rho (helper exposed for tests)
TermMap term_mul(const Context& ctx, const TermMap& a, const TermMap& b);

} // namespace ncsym
