// Linear-in-unknowns expressions over the Expr ring, exact linear systems and
// their canonical reduced-echelon nullspaces.  Coefficient matching happens
// per (coordinate monomial, radical flag) component after clearing the common
// rho denominator, so one LinExpr equation contributes one row per monomial.
#pragma once

#include "ncsym/expr.hpp"
#include <map>
#include <string>
#include <vector>

namespace ncsym {

// registry of ansatz coefficients (the linear-system unknowns)
struct Unknowns {
    std::vector<std::string> names;
    int add(std::string name) {
        names.push_back(std::move(name));
        return (int)names.size() - 1;
    }
    int size() const { return (int)names.size(); }
};

// cst + sum_j lin[j] * u_j   with Expr coefficients, degree <= 1 in unknowns
struct LinExpr {
    ContextPtr ctx;
    Expr cst;
    std::map<int, Expr> lin;

    LinExpr() = default;
    explicit LinExpr(ContextPtr c) : ctx(c), cst(Expr(c)) {}
    explicit LinExpr(Expr e) : ctx(e.ctx()), cst(std::move(e)) {}

    static LinExpr unknown(ContextPtr c, int id) {
        LinExpr l(c);
        l.lin[id] = Expr::integer(c, 1);
        return l;
    }

    bool is_zero() const {
        if (!cst.is_zero()) return false;
        for (auto& [j, e] : lin)
            if (!e.is_zero()) return false;
        return true;
    }

    LinExpr operator+(const LinExpr& o) const;
    LinExpr operator-(const LinExpr& o) const;
    LinExpr operator-() const;
    LinExpr operator*(const Expr& e) const;
    LinExpr scaled(const Coeff& c) const;
    LinExpr diff(int var) const;
    LinExpr& operator+=(const LinExpr& o) { *this = *this + o; return *this; }
    LinExpr& operator-=(const LinExpr& o) { *this = *this - o; return *this; }

    // substitute exact values for the unknowns (absent ids read as zero)
    Expr evaluate(const std::map<int, Coeff>& values) const;
};

inline LinExpr operator*(const Expr& e, const LinExpr& l) { return l * e; }

// sparse row: column -> value; the virtual constant column is CONST_COL
using Row = std::map<long, Coeff>;
inline constexpr long CONST_COL = 0x7fffffffffff0000L;

// in-place reduced row echelon form in ascending column order (the constant
// column reduces last and is never a pivot); returns pivot columns.
// RREF is unique, so the result is independent of input row order.
std::vector<long> rref(std::vector<Row>& rows);

// dimension of the span of the given rows
int span_dim(std::vector<Row> rows);

// exact span equality (compares canonical RREFs)
bool span_equal(std::vector<Row> a, std::vector<Row> b);

struct LinearSystem {
    int n_unknowns = 0;
    std::vector<Row> rows;

    explicit LinearSystem(const Unknowns& u) : n_unknowns(u.size()) {}
    explicit LinearSystem(int n) : n_unknowns(n) {}

    // append the component rows of "le == 0"
    void add_equation(const LinExpr& le);
    void add_equations(const std::vector<LinExpr>& v) {
        for (auto& le : v) add_equation(le);
    }
};

struct SolveResult {
    bool consistent = true;
    // canonical nullspace basis of the homogeneous part; basis[k][j] = value
    // of unknown j in basis vector k (missing = 0)
    std::vector<std::map<int, Coeff>> basis;
    // a particular solution when the system is inhomogeneous and consistent
    std::map<int, Coeff> particular;
    int dimension() const { return (int)basis.size(); }
};

SolveResult solve(LinearSystem sys);

// all exponent tuples over the given variables with total degree <= deg
std::vector<Mono> monomials_up_to(const ContextPtr& ctx, const std::vector<int>& vars,
                                  int deg);

// fresh polynomial ansatz of total degree <= deg in the given variables
LinExpr poly_ansatz(ContextPtr ctx, const std::vector<int>& vars, int deg,
                    Unknowns& u, const std::string& prefix);

// extra ansatz terms c * x^alpha * r * rho^-1 with |alpha| <= deg (the
// r-extended ring used for radical backgrounds)
LinExpr radical_ansatz(ContextPtr ctx, const std::vector<int>& vars, int deg,
                       Unknowns& u, const std::string& prefix);

// Echelon-normalize a solved family.  Unknowns [0, n_primary) are the primary
// block (pivoted first); rows whose leading unknown falls outside it are
// counted as trivial and their pivots are eliminated from the primary rows,
// which makes the attached lower-order data canonical too.
struct CanonicalFamily {
    std::vector<std::map<int, Coeff>> primary;
    std::vector<std::map<int, Coeff>> trivial;
};
CanonicalFamily canonicalize_family(const SolveResult& res, int n_primary);

} // namespace ncsym
