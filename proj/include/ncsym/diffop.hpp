// Non-commutative linear differential operators in normal form (coefficients
// to the left of derivative monomials), the covariant Schrodinger operator,
// symmetry detection by exact right division, light-cone reduction, and the
// flat conformal-Killing-tensor solver.
#pragma once

#include "ncsym/phase.hpp"
#include "ncsym/vectorfield.hpp"

namespace ncsym {

using DMono = std::vector<int>; // derivative exponent per context variable

class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(ContextPtr c) : ctx_(std::move(c)) {}

    static DiffOp identity(ContextPtr c) { return from_coeff(c, Expr::integer(c, 1)); }
    static DiffOp from_coeff(ContextPtr c, Expr e);
    static DiffOp partial(ContextPtr c, int var, int power = 1);

    const ContextPtr& ctx() const { return ctx_; }
    const std::map<DMono, Expr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;
    Expr coefficient(const DMono& m) const;
    void set_coefficient(const DMono& m, Expr e);

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    DiffOp scaled(const Coeff& c) const;
    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    ContextPtr ctx_;
    std::map<DMono, Expr> terms_;
    void prune();
};

// normal-ordered product P o Q, using d o c = c d + (dc)
DiffOp compose(const DiffOp& P, const DiffOp& Q);

// P = quotient o D + remainder with the remainder free of d_t; D must be
// u d_t + (d_t-free part) with unit constant u
struct Division {
    DiffOp quotient, remainder;
};
Division right_divide(const DiffOp& P, const DiffOp& D, int tvar = 0);

// operator text I/O in the core grammar extended by the derivative tokens
// dt, dx, dy, dz (or dx1..): parse_diffop(to_string(op)) == op
std::string to_string(const DiffOp& op);
DiffOp parse_diffop(const std::string& text, ContextPtr ctx, int d);

struct SymmetryCertificate {
    bool ok = false;
    DiffOp op, delta, divisor, residual;
};
// decide Delta o D = delta o Delta by right division
SymmetryCertificate is_symmetry(const DiffOp& D, const DiffOp& Delta, int tvar = 0);

// Delta = i d_t + (1/2m) laplacian  (the free operator, A = V = 0)
DiffOp free_schrodinger(ContextPtr ctx, int d);
// i d_t - (1/2m) sum_j (-i d_j + m A_j)^2 - m V with spatial V, A
DiffOp covariant_schrodinger(const Expr& V, const std::vector<Expr>& A);

struct OperatorBasis {
    std::vector<DiffOp> ops;             // generators with nonzero symbol
    std::vector<SymComponents> symbols;  // principal symbols, rank = order
    int n_lower = 0;                     // generators with vanishing symbol
    int order = 0, ansatz_degree = 0;
};

// all first-order D = S^a d_a + s with Delta-hat o D = delta o Delta-hat;
// symbols are the rank-1 tensors S^a
OperatorBasis first_order_symmetries(const Expr& V, const std::vector<Expr>& A, int deg);

// all symmetries of the free operator of order <= order with polynomial
// coefficients of degree <= deg
OperatorBasis higher_symmetries(int order, int deg);

// ---- light-cone machinery -------------------------------------------------

// chart x1..x_{N-2}, xp, xm of the flat metric g_ij = delta, g_{+-} = -1
ContextPtr lightcone_context(int N);
// wave operator delta^{ij} d_i d_j - 2 d_+ d_-
DiffOp lightcone_laplacian(ContextPtr lc_ctx);

struct CktSolveResult {
    std::vector<SymComponents> S;   // canonical basis of the S-span
    int n_trivial = 0;
    int rank = 0, ansatz_degree = 0;
};

// polynomial conformal Killing tensors d^{(mu0} S^{mu1..mun)} = g^{(mu0 mu1}
// k^{mu2..mun)} of the N-dimensional light-cone metric; with lightcone set,
// components are restricted to x^- independent solutions
CktSolveResult solve_flat_ckt(int N, int rank, int deg, bool lightcone);

// substitute d_- -> -i m, x+ -> t on x^- independent operators
DiffOp lightcone_reduce(const DiffOp& D);

// spacetime restriction of a light-cone symbol: drop tensors with a minus
// leg is not allowed here -- the symbol must have none; + maps to t
SymComponents lightcone_project_symbol(const SymComponents& S, ContextPtr spacetime_ctx);
// the chi_{n-q} = C(n,q) S^{-..-a..} block of the light-cone index dictionary
SymComponents lightcone_project_lower(const SymComponents& S, ContextPtr spacetime_ctx,
                                      int q);

} // namespace ncsym
