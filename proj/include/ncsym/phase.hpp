// Hamiltonian formalism on T*M: the Newton-Cartan Hamiltonian, the geodesic
// spray, the canonical Poisson bracket, and exact solvers for Killing and
// Schrodinger-Killing tensors defined through it.
//
// Sign convention, fixed throughout:  {f, g} = sum_a (df/dp_a dg/dx^a -
// df/dx^a dg/dp_a), so the geodesic spray is the derivation {., H}.
#pragma once

#include "ncsym/geometry.hpp"
#include "ncsym/vectorfield.hpp"

namespace ncsym {

struct PhaseSpace {
    ContextPtr pctx;       // chart variables, then pi, then momenta p_a
    const NCSpacetime* S;
    int d = 0;
    int coord(int a) const { return a; }              // x^a, a = 0..d (0 = t)
    int mom(int a) const { return d + 2 + a; }        // p_a
    int dim() const { return d + 1; }
};

PhaseSpace make_phase_space(const NCSpacetime& S);

// lift a spacetime-chart Expr into the phase context
Expr lift_to_phase(const PhaseSpace& P, const Expr& e);
// project a momentum-free phase Expr back to the spacetime chart
Expr project_to_chart(const PhaseSpace& P, const Expr& e);

// H = 1/2 h^{ab} Pi_a Pi_b - U^a Pi_a,  Pi_a = p_a + A_a
Expr hamiltonian(const PhaseSpace& P);

// a vector field on T*M: dx[a] ~ coefficient of d/dx^a, dp[a] ~ d/dp_a
struct PhaseFlow {
    std::vector<Expr> dx, dp;
    bool operator==(const PhaseFlow& o) const { return dx == o.dx && dp == o.dp; }
};

// the geodesic spray of Lemma-1 form, written exactly as displayed
PhaseFlow geodesic_spray(const PhaseSpace& P);
// the Hamiltonian vector field {., H}
PhaseFlow hamiltonian_vector_field(const PhaseSpace& P, const Expr& H);

Expr poisson(const PhaseSpace& P, const Expr& f, const Expr& g);
LinExpr poisson(const PhaseSpace& P, const LinExpr& f, const Expr& g);

// totally symmetric contravariant components keyed by sorted multi-index
struct SymComponents {
    ContextPtr ctx;
    int dim = 0, rank = 0;
    std::map<std::vector<int>, Expr> c;

    SymComponents() = default;
    SymComponents(ContextPtr cx, int dm, int rk) : ctx(cx), dim(dm), rank(rk) {}
    Expr get(std::vector<int> idx) const;
    void set(std::vector<int> idx, Expr v);
    bool is_zero() const;
    // number of distinct orderings of the sorted index (multinomial factor)
    static long orderings(const std::vector<int>& sorted_idx);
};

// X^{a1..an} p_{a1}..p_{an} as a phase polynomial
Expr lift(const PhaseSpace& P, const SymComponents& X);
// inverse of lift on momentum-homogeneous polynomials
SymComponents unlift(const PhaseSpace& P, const Expr& phase_poly, int rank);

// symmetric Schouten bracket via Poisson bracket of the lifts
SymComponents schouten_bracket(const PhaseSpace& P, const SymComponents& X,
                               const SymComponents& Y);

struct SymTensor {
    SymComponents X;                 // rank-n symbol
    std::vector<SymComponents> chi;  // chi[m], rank m, m = 0..n-1
    std::vector<SymComponents> f;    // f[m], rank m (Schrodinger-Killing only)
};

struct TensorSolveResult {
    std::vector<SymTensor> tensors;  // canonical basis of the X-span
    int n_trivial = 0;               // solutions with vanishing top symbol
    int rank = 0, ansatz_degree = 0;
};

// all (X, chi_m) with polynomial components of degree <= deg and
// {X p..p + sum chi_m p..p, H} = 0; on radical backgrounds the chi ansatz
// gains x^alpha r rho^-1 terms
TensorSolveResult solve_killing_tensors(const NCSpacetime& S, int rank, int deg);
// same with right-hand side (sum_m f_m p..p) H
TensorSolveResult solve_sk_tensors(const NCSpacetime& S, int rank, int deg);

// rank-1 wrapper: Killing vectors with their chi0
VectorFieldBasis solve_killing_vectors(const NCSpacetime& S, int deg);

// conserved quantity of a solved tensor: X p..p + sum chi_m p..p
Expr conserved_quantity(const PhaseSpace& P, const SymTensor& T);

// span comparisons of symmetric component families (flattened jointly over
// (multi-index, monomial) columns with a common rho denominator)
bool same_symbol_span(const std::vector<SymComponents>& a,
                      const std::vector<SymComponents>& b);
bool symbol_in_span(const SymComponents& x, const std::vector<SymComponents>& basis);
int symbol_span_dim(const std::vector<SymComponents>& xs);

} // namespace ncsym
