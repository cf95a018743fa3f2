// Newton-Cartan spacetimes: construction from potentials (V, Omega) or from
// explicit (h, theta, U, A) data, compatible connections, curvature, the
// Trautman condition and the field equations.
#pragma once

#include "ncsym/tensor.hpp"
#include <optional>

namespace ncsym {

// chart variables: t, x..z (d=3) or x1..xd, plus the opaque constant pi;
// the radical r with r^2 = sum of spatial squares is available for d >= 2
ContextPtr spacetime_context(int d);

struct VOmegaData {
    Expr V, Omega;
};

struct NCSpacetime {
    ContextPtr ctx;
    int d = 0;
    TensorField<Expr> h;     // (2,0) metric
    TensorField<Expr> theta; // clock one-form
    TensorField<Expr> U;     // observer field, theta(U) = 1
    TensorField<Expr> A;     // connection potential one-form, F = dA
    std::optional<VOmegaData> vomega;

    int dim() const { return d + 1; }
};

struct Connection {
    TensorField<Expr> gamma; // (1,2), symmetric in the lower slots
};

// flat Galilean spacetime in d spatial dimensions
NCSpacetime make_flat_spacetime(int d = 3);

// d = 3 spacetime with Newtonian potential V and Coriolis potential Omega;
// stores A = -V dt + A_Omega with dA reproducing the standard connection
// components Gamma^i_tt = d^i V, Gamma^i_jt = eps^i_j^k d_k Omega.
// V may live in the r-extended ring; Omega must be polynomial.
NCSpacetime make_vomega_spacetime(const Expr& V, const Expr& Omega);

// explicit construction; validates the structural invariants exactly:
// h symmetric with h(theta,.) = 0 and spatial rank d, d(theta) = 0,
// theta(U) = 1.  h and theta must have constant components.
NCSpacetime make_spacetime(ContextPtr ctx, int d, TensorField<Expr> h,
                           TensorField<Expr> theta, TensorField<Expr> U,
                           TensorField<Expr> A);

// the lowered metric: h^{ab} h_{bc} = delta^a_c - theta_c U^a, h_{ab} U^b = 0
TensorField<Expr> lower_metric(const NCSpacetime& S);

// two-form F = dA
TensorField<Expr> field_strength(const NCSpacetime& S);

// the compatible Newtonian connection of (h, theta, U, F = dA)
Connection connection(const NCSpacetime& S);
// same formula with an arbitrary two-form F (not necessarily closed)
Connection connection_from_F(const NCSpacetime& S, const TensorField<Expr>& F);

// R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma Gamma terms
TensorField<Expr> riemann(const NCSpacetime& S);
TensorField<Expr> riemann(const Connection& C, ContextPtr ctx, int dim);
TensorField<Expr> ricci(const NCSpacetime& S);
TensorField<Expr> ricci(const TensorField<Expr>& riem);

// h^{a[b} R^{c]}_{(de)a} == 0
bool check_trautman(const NCSpacetime& S);
bool check_trautman(const NCSpacetime& S, const Connection& C);

// residual of R_ab = 4 pi G rho_mass theta_a theta_b
TensorField<Expr> field_equation_residual(const NCSpacetime& S, const Expr& rho_mass,
                                          const Expr& G);

// nabla h and nabla theta (compatibility residuals, identically zero for
// every constructed connection)
TensorField<Expr> covariant_deriv_h(const NCSpacetime& S, const Connection& C);
TensorField<Expr> covariant_deriv_theta(const NCSpacetime& S, const Connection& C);

} // namespace ncsym
