// Newtonian twistor space PT_inf = O + O(2) over CP^1: global holomorphic
// vector fields, the incidence-map pushforward to spacetime and its inverse,
// affine-connection patching with its obstruction, the vertical projective
// algebra and the CGA.
//
// Chart conventions: unhatted coordinates (T, Q, lambda), hatted chart
// T^ = T, Q^ = lambda^-2 Q, lambda^ = lambda^-1; the incidence map is
// (t, x, lambda) -> (t, lambda^2(x-iy) - 2 lambda z - (x+iy), lambda).
#pragma once

#include "ncsym/vectorfield.hpp"
#include "ncsym/geometry.hpp"

namespace ncsym {

// variables T, Q, lambda (lambda Laurent)
ContextPtr twistor_context();

struct TwistorVectorField {
    Expr bT, bQ, bL;
    bool operator==(const TwistorVectorField& o) const {
        return bT == o.bT && bQ == o.bQ && bL == o.bL;
    }
};

// rewrite an unhatted-chart function in hatted coordinates
Expr hat_subst(const Expr& e);

// components of the patched field, expressed in hatted coordinates
TwistorVectorField hatted_components(const TwistorVectorField& b);

// holomorphic on both charts
bool is_global(const TwistorVectorField& b);

TwistorVectorField twistor_bracket(const TwistorVectorField& a,
                                   const TwistorVectorField& b);

// canonical basis of H^0(T PT_inf) with T-degree <= NT; dimension 8(NT+1)
std::vector<TwistorVectorField> global_vector_fields(int NT);

// span helpers over (component, monomial) columns
bool same_twistor_span(const std::vector<TwistorVectorField>& a,
                       const std::vector<TwistorVectorField>& b);
bool twistor_in_span(const TwistorVectorField& x,
                     const std::vector<TwistorVectorField>& basis);
// [B, B] stays inside span(B)
bool twistor_closed(const std::vector<TwistorVectorField>& basis);

struct Pushforward {
    VectorField X;           // on the d=3 spacetime chart
    // the (a..h) dictionary and the cnc(3) block data
    Expr h, chi, omega_xy, omega_zx, omega_zy;
    std::vector<Expr> eta;   // eta^i(t)
};

// solve (mu_* Lambda) = beta for a lambda-independent Lambda and push down;
// throws with the offending residual if no such Lambda exists
Pushforward pushforward(const TwistorVectorField& b);

// inverse of pushforward on conformal Newton-Cartan fields
// X = h(t) d_t + (omega^i_j(t) x^j + chi(t) x^i + eta^i(t)) d_i
TwistorVectorField lift_to_twistor(const VectorField& X);

struct CncCheck {
    bool ok = true;
    int offender = -1;       // basis index that failed, when !ok
    std::string reason;
    int dimension = 0;
};

// correspondence check at truncation NT: pushforward of the global basis is
// injective, lands in the cnc(3) family, is a bracket homomorphism, and
// round-trips through lift_to_twistor
CncCheck verify_cnc_correspondence(int NT);

// torsion-free connection components on twistor space
struct TwistorConnection {
    Expr gamma[3][3][3]; // [alpha][beta][gamma], symmetric in the lower pair
    TwistorConnection();
    Expr& at(int a, int b, int c) { return gamma[a][b][c]; }
    const Expr& at(int a, int b, int c) const { return gamma[a][b][c]; }
};

// exact patching transform of all 18 components; the result components are
// functions written in UNHATTED coordinates (use hat_subst to view them in
// the hatted chart)
TwistorConnection connection_patch(const TwistorConnection& G);

// the general global section of the vertical connection bundle G_v:
// Gamma^T_TT = Sigma, Gamma^Q_TQ = Xi, Gamma^Q_TT = Phi0 + Phi1 l + Phi2 l^2
// + Psi Q, all other vertical components zero
TwistorConnection vertical_connection(const Expr& Sigma, const Expr& Xi,
                                      const Expr& Phi0, const Expr& Phi1,
                                      const Expr& Phi2, const Expr& Psi);

// true when the lambda-lambda-lambda patching row admits no holomorphic
// section for Laurent ansatz exponents up to the given bound: the -2 lambda
// inhomogeneity always survives (H^0(G) = 0)
bool gbundle_obstructed(int laurent_bound);

struct VerticalField {
    Expr bT, bQ;         // vertical components (d lambda annihilates it)
    Expr kappaT, kappaQ; // the projective one-form it determines
};

// vertical fields with L_beta Gamma^A_BC = delta^A_(B kappa_C) against the
// zero reference connection; 11-dimensional for NT >= 2
std::vector<VerticalField> vertical_projective_fields(int NT);

// the 13-dimensional twistor representation of the expanded Schrodinger
// algebra: vertical projective fields completed by their lambda-parts plus
// the two global rotations f0 d_lambda, g0 lambda d_lambda
std::vector<TwistorVectorField> stilde_basis(int NT);

// the fifteen CGA generators on PT_inf (the c -> infinity limit table)
std::vector<TwistorVectorField> cga_basis();
// their expected spacetime images, same order
std::vector<VectorField> cga_spacetime_images();

} // namespace ncsym
