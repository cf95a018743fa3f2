// Vector-field symmetry solvers of the conformal Newton-Cartan hierarchy:
// polynomial ansatz + exact nullspace for
//
//   L_X h = f h,   L_X theta = g theta,            (conformal pair, cgal)
//   L_X Gamma^a_bc = delta^a_(b phi_c),            (projective condition)
//   L_X (nabla h) = 0,  L_X (nabla theta) = 0,     (compatibility constraints)
//   and optionally f + g = 0.                      (Schrodinger condition)
//
// The expanded Schrodinger algebra keeps (f, g) independent; the Schrodinger
// algebra adds f+g = 0; cgal imposes only the conformal pair.
#pragma once

#include "ncsym/geometry.hpp"
#include "ncsym/vectorfield.hpp"

namespace ncsym {

// Schrodinger-Killing vectors (f + g = 0); requires a (V, Omega) spacetime
VectorFieldBasis solve_sk_vectors(const NCSpacetime& S, int deg);

// expanded Schrodinger algebra (no f + g constraint)
VectorFieldBasis solve_expanded_sch(const NCSpacetime& S, int deg);

// conformal Galilean family: only L_X h = f h, L_X theta = g theta
VectorFieldBasis solve_cgal(const NCSpacetime& S, int deg);

// substitute a vector field back into the defining equations and return the
// residual components (empty result means an exact solution); used by the
// round-trip tests
std::vector<Expr> sk_residual(const NCSpacetime& S, const VectorField& X,
                              const ConformalData& cd);

} // namespace ncsym
