// Vector fields on a chart, canonical bases of solution families, Lie
// brackets, closure checks and structure constants.
#pragma once

#include "ncsym/tensor.hpp"
#include <optional>
#include <string>

namespace ncsym {

// X = X^a d_a with component a the coefficient of d/dx^a (chart variable a)
struct VectorField {
    ContextPtr ctx;
    std::vector<Expr> comp;

    VectorField() = default;
    VectorField(ContextPtr c, int n) : ctx(c), comp(n, Expr(c)) {}

    int size() const { return (int)comp.size(); }
    bool is_zero() const {
        for (auto& e : comp)
            if (!e.is_zero()) return false;
        return true;
    }
    bool operator==(const VectorField& o) const { return comp == o.comp; }
    std::string str(const std::vector<std::string>& names) const;
};

VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// conformal data attached to one Schrodinger-Killing solution
struct ConformalData {
    Expr f, g;
    std::vector<Expr> phi; // one-form components
};

struct VectorFieldBasis {
    std::string algebra;      // label: "sch(3)", "killing", ...
    int ansatz_degree = 0;
    std::vector<VectorField> fields;
    std::vector<ConformalData> conformal; // parallel to fields when available
    std::vector<Expr> chi0;               // parallel lower-order functions (Killing)
    int n_trivial = 0;                    // solutions with vanishing vector part

    int dimension() const { return (int)fields.size(); }
};

// flatten a vector field over (component, monomial) coordinates so bases can
// be echelon-normalized and compared exactly as sets
std::vector<Row> flatten(const std::vector<VectorField>& fs);
bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);
bool in_span(const VectorField& x, const std::vector<VectorField>& basis);

// [B,B] subset span(B); returns the offending pair on failure
std::optional<std::pair<int, int>> closure_check(const std::vector<VectorField>& basis);

// exact structure constants c[i][j][k] with [X_i, X_j] = sum_k c_ijk X_k;
// requires a linearly independent basis closing under the bracket
std::vector<std::vector<std::vector<Coeff>>>
structure_constants(const std::vector<VectorField>& basis);

// Jacobi residual [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]
VectorField jacobi_residual(const VectorField& X, const VectorField& Y, const VectorField& Z);

} // namespace ncsym
