#pragma once

#include "holseries/exterior.hpp"
#include "holseries/matrix.hpp"
#include "holseries/poincare.hpp"

namespace holseries {

// The exterior algebra on e_1..e_{2g} carrying the homology of the
// Jacobian torus, together with its distinguished degree-2 class
// f_g = e1e2 + e3e4 + ... + e_{2g-1}e_{2g}.
struct JacobianAlgebra {
    int genus;

    explicit JacobianAlgebra(int g);

    int generator_count() const { return 2 * genus; }
    ExteriorElement fundamental_class() const;          // f_g
    ExteriorElement fundamental_class_power(int t) const;  // f_g^t (0 for t > g)
    std::int64_t dim(int degree) const;                 // binom(2g, degree)
};

// Dimension of the degree-i piece of V_g = Lambda_g/(f_g), closed form.
std::int64_t primitive_quotient_dim(int g, int i);

struct PrimitiveQuotient {
    int genus;
    PoincarePolynomial dims;
};

// Matrix of multiplication by f_g from degree i to degree i+2 in the
// canonical monomial bases. Injective for i <= g-1 and surjective for
// i >= g-1; both facts are asserted on construction.
const RationalMatrix& fg_mult_matrix(int g, int i);

// V_g dimensions computed both by the closed form and as cokernel ranks
// of fg_mult_matrix; throws consistency_error if the routes disagree.
PrimitiveQuotient vg_dims(int g);

// Poincare polynomial of the image of H_*(W_j) inside Lambda_g: the span
// of all products (degree-s monomial) * f_g^t with s + t <= j.
PoincarePolynomial w_homology(int g, int j);

// Degreewise difference w_homology(g, j) - w_homology(g, j-1); all
// coefficients nonnegative.
PoincarePolynomial w_relative(int g, int j);

}  // namespace holseries
