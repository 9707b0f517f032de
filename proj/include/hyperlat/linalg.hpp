#pragma once

#include "hyperlat/matrix.hpp"
#include "hyperlat/poly.hpp"

namespace hyperlat {

// det(xI - m), exact and monic (Faddeev-LeVerrier; every internal division
// is exact over the integers). Throws ShapeError for non-square input.
IntPoly char_poly(const IntMatrix& m);

// Same over rationals; result coefficients ascending, monic.
RatPoly char_poly_rat(const RatMatrix& m);

// Basis of the right kernel, echelon-normalized: deterministic pivoting,
// vectors ordered by free column, each scaled so its first nonzero
// coordinate is 1.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

struct Signature {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    bool operator==(const Signature&) const = default;
};

// Exact symmetric congruence reduction over the rationals.
// Throws ShapeError when gram is not symmetric.
Signature signature(const IntMatrix& gram);
Signature signature(const RatMatrix& gram);

// Congruence diagonalization: returns basis vectors b_i (columns of the
// transform) with (b_i, b_j) diagonal; diag receives the diagonal values.
// Used to extract an explicit positive direction of a restricted form.
RatMatrix congruence_diagonalize(const RatMatrix& gram, RatVector& diag);

// Exact k-th power; k < 0 requires det(m) = +-1 (integer inverse).
IntMatrix mat_pow(const IntMatrix& m, long k);

Int det(const IntMatrix& m);       // fraction-free (Bareiss)
Rat det(const RatMatrix& m);

// Inverse of an integer matrix with det +-1.
IntMatrix int_inverse(const IntMatrix& m);
RatMatrix rat_inverse(const RatMatrix& m);

// p(m) by Horner's rule.
IntMatrix poly_at_matrix(const IntPoly& p, const IntMatrix& m);

// Companion matrix of a monic rational polynomial.
RatMatrix companion(const RatPoly& monic);

RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b);

}  // namespace hyperlat
