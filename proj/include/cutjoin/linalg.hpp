#pragma once

#include <vector>

#include "cutjoin/rational.hpp"

namespace cutjoin {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

RMatrix identity_matrix(int n);
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);

// Gaussian elimination with exact pivoting; throws on singular systems.
RVector solve_linear(RMatrix a, RVector b);
RMatrix invert(const RMatrix& a);
Rational determinant(RMatrix a);

// Coefficients c_0..c_n of det(xI - A) = x^n + c_{n-1} x^{n-1} + ... + c_0,
// returned lowest degree first, via Faddeev-LeVerrier.
RVector charpoly(const RMatrix& a);

// Coefficients (lowest first) of prod_i (x - roots[i]).
RVector poly_from_roots(const RVector& roots);

}  // namespace cutjoin
