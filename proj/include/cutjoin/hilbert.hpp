#pragma once

#include <vector>

#include "cutjoin/jack.hpp"
#include "cutjoin/noperator.hpp"

namespace cutjoin {

struct EquivParams {
    Rational e1, e2;  // torus weights; both nonzero

    bool self_dual() const { return e1 + e2 == 0; }
};

void validate_params(const EquivParams& p);  // throws on e1*e2 == 0

// Tangent weights at the fixed point lambda: per box s the two values
// e1 (a(s)+1) - e2 l(s) and -e1 a(s) + e2 (l(s)+1); 2n values total.
std::vector<Rational> tangent_weights(const Partition& lambda, const EquivParams& p);

// Tautological weights, one per box (i, j): (i-1) e1 + (j-1) e2
// (rows along e1, columns along e2; frozen by the weight-table tests).
std::vector<Rational> taut_weights(const Partition& lambda, const EquivParams& p);

// Product of the tangent weights; nonzero at generic rational parameters.
Rational euler_tangent(const Partition& lambda, const EquivParams& p);

struct FixedPointData {
    Partition lambda;
    std::vector<Rational> tangent;
    std::vector<Rational> taut;
    Rational euler;
};

FixedPointData fixed_point_data(const Partition& lambda, const EquivParams& p);

// Pairing transported by the Fock identification with
// [alpha_m, alpha_n] = m delta_{m+n,0}/(e1 e2):
// <p_lambda, p_lambda> = z_lambda (e1 e2)^{-l(lambda)} prod lambda_i^{-2}.
Rational loc_inner(const SymFun& f, const SymFun& g, const EquivParams& p);

// Heisenberg pair: alpha_{-k} = multiplication by k p_k, and its
// loc_inner-adjoint alpha_k = (1/(e1 e2)) d_{p_k}.
NOOperator alpha_minus(int k);
NOOperator alpha_plus(int k, const EquivParams& p);

// Fixed-point classes realized through the Fock isomorphism as rescaled
// Jack vectors at alpha = -e1/e2, normalized per box by
// 1/(e1 (a+1) - e2 l) so that loc-normalized pairings match 1/euler up to
// the degree sign (-1)^n.  Throws if the Jack construction hits a pole.
struct FixedPointBasis {
    EquivParams params;
    Rational alpha;
    std::vector<Partition> labels;
    std::vector<SymFun> vectors;
};

FixedPointBasis fixed_point_basis(int n, const EquivParams& p);

// Matrix of a homogeneous operator in the fixed-point basis, rows = source.
OpMatrix fixed_point_transport(const NOOperator& op, int n, const EquivParams& p);

// Directed cut/join move graph of W_[2] on degree n: one edge per nonzero
// off-diagonal entry of the normalized-basis matrix, tagged cut when the
// target has more parts.
struct RimhookEdge {
    int from = 0, to = 0;  // indices into vertices
    Rational value;
    bool cut = false;
};

struct RimhookGraph {
    int n = 0;
    std::vector<Partition> vertices;
    std::vector<RimhookEdge> edges;
};

RimhookGraph rimhook_graph(int n);

}  // namespace cutjoin
