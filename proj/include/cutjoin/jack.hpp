#pragma once

#include <map>
#include <vector>

#include "cutjoin/noperator.hpp"
#include "cutjoin/symfun.hpp"

namespace cutjoin {

// Monic-triangular orthogonal family for hall_inner(.,.,alpha):
// P_lambda = m_lambda + dominance-lower monomial terms, stored in
// power-sum coordinates.
struct JackBasis {
    int n = 0;
    Rational alpha;
    std::map<Partition, SymFun, PartitionOrder> vectors;
};

// True when lambda dominates mu (partial sums of lambda >= those of mu);
// both must partition the same n.
bool dominates(const Partition& lambda, const Partition& mu);

// Gram-Schmidt over the monomial basis along a linear extension of
// dominance order (canonical reverse-lexicographic ties).  Throws on the
// finitely many alpha where an intermediate norm vanishes, naming the pivot.
JackBasis build_jack(int n, const Rational& alpha);

// Same construction along a second linear extension of dominance (induced
// by conjugate partitions); used to check refinement independence.
JackBasis build_jack_conjugate_refinement(int n, const Rational& alpha);

// Macdonald's norm product: <P_lambda, P_lambda>_alpha =
// prod_s (alpha (a(s)+1) + l(s)) / (alpha a(s) + l(s) + 1).
Rational jack_norm_formula(const Partition& lambda, const Rational& alpha);

// The N-independent part of the deformed cut-and-join operator:
// beta C + J + ((1-beta)/2) D.
NOOperator build_deformed_cutjoin(const Rational& beta);

struct JackDiagonality {
    bool diagonal = false;
    Rational alpha;  // the parameter the basis was built at (1/beta)
    std::map<Partition, Rational, PartitionOrder> eigenvalues;
    std::string failure;  // description of the first non-diagonal image, if any
};

// Checks (beta C + J + ((1-beta)/2) D) P_lambda = e_lambda P_lambda on the
// Jack basis at alpha = 1/beta and tabulates the eigenvalues.
JackDiagonality verify_jack_diagonality(int n, const Rational& beta);

// Matrix of a homogeneous operator in the Jack basis (rows = source).
OpMatrix jack_matrix(const NOOperator& op, int n, const Rational& alpha);

}  // namespace cutjoin
