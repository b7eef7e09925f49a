#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cutjoin/linalg.hpp"
#include "cutjoin/symfun.hpp"

namespace cutjoin {

// One normally ordered term c * p_{mu_1}...p_{mu_r} d_{nu_1}...d_{nu_s},
// derivatives to the right.  create/annihilate are part multisets.
struct NOTerm {
    Rational coeff;
    Partition create;
    Partition annihilate;

    int degree_shift() const { return create.size() - annihilate.size(); }
    bool same_shape(const NOTerm& o) const {
        return create == o.create && annihilate == o.annihilate;
    }
    bool operator==(const NOTerm& o) const { return coeff == o.coeff && same_shape(o); }
};

// Sums duplicates, drops zeros, sorts deterministically.
std::vector<NOTerm> normalize_terms(std::vector<NOTerm> terms);

// A normally ordered operator: either a finite term list (possibly with a
// validity window inherited from composition) or a schema that yields, for
// each input degree n, the finite list of terms able to act on degree-n input.
class NOOperator {
  public:
    using Generator = std::function<std::vector<NOTerm>(int)>;

    static NOOperator finite(std::vector<NOTerm> terms,
                             std::optional<int> window = std::nullopt);
    static NOOperator schema(std::string label, Generator gen, std::optional<int> shift);

    bool is_schema() const { return static_cast<bool>(gen_); }
    const std::string& label() const { return label_; }

    // Terms with |annihilate| <= degree: everything that can act nontrivially
    // on degree-`degree` input.
    std::vector<NOTerm> instantiate(int degree) const;

    // Uniform |create|-|annihilate| over all terms, when defined.
    std::optional<int> degree_shift() const { return shift_; }

    // For finite operators produced by composition: the largest input degree
    // on which the term list is exact.  Unset means valid everywhere.
    std::optional<int> window() const { return window_; }

    SymFun apply(const SymFun& f) const;

  private:
    std::string label_;
    std::vector<NOTerm> terms_;
    Generator gen_;
    std::optional<int> shift_;
    std::optional<int> window_;
};

// Normally ordered product a∘b, exact on all inputs of degree <= window.
// Wick contraction: moving s derivatives d_k past r factors p_k produces
// sum_j C(s,j) C(r,j) j! terms with j pairs removed.  Throws if either
// operand's own window is too small to cover the intermediate degrees.
NOOperator compose(const NOOperator& a, const NOOperator& b, int window);
NOOperator commutator(const NOOperator& a, const NOOperator& b, int window);

NOOperator op_add(const NOOperator& a, const NOOperator& b);
NOOperator op_scale(const NOOperator& a, const Rational& c);

// Named builders.
NOOperator build_cut();    // C = 1/2 sum (a+b) p_a p_b d_{a+b}
NOOperator build_join();   // J = 1/2 sum ab p_{a+b} d_a d_b
NOOperator build_W2();     // C + J
NOOperator build_D();      // sum (k-1)k p_k d_k
NOOperator build_E();      // sum k p_k d_k  (grading)
NOOperator build_E1();     // sum m p_{m+1} d_m
NOOperator build_p_mult(int k);
// beta C + J + 1/2 sum ((1-beta)(k-1) + 2 beta N) k p_k d_k
NOOperator build_W0_beta(const Rational& beta, const Rational& N);

// Virasoro generator of the Gaussian beta-ensemble in p-variables
// (t_k = p_k/k).  Unshifted is the literal constraint form: every term
// with a non-positive t-index dropped.  Shifted appends the Gaussian-weight
// term -d_{t_{n+2}} and the zero-mode completions (the n=0 constant
// beta N^2 + (1-beta) N and the n=-1 term N t_1) so that the shifted
// family annihilates the partition function exactly.
NOOperator build_Ln_beta(int n, const Rational& beta, const Rational& N, bool shifted);

// W^(1) = [W_[2], E1] for n=1, then W^(n) = ad_{W^(1)}^{n-1}(E1); finite
// operator valid on inputs of degree <= window, degree shift n.
NOOperator hierarchy(int n, int window);

// The explicit degree-1 Hamiltonian term list
//   sum (k+l-1) p_k p_l d_{k+l-1} + sum kl p_{k+l+1} d_k d_l
// restricted to |annihilate| <= window (used as the frozen cross-check
// for hierarchy(1)).
std::vector<NOTerm> w1_closed_form(int window);

enum class MatrixBasis { PowerSum, NormalizedV };

struct OpMatrix {
    std::vector<Partition> row_labels;  // source, degree n
    std::vector<Partition> col_labels;  // target, degree n + shift
    RMatrix entries;                    // entries[row][col]
};

// Matrix of a homogeneous operator on degree n: rows = source partitions,
// entry = coefficient of the target basis vector in op(source basis vector).
OpMatrix matrix_in_basis(const NOOperator& op, int n, MatrixBasis basis);

// Same, with explicit bases given as vectors in p-coordinates (used for the
// Jack and fixed-point bases).  Target coordinates come from an exact solve.
OpMatrix matrix_in_custom_basis(const NOOperator& op,
                                const std::vector<Partition>& source_labels,
                                const std::vector<SymFun>& source_basis,
                                const std::vector<Partition>& target_labels,
                                const std::vector<SymFun>& target_basis);

}  // namespace cutjoin
