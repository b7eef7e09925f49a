#pragma once

#include <map>
#include <set>
#include <vector>

#include "cutjoin/partition.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin {

// Finite linear combination of power-sum monomials p_lambda with exact
// rational coefficients.  Zero coefficients are never stored; terms are
// kept in canonical partition order for deterministic serialization.
class SymFun {
  public:
    using Terms = std::map<Partition, Rational, PartitionOrder>;

    SymFun() = default;

    static SymFun zero() { return SymFun(); }
    static SymFun one() { return monomial(Partition{}); }
    static SymFun monomial(const Partition& lambda, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& lambda) const;

    void add_term(const Partition& lambda, const Rational& c);

    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(const SymFun& a, const SymFun& b);
    SymFun operator*(const Rational& c) const;
    friend SymFun operator*(const Rational& c, const SymFun& f) { return f * c; }
    bool operator==(const SymFun& o) const { return terms_ == o.terms_; }

    // Degrees |lambda| occurring in f, and the component of one degree.
    std::set<int> degrees() const;
    SymFun homogeneous_component(int n) const;
    bool is_homogeneous() const { return degrees().size() <= 1; }

  private:
    Terms terms_;
};

// <p_lambda, p_mu>_alpha = delta * z_lambda * alpha^{l(lambda)},
// extended bilinearly.  alpha = 1 is the classical Hall pairing.
// Throws on alpha = 0.
Rational hall_inner(const SymFun& f, const SymFun& g, const Rational& alpha);

// Coordinates of homogeneous f in the monomial symmetric function basis
// {m_lambda}.  Computed through the set-composition expansion of each
// p_mu (the evaluation-in-n-variables oracle lives in the tests).
// Throws on inhomogeneous input.
std::map<Partition, Rational, PartitionOrder> to_monomial_basis(const SymFun& f);

// Inverse direction: the symmetric function with given monomial-basis
// coordinates, expressed back in power sums.  Exact linear solve per degree.
SymFun from_monomial_basis(const std::map<Partition, Rational, PartitionOrder>& coords);

// Coefficients in the normalized basis v_lambda = p_lambda / z_lambda:
// the v_lambda coordinate equals z_lambda times the p_lambda coefficient.
std::map<Partition, Rational, PartitionOrder> normalized_basis_coords(const SymFun& f);

// Number of set-composition expansions of p_mu landing on m_lambda: the
// count of maps from the parts of mu onto the positions of lambda whose
// fibers sum to the targeted parts.  (Transition coefficient R_{mu,lambda}.)
Integer powersum_to_monomial_count(const Partition& mu, const Partition& lambda);

}  // namespace cutjoin
