#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cutjoin/partition.hpp"
#include "cutjoin/rational.hpp"

namespace cutjoin {

// Sparse polynomial in N variables, exponent-vector keyed.
using Monomial = std::vector<int>;
using MultiPoly = std::map<Monomial, Rational>;

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly vandermonde_power(int nvars, int exponent);     // prod_{i<j} (x_i - x_j)^exponent
MultiPoly powersum_poly(int nvars, const Partition& mu);  // p_mu(x_1..x_N)

// Normalized Gaussian expectation <p_mu> of the beta-ensemble with weight
// exp(-x^2/2) and |Delta|^{2 beta}: the Vandermonde power is expanded into
// monomials and each variable integrated by (2m-1)!!, then divided by the
// mu = () value.  Integer beta in {1,2,3}, N <= 4.
Rational gaussian_moment(const Partition& mu, int N, int beta);

struct MomentTable {
    int N = 0;
    int beta = 0;
    std::map<Partition, Rational, PartitionOrder> moments;
};

MomentTable build_moment_table(int N, int beta, int max_weight);

// Z as a formal series in the times t_k: coefficient of the t-monomial
// with multi-index mu is <p_mu> / prod_j m_j(mu)!.
struct TruncatedSeries {
    int truncation = 0;  // coefficients of weight <= truncation are exact
    std::map<Partition, Rational, PartitionOrder> coeffs;

    Rational coeff(const Partition& mu) const;
    bool is_zero() const { return coeffs.empty(); }
};

TruncatedSeries build_Z_series(int N, int beta, int d);
TruncatedSeries build_Z_series(const MomentTable& table, int d);

// Formal application of the Virasoro generator L_n in the t-variables.
// The output truncation accounts for the weight raised by each term
// (n, or n+2 when shifted).  Shifted carries the Gaussian -d_{t_{n+2}}
// term and the zero-mode completions, mirroring build_Ln_beta.
TruncatedSeries apply_Ln_to_series(int n, const Rational& beta, const Rational& N,
                                   const TruncatedSeries& s, bool shifted);

// Series multiplication by the monomial t_k (weight k), for assembling
// sum_n n p_n L_n-type combinations on the t-side.
TruncatedSeries series_mul_t(const TruncatedSeries& s, int k);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& s, const Rational& c);

// Q_b = (sqrt(beta) - 1/sqrt(beta))/2, exact when beta is a perfect square
// of a rational.
std::optional<Rational> background_charge(const Rational& beta);

}  // namespace cutjoin
