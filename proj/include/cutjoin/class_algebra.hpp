#pragma once

#include <map>
#include <vector>

#include "cutjoin/symfun.hpp"

namespace cutjoin {

using Perm = std::vector<int>;  // images, 0-based

Perm identity_perm(int n);
Perm compose_perm(const Perm& a, const Perm& b);  // a after b
Perm inverse_perm(const Perm& a);
Perm transposition(int n, int i, int j);  // 0-based points
Partition cycle_type(const Perm& p);

// Enumerated S_n with class bookkeeping; built once per n and cached.
// Hard cap n <= 8 keeps everything at desk scale.
class PermGroupContext {
  public:
    static constexpr int kMaxN = 8;

    explicit PermGroupContext(int n);
    static const PermGroupContext& get(int n);

    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    int class_index(const Partition& lambda) const;
    Integer class_size(int idx) const { return Integer(members_[idx].size()); }
    const std::vector<Perm>& class_members(int idx) const { return members_[idx]; }
    const Perm& representative(int idx) const { return members_[idx].front(); }

  private:
    int n_;
    std::vector<Partition> classes_;
    std::vector<std::vector<Perm>> members_;
};

// Element of Z(C[S_n]) expanded over class sums K_lambda.
struct CentralElement {
    int n = 0;
    std::map<Partition, Rational, PartitionOrder> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add(const Partition& lambda, const Rational& c);
    bool operator==(const CentralElement& o) const { return n == o.n && coeffs == o.coeffs; }
};

CentralElement class_sum(int n, const Partition& lambda);
CentralElement transposition_class_sum(int n);  // K_[2]
CentralElement ce_add(const CentralElement& a, const CentralElement& b);
CentralElement ce_scale(const CentralElement& a, const Rational& c);

// Exact product in the center, by enumeration against one representative
// per target class.
CentralElement class_multiply(const CentralElement& a, const CentralElement& b);

// K_lambda -> p_lambda, or p_lambda / z_lambda when normalized.
SymFun characteristic_map(const CentralElement& z, bool normalized);

// The centered raising map r_n = (n+1) * pi_{n+1} o l_n, with pi the
// class-averaging projector (coefficient on K_mu = count of elements landing
// in C_mu divided by |C_mu|).  The (n+1) rescale is what makes the ladder
// intertwine with E_1 in the normalized basis v_lambda = p_lambda/z_lambda.
CentralElement raising_map(const CentralElement& z);

// Ladder E = [w_0, r] with w_0 = K_[2]:
//   E(z) = K^{(n+1)}_[2] * r_n(z) - r_n(K^{(n)}_[2] * z).
CentralElement centered_ladder(const CentralElement& z);

// Jucys-Murphy lifting (n+1) * pi_{n+1}(J_{n+1} l_n(z)) with
// J_{n+1} = sum_i (i, n+1); agrees with centered_ladder identically.
CentralElement jm_lifting(const CentralElement& z);

// Class-sum expansion sum_m m m_m(lambda) K_{lambda^(m->m+1)}: the
// source-class-normalized projection of the Jucys-Murphy product.  This is
// the variant that intertwines with E_1 under the *unnormalized*
// characteristic map; kept alongside the scaled-average maps above so both
// normalizations stay testable.
CentralElement ladder_class_formula(const CentralElement& z);

// Number of r-tuples of transpositions in S_n whose ordered product has
// cycle type mu.  Caps: |mu| <= 5, r <= 6.
Integer count_factorizations(const Partition& mu, int r);

}  // namespace cutjoin
