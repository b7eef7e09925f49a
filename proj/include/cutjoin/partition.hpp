#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutjoin/rational.hpp"

namespace cutjoin {

// Weakly decreasing sequence of positive integers.  The empty partition
// (of 0) is valid.  Values are immutable after construction.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts into canonical (weakly decreasing) form first.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }  // 0-based

    int multiplicity(int k) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string str() const;  // "[3,1]"

  private:
    std::vector<int> parts_;
};

// Canonical order: by total size, then reverse lexicographic on parts,
// e.g. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
// The degree-4 sequence is pinned by tests against the matrix emitters.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

// All partitions of n in canonical order; p(n) entries.
std::vector<Partition> enumerate_partitions(int n);

// z_lambda = prod_k k^{m_k} m_k!, the centralizer order of a permutation
// of cycle type lambda.
Integer z_factor(const Partition& lambda);

// Replace one part equal to m by m+1, re-sorting.  Throws if absent.
Partition bump(const Partition& lambda, int m);

// Sum of contents j - i over boxes (i, j) of the Young diagram,
// rows i and columns j starting at 1.
long content_sum(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// Arm a(s) = lambda_row - col, leg l(s) = lambda'_col - row for a box
// s = (row, col) inside lambda (1-based).  Throws on boxes outside.
std::pair<int, int> arm_leg(const Partition& lambda, int row, int col);

// Multiset operations used by the operator engine.  remove_parts throws
// if nu is not a sub-multiset of lambda.
Partition merge_parts(const Partition& a, const Partition& b);
bool contains_parts(const Partition& lambda, const Partition& nu);
Partition remove_parts(const Partition& lambda, const Partition& nu);

}  // namespace cutjoin
