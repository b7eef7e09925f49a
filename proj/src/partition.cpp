#include "cutjoin/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cutjoin {

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const {
    int m = 0;
    for (int p : parts_)
        if (p == k) ++m;
    return m;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

bool canonical_less(const Partition& a, const Partition& b) {
    int na = a.size(), nb = b.size();
    if (na != nb) return na < nb;
    // reverse lexicographic: larger leading parts come first
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                        a.parts().end());
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Integer z_factor(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) mult[p]++;
    Integer z = 1;
    for (auto [k, m] : mult) {
        Integer kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, m);
        z *= kp * factorial(m);
    }
    return z;
}

Partition bump(const Partition& lambda, int m) {
    if (m < 1 || lambda.multiplicity(m) == 0)
        throw std::invalid_argument("bump: no part equal to " + std::to_string(m));
    std::vector<int> parts = lambda.parts();
    auto it = std::find(parts.begin(), parts.end(), m);
    *it = m + 1;
    return Partition::from_unsorted(std::move(parts));
}

long content_sum(const Partition& lambda) {
    long s = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) s += j - (i + 1);
    return s;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.empty()) {
        cols.assign(lambda.part(0), 0);
        for (int p : lambda.parts())
            for (int j = 0; j < p; ++j) cols[j]++;
    }
    return Partition(std::move(cols));
}

std::pair<int, int> arm_leg(const Partition& lambda, int row, int col) {
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row - 1))
        throw std::invalid_argument("arm_leg: box outside partition");
    int arm = lambda.part(row - 1) - col;
    Partition conj = conjugate(lambda);
    int leg = conj.part(col - 1) - row;
    return {arm, leg};
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

bool contains_parts(const Partition& lambda, const Partition& nu) {
    for (int k : nu.parts())
        if (lambda.multiplicity(k) < nu.multiplicity(k)) return false;
    return true;
}

Partition remove_parts(const Partition& lambda, const Partition& nu) {
    std::vector<int> parts = lambda.parts();
    for (int k : nu.parts()) {
        auto it = std::find(parts.begin(), parts.end(), k);
        if (it == parts.end()) throw std::invalid_argument("remove_parts: not a sub-multiset");
        parts.erase(it);
    }
    return Partition(std::move(parts));
}

}  // namespace cutjoin
