#include "cutjoin/class_algebra.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cutjoin {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
    return c;
}

Perm inverse_perm(const Perm& a) {
    Perm inv(a.size());
    for (size_t x = 0; x < a.size(); ++x) inv[a[x]] = static_cast<int>(x);
    return inv;
}

Perm transposition(int n, int i, int j) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[j]);
    return p;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cycles;
    for (size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = p[y];
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition::from_unsorted(std::move(cycles));
}

PermGroupContext::PermGroupContext(int n) : n_(n) {
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("PermGroupContext: n must be in [0, 8]");
    classes_ = enumerate_partitions(n);
    members_.resize(classes_.size());
    Perm p = identity_perm(n);
    do {
        members_[class_index(cycle_type(p))].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

const PermGroupContext& PermGroupContext::get(int n) {
    static std::map<int, std::unique_ptr<PermGroupContext>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<PermGroupContext>(n)).first;
    return *it->second;
}

int PermGroupContext::class_index(const Partition& lambda) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == lambda) return static_cast<int>(i);
    throw std::invalid_argument("class_index: not a partition of n");
}

void CentralElement::add(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

CentralElement class_sum(int n, const Partition& lambda) {
    if (lambda.size() != n) throw std::invalid_argument("class_sum: |lambda| != n");
    CentralElement z;
    z.n = n;
    z.add(lambda, 1);
    return z;
}

CentralElement transposition_class_sum(int n) {
    if (n < 2) throw std::invalid_argument("transposition_class_sum: needs n >= 2");
    std::vector<int> parts{2};
    for (int i = 0; i < n - 2; ++i) parts.push_back(1);
    return class_sum(n, Partition(std::move(parts)));
}

CentralElement ce_add(const CentralElement& a, const CentralElement& b) {
    if (a.n != b.n && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("ce_add: mismatched n");
    CentralElement out = a;
    out.n = a.is_zero() ? b.n : a.n;
    for (const auto& [l, c] : b.coeffs) out.add(l, c);
    return out;
}

CentralElement ce_scale(const CentralElement& a, const Rational& c) {
    CentralElement out;
    out.n = a.n;
    for (const auto& [l, v] : a.coeffs) out.add(l, v * c);
    return out;
}

CentralElement class_multiply(const CentralElement& a, const CentralElement& b) {
    if (a.is_zero() || b.is_zero()) {
        CentralElement out;
        out.n = a.is_zero() ? b.n : a.n;
        return out;
    }
    if (a.n != b.n) throw std::invalid_argument("class_multiply: mismatched n");
    const PermGroupContext& ctx = PermGroupContext::get(a.n);
    CentralElement out;
    out.n = a.n;
    for (const auto& [la, ca] : a.coeffs) {
        int ia = ctx.class_index(la);
        for (const auto& [lb, cb] : b.coeffs) {
            int ib = ctx.class_index(lb);
            // coefficient of K_nu = #{(x,y) in C_la x C_lb : xy = z0} for a
            // fixed representative z0 of C_nu
            for (size_t inu = 0; inu < ctx.classes().size(); ++inu) {
                const Perm& z0 = ctx.representative(static_cast<int>(inu));
                long count = 0;
                for (const Perm& x : ctx.class_members(ia)) {
                    Perm y = compose_perm(inverse_perm(x), z0);
                    if (cycle_type(y) == ctx.classes()[ib]) ++count;
                }
                if (count) out.add(ctx.classes()[inu], ca * cb * count);
            }
        }
    }
    return out;
}

SymFun characteristic_map(const CentralElement& z, bool normalized) {
    SymFun f;
    for (const auto& [l, c] : z.coeffs)
        f.add_term(l, normalized ? c / Rational(z_factor(l)) : c);
    return f;
}

namespace {

// (n+1)-scaled class-averaging projection of a multiset of S_{n+1} elements
// given as per-class landing counts.
CentralElement project_scaled(int n1, const std::map<Partition, Rational, PartitionOrder>& counts) {
    const PermGroupContext& ctx = PermGroupContext::get(n1);
    CentralElement out;
    out.n = n1;
    for (const auto& [mu, count] : counts) {
        int imu = ctx.class_index(mu);
        out.add(mu, Rational(n1) * count / Rational(ctx.class_size(imu)));
    }
    return out;
}

Perm embed(const Perm& p) {  // l_n: fix the new last point
    Perm q = p;
    q.push_back(static_cast<int>(p.size()));
    return q;
}

}  // namespace

CentralElement raising_map(const CentralElement& z) {
    int n1 = z.n + 1;
    if (n1 > PermGroupContext::kMaxN) throw std::invalid_argument("raising_map: cap exceeded");
    const PermGroupContext& ctx = PermGroupContext::get(z.n);
    CentralElement out;
    out.n = n1;
    for (const auto& [lambda, c] : z.coeffs) {
        std::map<Partition, Rational, PartitionOrder> counts;
        int il = ctx.class_index(lambda);
        for (const Perm& sigma : ctx.class_members(il)) {
            Partition mu = cycle_type(embed(sigma));
            counts[mu] += 1;
        }
        out = ce_add(out, ce_scale(project_scaled(n1, counts), c));
    }
    return out;
}

CentralElement jm_lifting(const CentralElement& z) {
    int n = z.n, n1 = n + 1;
    if (n1 > PermGroupContext::kMaxN) throw std::invalid_argument("jm_lifting: cap exceeded");
    const PermGroupContext& ctx = PermGroupContext::get(n);
    CentralElement out;
    out.n = n1;
    for (const auto& [lambda, c] : z.coeffs) {
        std::map<Partition, Rational, PartitionOrder> counts;
        int il = ctx.class_index(lambda);
        for (const Perm& sigma : ctx.class_members(il)) {
            Perm es = embed(sigma);
            for (int i = 0; i < n; ++i) {
                Perm prod = compose_perm(transposition(n1, i, n), es);
                counts[cycle_type(prod)] += 1;
            }
        }
        out = ce_add(out, ce_scale(project_scaled(n1, counts), c));
    }
    return out;
}

CentralElement centered_ladder(const CentralElement& z) {
    int n = z.n;
    if (n + 1 > PermGroupContext::kMaxN)
        throw std::invalid_argument("centered_ladder: cap exceeded");
    CentralElement left, right;
    left.n = right.n = n + 1;
    if (n + 1 >= 2) left = class_multiply(transposition_class_sum(n + 1), raising_map(z));
    if (n >= 2) right = raising_map(class_multiply(transposition_class_sum(n), z));
    return ce_add(left, ce_scale(right, -1));
}

CentralElement ladder_class_formula(const CentralElement& z) {
    CentralElement out;
    out.n = z.n + 1;
    for (const auto& [lambda, c] : z.coeffs) {
        for (int m = 1; m <= z.n; ++m) {
            int mm = lambda.multiplicity(m);
            if (mm == 0) continue;
            out.add(bump(lambda, m), c * Rational(m) * mm);
        }
    }
    return out;
}

Integer count_factorizations(const Partition& mu, int r) {
    int n = mu.size();
    if (n > 5 || r > 6 || r < 0) throw std::invalid_argument("count_factorizations: caps exceeded");
    if (n == 0) return r == 0 ? 1 : 0;
    const PermGroupContext& ctx = PermGroupContext::get(n);
    // index all of S_n, then convolve r times with the transposition indicator
    std::vector<Perm> all;
    std::map<Perm, int> index;
    for (size_t ic = 0; ic < ctx.classes().size(); ++ic)
        for (const Perm& p : ctx.class_members(static_cast<int>(ic))) {
            index[p] = static_cast<int>(all.size());
            all.push_back(p);
        }
    std::vector<Perm> transpositions;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) transpositions.push_back(transposition(n, i, j));
    std::vector<Integer> dist(all.size(), 0);
    dist[index[identity_perm(n)]] = 1;
    for (int step = 0; step < r; ++step) {
        std::vector<Integer> next(all.size(), 0);
        for (size_t g = 0; g < all.size(); ++g) {
            if (dist[g] == 0) continue;
            for (const Perm& t : transpositions) next[index.at(compose_perm(t, all[g]))] += dist[g];
        }
        dist = std::move(next);
    }
    Integer total = 0;
    for (size_t g = 0; g < all.size(); ++g)
        if (cycle_type(all[g]) == mu) total += dist[g];
    return total;
}

}  // namespace cutjoin
