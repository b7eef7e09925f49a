#include "cutjoin/symfun.hpp"

#include <functional>
#include <stdexcept>

#include "cutjoin/linalg.hpp"

namespace cutjoin {

SymFun SymFun::monomial(const Partition& lambda, const Rational& c) {
    SymFun f;
    f.add_term(lambda, c);
    return f;
}

Rational SymFun::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFun::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFun& SymFun::operator+=(const SymFun& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, -c);
    return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
    SymFun out;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) out.add_term(merge_parts(la, lb), ca * cb);
    return out;
}

SymFun SymFun::operator*(const Rational& c) const {
    SymFun out;
    if (c == 0) return out;
    for (const auto& [l, v] : terms_) out.terms_.emplace(l, v * c);
    return out;
}

std::set<int> SymFun::degrees() const {
    std::set<int> out;
    for (const auto& [l, c] : terms_) out.insert(l.size());
    return out;
}

SymFun SymFun::homogeneous_component(int n) const {
    SymFun out;
    for (const auto& [l, c] : terms_)
        if (l.size() == n) out.add_term(l, c);
    return out;
}

Rational hall_inner(const SymFun& f, const SymFun& g, const Rational& alpha) {
    if (alpha == 0) throw std::invalid_argument("hall_inner: alpha must be nonzero");
    Rational s = 0;
    for (const auto& [l, cf] : f.terms()) {
        Rational cg = g.coeff(l);
        if (cg == 0) continue;
        Rational ap;
        mpz_pow_ui(ap.get_num_mpz_t(), alpha.get_num_mpz_t(), l.length());
        mpz_pow_ui(ap.get_den_mpz_t(), alpha.get_den_mpz_t(), l.length());
        s += cf * cg * Rational(z_factor(l)) * ap;
    }
    return s;
}

Integer powersum_to_monomial_count(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) return 0;
    int slots = lambda.length();
    std::vector<int> remaining(lambda.parts().begin(), lambda.parts().end());
    Integer count = 0;
    // assign each part of mu to a slot of lambda; fibers must fill their slot
    // exactly (total degree forces it once every remaining is nonnegative-zero)
    std::function<void(int)> rec = [&](int i) {
        if (i == mu.length()) {
            for (int r : remaining)
                if (r != 0) return;
            count += 1;
            return;
        }
        int p = mu.part(i);
        for (int j = 0; j < slots; ++j) {
            if (remaining[j] >= p) {
                remaining[j] -= p;
                rec(i + 1);
                remaining[j] += p;
            }
        }
    };
    rec(0);
    return count;
}

std::map<Partition, Rational, PartitionOrder> to_monomial_basis(const SymFun& f) {
    std::map<Partition, Rational, PartitionOrder> out;
    if (f.is_zero()) return out;
    if (!f.is_homogeneous()) throw std::invalid_argument("to_monomial_basis: inhomogeneous input");
    int n = *f.degrees().begin();
    for (const auto& lambda : enumerate_partitions(n)) {
        Rational c = 0;
        for (const auto& [mu, cmu] : f.terms())
            c += cmu * Rational(powersum_to_monomial_count(mu, lambda));
        if (c != 0) out.emplace(lambda, c);
    }
    return out;
}

SymFun from_monomial_basis(const std::map<Partition, Rational, PartitionOrder>& coords) {
    if (coords.empty()) return SymFun::zero();
    int n = coords.begin()->first.size();
    for (const auto& [l, c] : coords)
        if (l.size() != n) throw std::invalid_argument("from_monomial_basis: inhomogeneous input");
    auto parts = enumerate_partitions(n);
    int k = static_cast<int>(parts.size());
    // Solve R^T x = coords where R[mu][lambda] expands p_mu over m_lambda.
    RMatrix a(k, RVector(k));
    RVector rhs(k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i)
            a[j][i] = Rational(powersum_to_monomial_count(parts[i], parts[j]));
        auto it = coords.find(parts[j]);
        rhs[j] = it == coords.end() ? Rational(0) : it->second;
    }
    RVector x = solve_linear(a, rhs);
    SymFun out;
    for (int i = 0; i < k; ++i) out.add_term(parts[i], x[i]);
    return out;
}

std::map<Partition, Rational, PartitionOrder> normalized_basis_coords(const SymFun& f) {
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [l, c] : f.terms()) out.emplace(l, c * Rational(z_factor(l)));
    return out;
}

}  // namespace cutjoin
