// Test-only oracles, deliberately independent of the engine's code paths:
// term application by repeated single derivatives, partition counting by
// direct recursion, and monomial-basis extraction by polynomial evaluation.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "cutjoin/noperator.hpp"
#include "cutjoin/symfun.hpp"

namespace oracles {

using cutjoin::Partition;
using cutjoin::Rational;
using cutjoin::SymFun;

// polynomials in the p_k as maps from sorted part vectors
using PolyMap = std::map<std::vector<int>, Rational>;

inline PolyMap to_map(const SymFun& f) {
    PolyMap out;
    for (const auto& [l, c] : f.terms()) out[l.parts()] = c;
    return out;
}

inline SymFun from_map(const PolyMap& m) {
    SymFun f;
    for (const auto& [parts, c] : m) f.add_term(Partition(parts), c);
    return f;
}

// one d/dp_k step
inline PolyMap derive(const PolyMap& m, int k) {
    PolyMap out;
    for (const auto& [parts, c] : m) {
        int mult = 0;
        for (int p : parts) mult += p == k;
        if (!mult) continue;
        std::vector<int> rest = parts;
        rest.erase(std::find(rest.begin(), rest.end(), k));
        out[rest] += c * mult;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline PolyMap multiply_by_p(const PolyMap& m, int k) {
    PolyMap out;
    for (const auto& [parts, c] : m) {
        std::vector<int> v = parts;
        v.push_back(k);
        std::sort(v.begin(), v.end(), std::greater<int>());
        out[v] += c;
    }
    return out;
}

// c * p_mu * d_nu applied by single steps
inline SymFun apply_term(const Rational& coeff, const Partition& mu, const Partition& nu,
                         const SymFun& f) {
    PolyMap m = to_map(f);
    for (int k : nu.parts()) m = derive(m, k);
    for (int k : mu.parts()) m = multiply_by_p(m, k);
    SymFun out;
    for (const auto& [parts, c] : m) out.add_term(Partition(parts), c * coeff);
    return out;
}

inline SymFun apply_terms(const std::vector<cutjoin::NOTerm>& terms, const SymFun& f) {
    SymFun out;
    for (const auto& t : terms) out += apply_term(t.coeff, t.create, t.annihilate, f);
    return out;
}

// partition count by direct recursion
inline long partition_count(int n, int maxpart) {
    if (n == 0) return 1;
    long total = 0;
    for (int p = std::min(n, maxpart); p >= 1; --p) total += partition_count(n - p, p);
    return total;
}

inline long partition_count(int n) { return partition_count(n, n); }

// exponent-vector expansion of p_mu in nvars variables
using ExpPoly = std::map<std::vector<int>, Rational>;

inline ExpPoly expand_powersum(const Partition& mu, int nvars) {
    ExpPoly out{{std::vector<int>(nvars, 0), Rational(1)}};
    for (int part : mu.parts()) {
        ExpPoly next;
        for (const auto& [v, c] : out)
            for (int i = 0; i < nvars; ++i) {
                std::vector<int> w = v;
                w[i] += part;
                next[w] += c;
            }
        out = next;
    }
    return out;
}

// coefficient of m_lambda read off at the dominant exponent vector
inline Rational monomial_coeff_by_evaluation(const Partition& mu, const Partition& lambda) {
    int nvars = std::max(1, mu.size());
    ExpPoly poly = expand_powersum(mu, nvars);
    std::vector<int> key(nvars, 0);
    for (int i = 0; i < lambda.length(); ++i) key[i] = lambda.part(i);
    auto it = poly.find(key);
    return it == poly.end() ? Rational(0) : it->second;
}

// reproducible random homogeneous-ish symmetric functions
inline SymFun random_symfun(std::mt19937_64& rng, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_degree), nterms(1, max_terms),
        num(-6, 6), den(1, 4);
    SymFun f;
    int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        auto parts = cutjoin::enumerate_partitions(deg(rng));
        std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
        Rational c(num(rng), den(rng));
        c.canonicalize();
        f.add_term(parts[pick(rng)], c);
    }
    return f;
}

}  // namespace oracles
