#include "cutjoin/beta_ensemble.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cutjoin {

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [va, ca] : a)
        for (const auto& [vb, cb] : b) {
            Monomial v(va.size());
            for (size_t i = 0; i < va.size(); ++i) v[i] = va[i] + vb[i];
            auto [it, inserted] = out.emplace(std::move(v), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

MultiPoly vandermonde_power(int nvars, int exponent) {
    MultiPoly out{{Monomial(nvars, 0), Rational(1)}};
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            MultiPoly diff;
            Monomial xi(nvars, 0), xj(nvars, 0);
            xi[i] = 1;
            xj[j] = 1;
            diff[xi] = 1;
            diff[xj] = -1;
            for (int e = 0; e < exponent; ++e) out = mp_mul(out, diff);
        }
    return out;
}

MultiPoly powersum_poly(int nvars, const Partition& mu) {
    MultiPoly out{{Monomial(nvars, 0), Rational(1)}};
    for (int p : mu.parts()) {
        MultiPoly pk;
        for (int i = 0; i < nvars; ++i) {
            Monomial v(nvars, 0);
            v[i] = p;
            pk[v] = 1;
        }
        out = mp_mul(out, pk);
    }
    return out;
}

namespace {

void check_caps(const Partition& mu, int N, int beta) {
    if (beta < 1 || beta > 3)
        throw std::invalid_argument("gaussian_moment: beta must be an integer in {1,2,3}");
    if (N < 1 || N > 4) throw std::invalid_argument("gaussian_moment: N must be in [1,4]");
    if (mu.size() + beta * N * (N - 1) > 40)
        throw std::invalid_argument("gaussian_moment: degree cap exceeded");
}

// int x^m e^{-x^2/2} dx / int e^{-x^2/2} dx = (m-1)!! for even m, 0 for odd.
Rational gaussian_integral_factor(const Monomial& v) {
    Rational f = 1;
    for (int e : v) {
        if (e % 2 == 1) return 0;
        if (e > 0) f *= Rational(double_factorial(e - 1));
    }
    return f;
}

Rational integrate(const MultiPoly& p) {
    Rational s = 0;
    for (const auto& [v, c] : p) s += c * gaussian_integral_factor(v);
    return s;
}

}  // namespace

Rational gaussian_moment(const Partition& mu, int N, int beta) {
    check_caps(mu, N, beta);
    MultiPoly v = vandermonde_power(N, 2 * beta);
    Rational z0 = integrate(v);
    return integrate(mp_mul(v, powersum_poly(N, mu))) / z0;
}

MomentTable build_moment_table(int N, int beta, int max_weight) {
    check_caps(Partition{}, N, beta);
    MomentTable t;
    t.N = N;
    t.beta = beta;
    MultiPoly v = vandermonde_power(N, 2 * beta);
    Rational z0 = integrate(v);
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& mu : enumerate_partitions(w)) {
            if (w % 2 == 1) {
                t.moments.emplace(mu, 0);  // odd weight vanishes by parity
                continue;
            }
            t.moments.emplace(mu, integrate(mp_mul(v, powersum_poly(N, mu))) / z0);
        }
    return t;
}

Rational TruncatedSeries::coeff(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? Rational(0) : it->second;
}

TruncatedSeries build_Z_series(const MomentTable& table, int d) {
    TruncatedSeries s;
    s.truncation = d;
    for (const auto& [mu, m] : table.moments) {
        if (mu.size() > d) continue;
        if (m == 0) continue;
        Rational aut = 1;
        std::map<int, int> mult;
        for (int p : mu.parts()) mult[p]++;
        for (auto [k, c] : mult) aut *= Rational(factorial(c));
        s.coeffs.emplace(mu, m / aut);
    }
    return s;
}

TruncatedSeries build_Z_series(int N, int beta, int d) {
    return build_Z_series(build_moment_table(N, beta, d), d);
}

namespace {

void series_add_term(TruncatedSeries& s, const Partition& mu, const Rational& c) {
    if (c == 0 || mu.size() > s.truncation) return;
    auto [it, inserted] = s.coeffs.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.coeffs.erase(it);
    }
}

Partition remove_one(const Partition& mu, int k) { return remove_parts(mu, Partition({k})); }

}  // namespace

TruncatedSeries apply_Ln_to_series(int n, const Rational& beta, const Rational& N,
                                   const TruncatedSeries& s, bool shifted) {
    if (n < -1) throw std::invalid_argument("apply_Ln_to_series: n must be >= -1");
    TruncatedSeries out;
    int raise = std::max({shifted ? n + 2 : 0, n, 0});
    out.truncation = s.truncation - raise;
    for (const auto& [mu, c] : s.coeffs) {
        // sum_k k t_k d_{t_{k+n}}, k >= 1, k+n >= 1
        for (int q : std::set<int>(mu.parts().begin(), mu.parts().end())) {
            int k = q - n;
            if (k < 1) continue;
            Partition target = merge_parts(remove_one(mu, q), Partition({k}));
            series_add_term(out, target, c * k * mu.multiplicity(q));
        }
        // beta sum_{a+b=n, a,b>=1} d_{t_a} d_{t_b} (ordered pairs)
        for (int a = 1; a < n; ++a) {
            int b = n - a;
            if (mu.multiplicity(a) == 0) continue;
            Partition first = remove_one(mu, a);
            if (first.multiplicity(b) == 0) continue;
            series_add_term(out, remove_one(first, b),
                            c * beta * mu.multiplicity(a) * first.multiplicity(b));
        }
        // ((1-beta)(n+1) + 2 beta N) d_{t_n}
        if (n >= 1 && mu.multiplicity(n) > 0)
            series_add_term(out, remove_one(mu, n),
                            c * ((1 - beta) * (n + 1) + 2 * beta * N) * mu.multiplicity(n));
        if (shifted) {
            if (mu.multiplicity(n + 2) > 0)
                series_add_term(out, remove_one(mu, n + 2), -c * mu.multiplicity(n + 2));
            if (n == 0) series_add_term(out, mu, c * (beta * N * N + (1 - beta) * N));
            if (n == -1) series_add_term(out, merge_parts(mu, Partition({1})), c * N);
        }
    }
    return out;
}

TruncatedSeries series_mul_t(const TruncatedSeries& s, int k) {
    TruncatedSeries out;
    out.truncation = s.truncation + k;
    for (const auto& [mu, c] : s.coeffs) series_add_term(out, merge_parts(mu, Partition({k})), c);
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out;
    out.truncation = std::min(a.truncation, b.truncation);
    for (const auto& [mu, c] : a.coeffs) series_add_term(out, mu, c);
    for (const auto& [mu, c] : b.coeffs) series_add_term(out, mu, c);
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& s, const Rational& c) {
    TruncatedSeries out;
    out.truncation = s.truncation;
    if (c == 0) return out;
    for (const auto& [mu, v] : s.coeffs) out.coeffs.emplace(mu, v * c);
    return out;
}

std::optional<Rational> background_charge(const Rational& beta) {
    auto b = sqrt_exact(beta);
    if (!b || *b == 0) return std::nullopt;
    return (*b - 1 / *b) / 2;
}

}  // namespace cutjoin
