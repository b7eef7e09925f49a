#include "cutjoin/noperator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cutjoin {

namespace {

struct TermShapeLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (!(a.first == b.first)) return canonical_less(a.first, b.first);
        return canonical_less(a.second, b.second);
    }
};

Rational falling_factorial(int m, int s) {
    Rational f = 1;
    for (int i = 0; i < s; ++i) f *= (m - i);
    return f;
}

std::optional<int> uniform_shift(const std::vector<NOTerm>& terms) {
    std::optional<int> shift;
    for (const auto& t : terms) {
        int d = t.degree_shift();
        if (!shift)
            shift = d;
        else if (*shift != d)
            return std::nullopt;
    }
    return shift;
}

}  // namespace

std::vector<NOTerm> normalize_terms(std::vector<NOTerm> terms) {
    std::map<std::pair<Partition, Partition>, Rational, TermShapeLess> collected;
    for (auto& t : terms) collected[{t.create, t.annihilate}] += t.coeff;
    std::vector<NOTerm> out;
    for (auto& [shape, c] : collected)
        if (c != 0) out.push_back({c, shape.first, shape.second});
    return out;
}

NOOperator NOOperator::finite(std::vector<NOTerm> terms, std::optional<int> window) {
    NOOperator op;
    op.terms_ = normalize_terms(std::move(terms));
    op.shift_ = uniform_shift(op.terms_);
    op.window_ = window;
    op.label_ = "finite";
    return op;
}

NOOperator NOOperator::schema(std::string label, Generator gen, std::optional<int> shift) {
    NOOperator op;
    op.label_ = std::move(label);
    op.gen_ = std::move(gen);
    op.shift_ = shift;
    return op;
}

std::vector<NOTerm> NOOperator::instantiate(int degree) const {
    if (gen_) return normalize_terms(gen_(degree));
    std::vector<NOTerm> out;
    for (const auto& t : terms_)
        if (t.annihilate.size() <= degree) out.push_back(t);
    return out;
}

SymFun NOOperator::apply(const SymFun& f) const {
    SymFun out;
    for (int n : f.degrees()) {
        if (window_ && n > *window_)
            throw std::invalid_argument("NOOperator::apply: input degree " + std::to_string(n) +
                                        " outside validity window " + std::to_string(*window_));
        SymFun comp = f.homogeneous_component(n);
        for (const auto& term : instantiate(n)) {
            for (const auto& [lambda, c] : comp.terms()) {
                if (!contains_parts(lambda, term.annihilate)) continue;
                Rational factor = term.coeff * c;
                // multiplicity bookkeeping: d_k^s applied to p_k^m gives m(m-1)..(m-s+1)
                std::map<int, int> smult;
                for (int k : term.annihilate.parts()) smult[k]++;
                for (auto [k, s] : smult) factor *= falling_factorial(lambda.multiplicity(k), s);
                if (factor == 0) continue;
                out.add_term(merge_parts(remove_parts(lambda, term.annihilate), term.create),
                             factor);
            }
        }
    }
    return out;
}

NOOperator compose(const NOOperator& a, const NOOperator& b, int window) {
    if (window < 0) throw std::invalid_argument("compose: window must be >= 0");
    if (b.window() && *b.window() < window)
        throw std::invalid_argument("compose: window of right factor too small");
    std::vector<NOTerm> bt = b.instantiate(window);
    int max_shift_b = 0;
    for (const auto& t : bt) max_shift_b = std::max(max_shift_b, t.degree_shift());
    int wa = window + max_shift_b;
    if (a.window() && *a.window() < wa)
        throw std::invalid_argument("compose: window of left factor too small for intermediates");
    std::vector<NOTerm> at = a.instantiate(wa);

    std::vector<NOTerm> out;
    for (const auto& ta : at) {
        std::map<int, int> smult;  // derivatives of ta by part value
        for (int k : ta.annihilate.parts()) smult[k]++;
        for (const auto& tb : bt) {
            std::map<int, int> rmult;  // creations of tb by part value
            for (int k : tb.create.parts()) rmult[k]++;
            // contraction counts j_k for each part value present on both sides
            std::vector<std::pair<int, std::pair<int, int>>> common;  // k -> (s, r)
            for (auto [k, s] : smult) {
                auto it = rmult.find(k);
                if (it != rmult.end()) common.push_back({k, {s, it->second}});
            }
            std::vector<int> j(common.size(), 0);
            while (true) {
                Rational factor = ta.coeff * tb.coeff;
                for (size_t i = 0; i < common.size(); ++i) {
                    auto [s, r] = common[i].second;
                    factor *= Rational(binomial(s, j[i]) * binomial(r, j[i]) * factorial(j[i]));
                }
                if (factor != 0) {
                    std::vector<int> cre = ta.create.parts();
                    std::vector<int> ann = tb.annihilate.parts();
                    std::vector<int> bc = tb.create.parts();
                    std::vector<int> aa = ta.annihilate.parts();
                    for (size_t i = 0; i < common.size(); ++i) {
                        for (int rep = 0; rep < j[i]; ++rep) {
                            bc.erase(std::find(bc.begin(), bc.end(), common[i].first));
                            aa.erase(std::find(aa.begin(), aa.end(), common[i].first));
                        }
                    }
                    cre.insert(cre.end(), bc.begin(), bc.end());
                    ann.insert(ann.end(), aa.begin(), aa.end());
                    out.push_back({factor, Partition::from_unsorted(std::move(cre)),
                                   Partition::from_unsorted(std::move(ann))});
                }
                // next contraction vector
                size_t pos = 0;
                while (pos < j.size()) {
                    auto [s, r] = common[pos].second;
                    if (j[pos] < std::min(s, r)) {
                        ++j[pos];
                        break;
                    }
                    j[pos] = 0;
                    ++pos;
                }
                if (pos == j.size()) break;
            }
        }
    }
    // terms that cannot fire within the window never matter there
    std::vector<NOTerm> pruned;
    for (auto& t : normalize_terms(std::move(out)))
        if (t.annihilate.size() <= window) pruned.push_back(std::move(t));
    return NOOperator::finite(std::move(pruned), window);
}

NOOperator commutator(const NOOperator& a, const NOOperator& b, int window) {
    NOOperator ab = compose(a, b, window);
    NOOperator ba = compose(b, a, window);
    std::vector<NOTerm> terms = ab.instantiate(window);
    for (auto t : ba.instantiate(window)) {
        t.coeff = -t.coeff;
        terms.push_back(std::move(t));
    }
    return NOOperator::finite(normalize_terms(std::move(terms)), window);
}

NOOperator op_add(const NOOperator& a, const NOOperator& b) {
    if (!a.is_schema() && !b.is_schema()) {
        std::optional<int> w;
        if (a.window() || b.window()) {
            int wa = a.window().value_or(INT32_MAX), wb = b.window().value_or(INT32_MAX);
            w = std::min(wa, wb);
        }
        std::vector<NOTerm> terms = a.instantiate(INT32_MAX);
        auto tb = b.instantiate(INT32_MAX);
        terms.insert(terms.end(), tb.begin(), tb.end());
        return NOOperator::finite(std::move(terms), w);
    }
    std::optional<int> shift;
    if (a.degree_shift() && b.degree_shift() && *a.degree_shift() == *b.degree_shift())
        shift = a.degree_shift();
    NOOperator ca = a, cb = b;
    return NOOperator::schema(
        a.label() + "+" + b.label(),
        [ca, cb](int n) {
            auto t = ca.instantiate(n);
            auto u = cb.instantiate(n);
            t.insert(t.end(), u.begin(), u.end());
            return t;
        },
        shift);
}

NOOperator op_scale(const NOOperator& a, const Rational& c) {
    if (!a.is_schema()) {
        auto terms = a.instantiate(INT32_MAX);
        for (auto& t : terms) t.coeff *= c;
        return NOOperator::finite(std::move(terms), a.window());
    }
    NOOperator ca = a;
    return NOOperator::schema(
        a.label() + "*scalar",
        [ca, c](int n) {
            auto t = ca.instantiate(n);
            for (auto& x : t) x.coeff *= c;
            return t;
        },
        a.degree_shift());
}

namespace {

std::vector<NOTerm> cut_terms(int degree) {
    std::vector<NOTerm> out;
    for (int a = 1; 2 * a <= degree; ++a)
        for (int b = a; a + b <= degree; ++b) {
            Rational c = (a == b) ? Rational(a) : Rational(a + b);
            out.push_back({c, Partition::from_unsorted({b, a}), Partition({a + b})});
        }
    return out;
}

std::vector<NOTerm> join_terms(int degree) {
    std::vector<NOTerm> out;
    for (int a = 1; 2 * a <= degree; ++a)
        for (int b = a; a + b <= degree; ++b) {
            Rational c = (a == b) ? Rational(Rational(a) * a / 2) : Rational(Rational(a) * b);
            out.push_back({c, Partition({a + b}), Partition::from_unsorted({b, a})});
        }
    return out;
}

std::vector<NOTerm> diag_terms(int degree, const std::function<Rational(int)>& coeff) {
    std::vector<NOTerm> out;
    for (int k = 1; k <= degree; ++k) {
        Rational c = coeff(k);
        if (c != 0) out.push_back({c, Partition({k}), Partition({k})});
    }
    return out;
}

}  // namespace

NOOperator build_cut() {
    return NOOperator::schema("C", [](int n) { return cut_terms(n); }, 0);
}

NOOperator build_join() {
    return NOOperator::schema("J", [](int n) { return join_terms(n); }, 0);
}

NOOperator build_W2() {
    return NOOperator::schema(
        "W2",
        [](int n) {
            auto t = cut_terms(n);
            auto u = join_terms(n);
            t.insert(t.end(), u.begin(), u.end());
            return t;
        },
        0);
}

NOOperator build_D() {
    return NOOperator::schema(
        "D", [](int n) { return diag_terms(n, [](int k) -> Rational { return Rational(k - 1) * k; }); }, 0);
}

NOOperator build_E() {
    return NOOperator::schema(
        "E", [](int n) { return diag_terms(n, [](int k) -> Rational { return Rational(k); }); }, 0);
}

NOOperator build_E1() {
    return NOOperator::schema(
        "E1",
        [](int n) {
            std::vector<NOTerm> out;
            for (int m = 1; m <= n; ++m)
                out.push_back({Rational(m), Partition({m + 1}), Partition({m})});
            return out;
        },
        1);
}

NOOperator build_p_mult(int k) {
    if (k < 1) throw std::invalid_argument("build_p_mult: k must be >= 1");
    return NOOperator::finite({{Rational(1), Partition({k}), Partition{}}});
}

NOOperator build_W0_beta(const Rational& beta, const Rational& N) {
    return NOOperator::schema(
        "W0beta",
        [beta, N](int n) {
            std::vector<NOTerm> out;
            for (auto& t : cut_terms(n)) {
                t.coeff *= beta;
                out.push_back(t);
            }
            for (auto& t : join_terms(n)) out.push_back(t);
            auto diag = diag_terms(n, [&](int k) -> Rational {
                return ((1 - beta) * (k - 1) + 2 * beta * N) * k / 2;
            });
            out.insert(out.end(), diag.begin(), diag.end());
            return out;
        },
        0);
}

NOOperator build_Ln_beta(int n, const Rational& beta, const Rational& N, bool shifted) {
    if (n < -1) throw std::invalid_argument("build_Ln_beta: n must be >= -1");
    auto gen = [n, beta, N, shifted](int degree) {
        std::vector<NOTerm> out;
        // sum_k k t_k d_{t_{k+n}} = sum_k (k+n) p_k d_{p_{k+n}}, k >= 1, k+n >= 1
        for (int k = std::max(1, 1 - n); k + n <= degree; ++k)
            out.push_back({Rational(k + n), Partition({k}), Partition({k + n})});
        // beta sum_{a+b=n, a,b>=1} d_{t_a} d_{t_b} = beta sum ab d_{p_a} d_{p_b}
        for (int a = 1; 2 * a <= n; ++a) {
            int b = n - a;
            if (b > degree || a + b > degree) continue;
            Rational c = (a == b) ? Rational(beta * a * b) : Rational(2 * beta * a * b);
            out.push_back({c, Partition{}, Partition::from_unsorted({b, a})});
        }
        // ((1-beta)(n+1) + 2 beta N) d_{t_n} for n >= 1
        if (n >= 1 && n <= degree)
            out.push_back({((1 - beta) * (n + 1) + 2 * beta * N) * n, Partition{},
                           Partition({n})});
        if (shifted) {
            // Gaussian weight term and zero-mode completions (Ward-exact form)
            if (n + 2 <= degree)
                out.push_back({Rational(-(n + 2)), Partition{}, Partition({n + 2})});
            if (n == 0) out.push_back({beta * N * N + (1 - beta) * N, Partition{}, Partition{}});
            if (n == -1) out.push_back({N, Partition({1}), Partition{}});
        }
        return out;
    };
    std::string label = "L" + std::to_string(n) + (shifted ? "_shifted" : "");
    return NOOperator::schema(label, gen, shifted ? std::nullopt : std::optional<int>(-n));
}

NOOperator hierarchy(int n, int window) {
    if (n < 1) throw std::invalid_argument("hierarchy: n must be >= 1");
    if (window < 0) throw std::invalid_argument("hierarchy: window must be >= 0");
    NOOperator w1 = commutator(build_W2(), build_E1(), window + n);
    if (n == 1) {
        std::vector<NOTerm> pruned;
        for (auto& t : w1.instantiate(window)) pruned.push_back(std::move(t));
        return NOOperator::finite(std::move(pruned), window);
    }
    NOOperator cur = build_E1();
    for (int k = 1; k <= n - 1; ++k) cur = commutator(w1, cur, window + (n - 1 - k));
    return cur;
}

std::vector<NOTerm> w1_closed_form(int window) {
    std::vector<NOTerm> out;
    for (int k = 1; 2 * k - 1 <= window; ++k)
        for (int l = k; k + l - 1 <= window; ++l) {
            Rational c = (k == l) ? Rational(k + l - 1) : Rational(2 * Rational(k + l - 1));
            out.push_back({c, Partition::from_unsorted({l, k}), Partition({k + l - 1})});
        }
    for (int k = 1; 2 * k <= window; ++k)
        for (int l = k; k + l <= window; ++l) {
            Rational c = (k == l) ? Rational(Rational(k) * l) : Rational(2 * Rational(k) * l);
            out.push_back({c, Partition({k + l + 1}), Partition::from_unsorted({l, k})});
        }
    return normalize_terms(std::move(out));
}

OpMatrix matrix_in_basis(const NOOperator& op, int n, MatrixBasis basis) {
    auto shift = op.degree_shift();
    if (!shift) throw std::invalid_argument("matrix_in_basis: operator is not homogeneous");
    if (n + *shift < 0) throw std::invalid_argument("matrix_in_basis: negative target degree");
    OpMatrix m;
    m.row_labels = enumerate_partitions(n);
    m.col_labels = enumerate_partitions(n + *shift);
    m.entries.assign(m.row_labels.size(), RVector(m.col_labels.size(), 0));
    for (size_t i = 0; i < m.row_labels.size(); ++i) {
        const Partition& lambda = m.row_labels[i];
        Rational scale = 1;
        if (basis == MatrixBasis::NormalizedV) scale = Rational(1) / Rational(z_factor(lambda));
        SymFun image = op.apply(SymFun::monomial(lambda, scale));
        for (size_t j = 0; j < m.col_labels.size(); ++j) {
            const Partition& mu = m.col_labels[j];
            Rational c = image.coeff(mu);
            if (basis == MatrixBasis::NormalizedV) c *= Rational(z_factor(mu));
            m.entries[i][j] = c;
        }
    }
    return m;
}

OpMatrix matrix_in_custom_basis(const NOOperator& op, const std::vector<Partition>& source_labels,
                                const std::vector<SymFun>& source_basis,
                                const std::vector<Partition>& target_labels,
                                const std::vector<SymFun>& target_basis) {
    size_t k = target_basis.size();
    if (target_labels.size() != k || source_labels.size() != source_basis.size())
        throw std::invalid_argument("matrix_in_custom_basis: label/basis size mismatch");
    if (k == 0) throw std::invalid_argument("matrix_in_custom_basis: empty target basis");
    int target_degree = target_labels.empty() ? 0 : target_labels[0].size();
    auto monos = enumerate_partitions(target_degree);
    RMatrix t(monos.size(), RVector(k, 0));
    for (size_t j = 0; j < k; ++j)
        for (size_t r = 0; r < monos.size(); ++r) t[r][j] = target_basis[j].coeff(monos[r]);
    RMatrix tinv;  // solve T x = image for each source vector via one inversion
    if (monos.size() != k)
        throw std::invalid_argument("matrix_in_custom_basis: target basis is not square");
    tinv = invert(t);

    OpMatrix m;
    m.row_labels = source_labels;
    m.col_labels = target_labels;
    m.entries.assign(source_basis.size(), RVector(k, 0));
    for (size_t i = 0; i < source_basis.size(); ++i) {
        SymFun image = op.apply(source_basis[i]);
        RVector rhs(monos.size(), 0);
        for (size_t r = 0; r < monos.size(); ++r) rhs[r] = image.coeff(monos[r]);
        for (size_t j = 0; j < k; ++j) {
            Rational x = 0;
            for (size_t r = 0; r < monos.size(); ++r) x += tinv[j][r] * rhs[r];
            m.entries[i][j] = x;
        }
    }
    return m;
}

}  // namespace cutjoin
