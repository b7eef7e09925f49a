#include "cutjoin/jack.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutjoin {

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return false;
    long sl = 0, sm = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        sl += i < lambda.length() ? lambda.part(i) : 0;
        sm += i < mu.length() ? mu.part(i) : 0;
        if (sl < sm) return false;
    }
    return true;
}

namespace {

// Monomial symmetric functions of degree n in power-sum coordinates.
std::map<Partition, SymFun, PartitionOrder> monomial_vectors(int n) {
    std::map<Partition, SymFun, PartitionOrder> out;
    for (const auto& lambda : enumerate_partitions(n)) {
        std::map<Partition, Rational, PartitionOrder> coords;
        coords.emplace(lambda, 1);
        out.emplace(lambda, from_monomial_basis(coords));
    }
    return out;
}

JackBasis gram_schmidt(int n, const Rational& alpha, std::vector<Partition> order) {
    if (alpha == 0) throw std::invalid_argument("build_jack: alpha must be nonzero");
    if (n < 0 || n > 12) throw std::invalid_argument("build_jack: n must be in [0, 12]");
    auto mvec = monomial_vectors(n);
    JackBasis basis;
    basis.n = n;
    basis.alpha = alpha;
    // process dominance-lowest first so projections only see built vectors
    std::reverse(order.begin(), order.end());
    std::vector<std::pair<Partition, SymFun>> built;
    for (const auto& lambda : order) {
        SymFun v = mvec.at(lambda);
        for (const auto& [mu, p] : built) {
            Rational norm = hall_inner(p, p, alpha);
            if (norm == 0)
                throw std::invalid_argument("build_jack: singular alpha at pivot " + mu.str());
            v -= p * (hall_inner(v, p, alpha) / norm);
        }
        built.emplace_back(lambda, v);
        basis.vectors.emplace(lambda, std::move(v));
    }
    return basis;
}

}  // namespace

JackBasis build_jack(int n, const Rational& alpha) {
    return gram_schmidt(n, alpha, enumerate_partitions(n));
}

JackBasis build_jack_conjugate_refinement(int n, const Rational& alpha) {
    // lambda before nu iff conjugate(nu) precedes conjugate(lambda) in the
    // canonical order; also a linear extension of dominance
    auto order = enumerate_partitions(n);
    std::stable_sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) {
        return canonical_less(conjugate(b), conjugate(a));
    });
    return gram_schmidt(n, alpha, std::move(order));
}

Rational jack_norm_formula(const Partition& lambda, const Rational& alpha) {
    Rational prod = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            auto [a, l] = arm_leg(lambda, i, j);
            prod *= (alpha * (a + 1) + l) / (alpha * a + l + 1);
        }
    return prod;
}

NOOperator build_deformed_cutjoin(const Rational& beta) {
    return op_add(op_scale(build_cut(), beta),
                  op_add(build_join(), op_scale(build_D(), (1 - beta) / 2)));
}

JackDiagonality verify_jack_diagonality(int n, const Rational& beta) {
    JackDiagonality result;
    if (beta == 0) throw std::invalid_argument("verify_jack_diagonality: beta must be nonzero");
    result.alpha = 1 / beta;
    JackBasis basis = build_jack(n, result.alpha);
    NOOperator op = build_deformed_cutjoin(beta);
    result.diagonal = true;
    for (const auto& [lambda, p] : basis.vectors) {
        SymFun image = op.apply(p);
        // eigenvalue candidate read off the first stored term of P_lambda
        const auto& [mu0, c0] = *p.terms().begin();
        Rational e = image.coeff(mu0) / c0;
        if (!(image == p * e)) {
            result.diagonal = false;
            result.failure = "image of P_" + lambda.str() + " is not proportional to it";
            continue;
        }
        result.eigenvalues.emplace(lambda, e);
    }
    return result;
}

OpMatrix jack_matrix(const NOOperator& op, int n, const Rational& alpha) {
    auto shift = op.degree_shift();
    if (!shift) throw std::invalid_argument("jack_matrix: operator is not homogeneous");
    JackBasis src = build_jack(n, alpha);
    JackBasis tgt = (*shift == 0) ? src : build_jack(n + *shift, alpha);
    std::vector<Partition> src_labels, tgt_labels;
    std::vector<SymFun> src_vecs, tgt_vecs;
    for (const auto& [l, v] : src.vectors) {
        src_labels.push_back(l);
        src_vecs.push_back(v);
    }
    for (const auto& [l, v] : tgt.vectors) {
        tgt_labels.push_back(l);
        tgt_vecs.push_back(v);
    }
    return matrix_in_custom_basis(op, src_labels, src_vecs, tgt_labels, tgt_vecs);
}

}  // namespace cutjoin
