#include "cutjoin/hilbert.hpp"

#include <stdexcept>

namespace cutjoin {

void validate_params(const EquivParams& p) {
    if (p.e1 == 0 || p.e2 == 0)
        throw std::invalid_argument("equivariant parameters must be nonzero");
}

std::vector<Rational> tangent_weights(const Partition& lambda, const EquivParams& p) {
    validate_params(p);
    std::vector<Rational> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            auto [a, l] = arm_leg(lambda, i, j);
            out.push_back(p.e1 * (a + 1) - p.e2 * l);
            out.push_back(-p.e1 * a + p.e2 * (l + 1));
        }
    return out;
}

std::vector<Rational> taut_weights(const Partition& lambda, const EquivParams& p) {
    validate_params(p);
    std::vector<Rational> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j)
            out.push_back(p.e1 * (i - 1) + p.e2 * (j - 1));
    return out;
}

Rational euler_tangent(const Partition& lambda, const EquivParams& p) {
    Rational e = 1;
    for (const auto& w : tangent_weights(lambda, p)) e *= w;
    return e;
}

FixedPointData fixed_point_data(const Partition& lambda, const EquivParams& p) {
    FixedPointData d;
    d.lambda = lambda;
    d.tangent = tangent_weights(lambda, p);
    d.taut = taut_weights(lambda, p);
    d.euler = 1;
    for (const auto& w : d.tangent) d.euler *= w;
    return d;
}

Rational loc_inner(const SymFun& f, const SymFun& g, const EquivParams& p) {
    validate_params(p);
    Rational s = 0;
    for (const auto& [l, cf] : f.terms()) {
        Rational cg = g.coeff(l);
        if (cg == 0) continue;
        Rational w = Rational(z_factor(l));
        Rational ee = p.e1 * p.e2;
        for (int i = 0; i < l.length(); ++i) w /= ee * l.part(i) * l.part(i);
        s += cf * cg * w;
    }
    return s;
}

NOOperator alpha_minus(int k) { return op_scale(build_p_mult(k), Rational(k)); }

NOOperator alpha_plus(int k, const EquivParams& p) {
    validate_params(p);
    return NOOperator::finite({{1 / (p.e1 * p.e2), Partition{}, Partition({k})}});
}

FixedPointBasis fixed_point_basis(int n, const EquivParams& p) {
    validate_params(p);
    FixedPointBasis basis;
    basis.params = p;
    basis.alpha = -p.e1 / p.e2;
    JackBasis jack = build_jack(n, basis.alpha);
    for (const auto& [lambda, vec] : jack.vectors) {
        Rational norm = 1;
        for (int i = 1; i <= lambda.length(); ++i)
            for (int j = 1; j <= lambda.part(i - 1); ++j) {
                auto [a, l] = arm_leg(lambda, i, j);
                norm *= p.e1 * (a + 1) - p.e2 * l;
            }
        basis.labels.push_back(lambda);
        basis.vectors.push_back(vec * (1 / norm));
    }
    return basis;
}

OpMatrix fixed_point_transport(const NOOperator& op, int n, const EquivParams& p) {
    auto shift = op.degree_shift();
    if (!shift) throw std::invalid_argument("fixed_point_transport: operator is not homogeneous");
    FixedPointBasis src = fixed_point_basis(n, p);
    FixedPointBasis tgt = (*shift == 0) ? src : fixed_point_basis(n + *shift, p);
    return matrix_in_custom_basis(op, src.labels, src.vectors, tgt.labels, tgt.vectors);
}

RimhookGraph rimhook_graph(int n) {
    if (n < 0 || n > 10) throw std::invalid_argument("rimhook_graph: n must be in [0, 10]");
    RimhookGraph g;
    g.n = n;
    g.vertices = enumerate_partitions(n);
    OpMatrix m = matrix_in_basis(build_W2(), n, MatrixBasis::NormalizedV);
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = 0; j < g.vertices.size(); ++j) {
            if (i == j || m.entries[i][j] == 0) continue;
            RimhookEdge e;
            e.from = static_cast<int>(i);
            e.to = static_cast<int>(j);
            e.value = m.entries[i][j];
            e.cut = g.vertices[j].length() > g.vertices[i].length();
            g.edges.push_back(e);
        }
    return g;
}

}  // namespace cutjoin
