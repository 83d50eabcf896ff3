#include "akad/operators.hpp"

#include "akad/rng.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <stdexcept>
#include <string>

namespace akad {

namespace {

NormKind effective_kind(const NormTag& tag) {
    // The c0 model coincides with linf on finite vectors.
    return tag.kind == NormKind::C0Model ? NormKind::LInf : tag.kind;
}

bool is_l2(const NormTag& tag) {
    return tag.kind == NormKind::Lp && tag.p == 2.0;
}

bool is_l1(const NormTag& tag) {
    return tag.kind == NormKind::Lp && tag.p == 1.0;
}

Eigen::VectorXd unit_probe(std::mt19937_64& gen, const ModelSpace& space) {
    Eigen::VectorXd v = detail::gaussian_vector(gen, space.dim);
    double n = vec_norm(v, space.norm);
    while (n < 1e-300) {
        v = detail::gaussian_vector(gen, space.dim);
        n = vec_norm(v, space.norm);
    }
    return v / n;
}

}  // namespace

LinearOperator::LinearOperator(ModelSpace dom, ModelSpace cod, Eigen::MatrixXd m)
    : domain(dom), codomain(cod), entries(std::move(m)) {
    if (entries.rows() != codomain.dim || entries.cols() != domain.dim)
        throw std::invalid_argument(
            "LinearOperator: entry matrix is " + std::to_string(entries.rows()) + "x" +
            std::to_string(entries.cols()) + ", expected " + std::to_string(codomain.dim) +
            "x" + std::to_string(domain.dim));
    if (!entries.allFinite())
        throw std::invalid_argument("LinearOperator: non-finite entry");
}

LinearOperator LinearOperator::identity(const ModelSpace& space) {
    return LinearOperator(space, space, Eigen::MatrixXd::Identity(space.dim, space.dim));
}

Eigen::VectorXd LinearOperator::apply(const Eigen::VectorXd& x) const {
    if (x.size() != domain.dim)
        throw std::invalid_argument("LinearOperator::apply: vector has dimension " +
                                    std::to_string(x.size()) + ", domain is " +
                                    std::to_string(domain.dim));
    return entries * x;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    if (b.codomain != a.domain)
        throw std::invalid_argument("compose: codomain of inner operator does not match "
                                    "domain of outer operator");
    return LinearOperator(b.domain, a.codomain, a.entries * b.entries);
}

OperatorNorm op_norm(const LinearOperator& t, int probe_count, std::uint64_t seed) {
    const NormKind dk = effective_kind(t.domain.norm);
    const NormKind ck = effective_kind(t.codomain.norm);

    if (is_l2(t.domain.norm) && is_l2(t.codomain.norm)) {
        if (t.entries.size() == 0) return {0.0, true};
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(t.entries);
        return {svd.singularValues()(0), true};
    }
    if (is_l1(t.domain.norm) && is_l1(t.codomain.norm))
        return {t.entries.cwiseAbs().colwise().sum().maxCoeff(), true};
    if (dk == NormKind::LInf && ck == NormKind::LInf)
        return {t.entries.cwiseAbs().rowwise().sum().maxCoeff(), true};

    // Mixed norm pair: sampled lower estimate over unit probes.
    std::mt19937_64 gen(seed);
    double best = 0.0;
    // Basis directions first; they are extreme for the polyhedral norms and a
    // cheap floor for the rest.
    for (int i = 0; i < t.domain.dim && i < probe_count; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(t.domain.dim);
        e(i) = 1.0;
        best = std::max(best, vec_norm(t.entries * e, t.codomain.norm) /
                                  vec_norm(e, t.domain.norm));
    }
    for (int i = 0; i < probe_count; ++i) {
        Eigen::VectorXd x = unit_probe(gen, t.domain);
        best = std::max(best, vec_norm(t.entries * x, t.codomain.norm));
    }
    return {best, false};
}

LinearOperator adjoint(const LinearOperator& t) {
    return LinearOperator(dual_space(t.codomain), dual_space(t.domain),
                          t.entries.transpose());
}

PseudoInverseResult pseudo_inverse(const LinearOperator& k, double rel_cutoff) {
    if (!(rel_cutoff > 0.0 && rel_cutoff < 1.0))
        throw std::invalid_argument("pseudo_inverse: rel_cutoff must lie in (0, 1)");

    const ModelSpace dag_dom = k.codomain;
    const ModelSpace dag_cod = k.domain;

    if (k.is_zero()) {
        return {LinearOperator(dag_dom, dag_cod,
                               Eigen::MatrixXd::Zero(dag_cod.dim, dag_dom.dim)),
                0, 0.0};
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(k.entries,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = rel_cutoff * sv(0);

    int rank = 0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            inv(i) = 1.0 / sv(i);
            ++rank;
        }
    }
    Eigen::MatrixXd dagger =
        svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    return {LinearOperator(dag_dom, dag_cod, std::move(dagger)), rank, cutoff};
}

ProjectorPair projections_from_pseudo(const LinearOperator& k,
                                      const PseudoInverseResult& kd) {
    LinearOperator p = compose(kd.k_dagger, k);   // domain side, K†K
    LinearOperator q = compose(k, kd.k_dagger);   // codomain side, KK†
    return {std::move(p), std::move(q)};
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff) {
    if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = rel_cutoff * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

}  // namespace akad
