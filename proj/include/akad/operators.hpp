#pragma once

#include "akad/norms.hpp"

#include <Eigen/Core>

#include <cstdint>

namespace akad {

// Dense operator between finite-dimensional model spaces. Entries are
// (codomain.dim x domain.dim); construction validates shape and finiteness.
struct LinearOperator {
    ModelSpace domain;
    ModelSpace codomain;
    Eigen::MatrixXd entries;

    LinearOperator(ModelSpace dom, ModelSpace cod, Eigen::MatrixXd m);

    static LinearOperator identity(const ModelSpace& space);

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

    bool is_zero(double tol = 0.0) const {
        return entries.size() == 0 || entries.cwiseAbs().maxCoeff() <= tol;
    }
};

// a after b, i.e. x -> a(b(x)). Requires b.codomain == a.domain.
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);

struct OperatorNorm {
    double value = 0.0;
    // true when the (domain, codomain) norm pair admits a closed form:
    // (l2,l2) largest singular value, (l1,l1) max column sum, (linf,linf) max
    // row sum. Otherwise `value` is a sampled lower estimate.
    bool exact = false;
};

OperatorNorm op_norm(const LinearOperator& t, int probe_count = 256,
                     std::uint64_t seed = 0);

// Transposed entries on the dual model spaces.
LinearOperator adjoint(const LinearOperator& t);

struct PseudoInverseResult {
    LinearOperator k_dagger;
    int numerical_rank = 0;
    double sv_cutoff = 0.0;
};

// Moore-Penrose pseudo-inverse via SVD. Singular values below
// rel_cutoff * sigma_max are treated as zero. The zero matrix yields the zero
// pseudo-inverse with rank 0.
PseudoInverseResult pseudo_inverse(const LinearOperator& k, double rel_cutoff = 1e-12);

// P = K†K on the domain, Q = KK† on the codomain (Lemma-style projection pair:
// both idempotent, Q restricts to the identity on the range of K).
struct ProjectorPair {
    LinearOperator p;
    LinearOperator q;
};

ProjectorPair projections_from_pseudo(const LinearOperator& k,
                                      const PseudoInverseResult& kd);

// Numerical rank at a relative singular-value cutoff.
int numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff = 1e-10);

}  // namespace akad
