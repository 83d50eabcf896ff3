#pragma once

#include "akad/operators.hpp"
#include "akad/seqspace.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace akad {

// Ordered ambient vectors x_1..x_M, stored as columns of a (dim x M) matrix.
class AtomFamily {
  public:
    AtomFamily(ModelSpace ambient, Eigen::MatrixXd atoms);

    const ModelSpace& ambient() const { return ambient_; }
    const Eigen::MatrixXd& matrix() const { return atoms_; }
    int count() const { return static_cast<int>(atoms_.cols()); }
    Eigen::VectorXd atom(int i) const { return atoms_.col(i); }
    // Synthesis block of the first m atoms, dim x m.
    Eigen::MatrixXd leading(int m) const { return atoms_.leftCols(m); }

  private:
    ModelSpace ambient_;
    Eigen::MatrixXd atoms_;
};

struct BoundPair {
    double a = 1.0;
    double b = 1.0;

    BoundPair(double a, double b);  // enforces 0 < a <= b < inf
};

struct ApproximativeDecomposition {
    AtomFamily atoms;
    TriangularArray functionals;
    LinearOperator k;
    XdSpaceTag xd_tag;
    std::optional<BoundPair> claimed;

    ApproximativeDecomposition(AtomFamily atoms, TriangularArray functionals,
                               LinearOperator k, XdSpaceTag xd_tag,
                               std::optional<BoundPair> claimed = std::nullopt);

    int level_count() const { return functionals.level_count(); }
    const ModelSpace& ambient() const { return atoms.ambient(); }
    // Dense matrix of S_n = sum_{i<=m_n} x_i h_{n,i}, ambient -> ambient.
    Eigen::MatrixXd level_operator(int level) const;
};

struct ProbeSet {
    std::vector<Eigen::VectorXd> vectors;
    std::uint64_t seed = 0;
};

// Seeded, reproducible probes. For l2 (and general lp) ambients: random
// directions normalized to unit norm. For polyhedral ambients (l1, linf, c0
// model): the standard basis vectors and sign-pattern vertices come first,
// deterministically, then random points on the cube surface; ratios of
// polyhedral norms are extremized at such points.
ProbeSet make_probes(const ModelSpace& space, int count, std::uint64_t seed);

struct VerificationReport {
    double empirical_lower = 0.0;
    double empirical_upper = 0.0;
    std::vector<double> residual_by_level;
    double c_constant = 0.0;
    bool passed_a = true;
    bool passed_b = true;
    bool passed_c = true;
    int probes_used = 0;
    std::uint64_t seed = 0;

    // Diagnostics, not part of the canonical report.
    int skipped_lower_probes = 0;
    bool c_exact = false;
};

// Canonical JSON document with stable key order: empirical_lower,
// empirical_upper, residual_by_level, c_constant, passed_a, passed_b,
// passed_c, probes_used, seed. Non-finite values serialize as null.
std::string to_canonical_json(const VerificationReport& report);

// S_n(x) = sum_{i=1}^{m_n} h_{n,i}(x) x_i. `level` is 1-based; out-of-range
// levels throw std::out_of_range.
Eigen::VectorXd level_synthesis(const ApproximativeDecomposition& d,
                                const Eigen::VectorXd& x, int level);

// Checks Def-2.1-style conditions over the probe set:
//  (a) coefficient membership - automatic at finite truncation, recorded true;
//  (b) empirical_lower = min over probes with ||Kx|| > tol of xd/||Kx||,
//      empirical_upper = max over probes of xd/||x||, compared against the
//      claimed bounds when present;
//  (c) residual_by_level[n] = max over probes of ||Kx - S_n(x)|| / max(1,||x||),
//      passed iff the top level is <= tol.
// Probes with ||Kx|| <= tol are skipped for the lower ratio (the inequality is
// vacuous there); their count is recorded in skipped_lower_probes.
VerificationReport verify_k_atomic(const ApproximativeDecomposition& d,
                                   const ProbeSet& probes, double tol = 1e-8);

// Extremal bounds of A||Kx||_2 <= ||Theta x||_2 <= B||x||_2 for the stacked
// level-n functional matrix Theta, on the (l2, RowLp(2)) path.
//   b      = sigma_max(Theta)
//   a      = sqrt(lambda_min) of the pencil (Theta^T Theta, K^T K) after
//            minimizing over kernel directions of K (exact for any K).
// gram_a/gram_b are the same extremal data on the squared, Gram-eigenvalue
// scale of classical frame inequalities (gram_* = *^2). Other norm tags are
// unsupported and throw std::invalid_argument; callers fall back to the
// sampled bounds of verify_k_atomic.
struct OptimalBounds {
    double a = 0.0;
    double b = 0.0;
    double gram_a = 0.0;
    double gram_b = 0.0;
    bool exact = true;
};

OptimalBounds optimal_bounds_l2(const ApproximativeDecomposition& d, int level);

// Frame-style verification of the functional array alone: lower/upper ratios
// against ||x|| with no operator and no reconstruction condition. With
// K = identity this produces bit-identical (b)-outputs to verify_k_atomic.
VerificationReport verify_xd_frame(const TriangularArray& h, const XdSpaceTag& tag,
                                   const ProbeSet& probes, double tol = 1e-8,
                                   const std::optional<BoundPair>& claimed = std::nullopt);

// Upper estimate only; every finite array is Bessel so this never fails.
double verify_bessel(const TriangularArray& h, const XdSpaceTag& tag,
                     const ProbeSet& probes);

struct CConstant {
    double value = 0.0;
    bool exact = false;
};

// C = sup_n ||S_n||: exact per-level operator norms where the ambient norm
// pair admits them (largest singular value on l2, row/column sums on
// linf/l1), otherwise the structured lower estimates combined with probe
// sampling.
CConstant compute_c(const ApproximativeDecomposition& d, const ProbeSet& probes);

}  // namespace akad
