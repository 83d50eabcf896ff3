#pragma once

#include "akad/decomp.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace akad {

// A finite sequence of finite-rank endomorphisms S_1..S_N on a common space,
// together with the operator K they are claimed to approach. final_gap
// records ||K - S_N|| on the l2 operator-norm path; convergence itself is the
// caller's claim, so no threshold is enforced.
struct FiniteRankSequence {
    std::vector<LinearOperator> ops;
    LinearOperator target;
    double final_gap = 0.0;

    FiniteRankSequence(std::vector<LinearOperator> ops, LinearOperator target);
};

// v_1 = S_1, v_{2n} = v_{2n+1} = (S_{n+1} - S_n)/2; partial sums telescope
// back to the S_n.
std::vector<LinearOperator> v_splitting(const FiniteRankSequence& s);

struct FromFiniteRankResult {
    ApproximativeDecomposition decomposition;
    // Levels (1-based) where a rank-0 operator was padded with one zero
    // atom/functional pair to keep m_n strictly increasing.
    std::vector<int> padded_levels;
};

// Factors each S_n into rank-one terms y_{n,i} g_{n,i} via SVD at the given
// relative cutoff (singular values folded into the functional factor) and
// assembles atoms x_i = y_{n,i} for i = m_{n-1}+1..m_n with h_{n,i} = 0 below
// that range. Level-n synthesis of the result equals S_n.
FromFiniteRankResult from_finite_rank(const FiniteRankSequence& s,
                                      double rank_cutoff = 1e-12);

// ({K x_n}, {h_{n,i}}) from an atomic decomposition (identity operator) with
// claimed bounds (A, B); the result carries operator k and claims
// (A/||k||, B).
ApproximativeDecomposition lift_by_k(const ApproximativeDecomposition& d,
                                     const LinearOperator& k);

// ({x_n}, {K* h_{n,i}}) with claims (A, B ||k||).
ApproximativeDecomposition pullback_functionals(const ApproximativeDecomposition& d,
                                                const LinearOperator& k);

// ({T x_n}, {h_{n,i}}) for T K with claims (A/||T||, B).
ApproximativeDecomposition compose_left(const ApproximativeDecomposition& d,
                                        const LinearOperator& t);

// ({x_n}, {T* h_{n,i}}) for K T with claims (A, B ||T||).
ApproximativeDecomposition compose_right(const ApproximativeDecomposition& d,
                                         const LinearOperator& t);

// Functionals g_{n,i} = (K†K)* h_{n,i}, same operator, claims
// (A, B ||K†|| ||K||). The statement's looser figure B ||K||^2 is available
// as refit_statement_upper for comparison.
ApproximativeDecomposition refit_via_pseudo(const ApproximativeDecomposition& d);
std::optional<double> refit_statement_upper(const ApproximativeDecomposition& d);

// Dual-space decomposition for K*: atoms are the top-level functionals,
// functionals are evaluations at the x_n with the same m_n, operator is the
// adjoint. Claimed bounds (1/||R*||, ||S||) from the proof's analysis map R
// and top-level synthesis S are computed on the (l2, RowLp(2)) path and left
// empty otherwise.
ApproximativeDecomposition dualize(const ApproximativeDecomposition& d);

struct KFromFrameData {
    LinearOperator k;
    ApproximativeDecomposition decomposition;
};

// K = T U assembled from the top level: U the analysis map, T the synthesis.
// Claimed bounds (A_frame / C, B_frame) with A_frame/B_frame the empirical
// frame ratios of the array and C = sup_n ||S_n||; left empty when the lower
// ratio vanishes (the array is not an Xd-frame on the probe set).
KFromFrameData k_from_frame_data(const TriangularArray& h, const AtomFamily& atoms,
                                 const XdSpaceTag& xd_tag, const ProbeSet& probes);

// Five-way equivalence check on the top-level analysis matrix U and synthesis
// matrix T. The witnesses follow the theorem's proof:
//  (a) U T U = U and T U T = T         (two-sided pseudo-inverse relations)
//  (b) T U = I                          (atomic reconstruction)
//  (c) T inverts U on range(U)          (columnwise T(U e_i) = e_i)
//  (d) P = U T is idempotent, P U = U, T (I - P) = 0
//      (a projection onto U(X) along ker T)
//  (e) T surjective and I - P an idempotent onto ker T
// The theorem asserts the five are equivalent when K = T U is invertible;
// disagreement under that hypothesis is a numerical inconsistency.
struct EquivalenceReport {
    bool pseudo_inverse_of_u = false;
    bool atomic_reconstruction = false;
    bool extends_u_inverse = false;
    bool range_complemented = false;
    bool kernel_complemented_and_surjective = false;
    bool hypothesis_ok = false;

    double residual_a = 0.0;
    double residual_b = 0.0;
    double residual_c = 0.0;
    double residual_d = 0.0;
    double residual_e = 0.0;
    Eigen::MatrixXd witness_p;  // U T on the coefficient space

    bool all_flags() const {
        return pseudo_inverse_of_u && atomic_reconstruction && extends_u_inverse &&
               range_complemented && kernel_complemented_and_surjective;
    }
    bool flags_agree() const {
        const bool v = pseudo_inverse_of_u;
        return atomic_reconstruction == v && extends_u_inverse == v &&
               range_complemented == v && kernel_complemented_and_surjective == v;
    }
};

// Throws HypothesisError when K = T U is numerically singular and
// enforce_hypothesis is set; with it cleared the flags are still computed and
// hypothesis_ok reports the violation.
EquivalenceReport check_equivalences(const AtomFamily& atoms, const TriangularArray& h,
                                     double tol = 1e-8, bool enforce_hypothesis = true);

// ({K^{-1} x_n}, {h_{n,i}}) with the identity operator; claimed bounds are
// recomputed empirically over the probes. Throws HypothesisError on singular K.
ApproximativeDecomposition pullback_invertible(const ApproximativeDecomposition& d,
                                               const ProbeSet& probes);

}  // namespace akad
