#pragma once

#include <Eigen/Core>

#include <string>

namespace akad {

// Norm of a finite-dimensional model space. C0Model evaluates identically to
// LInf on finite vectors (it stands in for truncated c0); the tag is kept so
// reports can label the space correctly.
enum class NormKind { Lp, LInf, C0Model };

struct NormTag {
    NormKind kind = NormKind::Lp;
    double p = 2.0;  // meaningful only for Lp, 1 <= p < inf

    static NormTag lp(double p);
    static NormTag linf() { return NormTag{NormKind::LInf, 0.0}; }
    static NormTag c0() { return NormTag{NormKind::C0Model, 0.0}; }

    bool operator==(const NormTag& other) const;
    bool operator!=(const NormTag& other) const { return !(*this == other); }
};

// Dual exponent tag: Lp(p) -> Lp(q) with 1/p + 1/q = 1 (Lp(1) -> LInf).
// LInf and C0Model are both modeled with dual L1 (finite-dimensional
// identification; for c0 this is the honest dual, for l-inf a model choice).
NormTag dual_tag(const NormTag& tag);

struct ModelSpace {
    int dim = 1;
    NormTag norm;

    bool operator==(const ModelSpace& other) const {
        return dim == other.dim && norm == other.norm;
    }
    bool operator!=(const ModelSpace& other) const { return !(*this == other); }
};

ModelSpace dual_space(const ModelSpace& space);

// p-norm / max-norm of a vector. Throws std::invalid_argument on non-finite
// entries.
double vec_norm(const Eigen::VectorXd& x, const NormTag& tag);

// Text form used in CLI flags and instance files: "lp:2", "lp:1.5", "linf", "c0".
std::string to_string(const NormTag& tag);
NormTag parse_norm_tag(const std::string& text);

}  // namespace akad
