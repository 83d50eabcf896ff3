#pragma once

#include "akad/norms.hpp"

#include <Eigen/Core>

#include <memory>
#include <string>
#include <vector>

namespace akad {

class AtomFamily;

// Ragged rows of functionals h_{n,i}, i = 1..m_n. Level n is stored as an
// (m_n x ambient.dim) matrix whose rows are the functionals. Row counts must
// be strictly increasing; validate_triangular checks this without throwing so
// malformed arrays can be reported rather than rejected at construction.
struct TriangularArray {
    ModelSpace ambient;
    std::vector<Eigen::MatrixXd> levels;

    int level_count() const { return static_cast<int>(levels.size()); }
    // 1-based level index to match report and error wording.
    int row_size(int level) const {
        return static_cast<int>(levels.at(static_cast<size_t>(level - 1)).rows());
    }
    const Eigen::MatrixXd& level(int n) const {
        return levels.at(static_cast<size_t>(n - 1));
    }
    int max_row_size() const;
    // All rows of all levels stacked, (sum m_n) x dim.
    Eigen::MatrixXd stacked() const;
};

struct ArrayValidation {
    bool ok = true;
    int level = 0;  // 1-based first offending level, 0 when ok
    std::string message;
};

ArrayValidation validate_triangular(const TriangularArray& h);

// Entry (n,i) = h_{n,i}(x); shape mirrors the generating array.
struct CoefficientObject {
    std::vector<Eigen::VectorXd> levels;

    int level_count() const { return static_cast<int>(levels.size()); }
};

// Norm placed on coefficient objects.
//  RowLp(p):       max over levels of the p-norm of the level's row.
//  RowLInf:        max absolute entry.
//  PartialSumSup:  max over levels n of || sum_i c_{n,i} x_i || in the atoms'
//                  ambient norm (the sup-of-partial-sums norm).
struct XdSpaceTag {
    enum class Kind { RowLp, RowLInf, PartialSumSup };

    Kind kind = Kind::RowLp;
    double p = 2.0;
    std::shared_ptr<const AtomFamily> atoms;  // PartialSumSup only

    static XdSpaceTag row_lp(double p);
    static XdSpaceTag row_linf() { return XdSpaceTag{Kind::RowLInf, 0.0, nullptr}; }
    static XdSpaceTag partial_sum_sup(std::shared_ptr<const AtomFamily> atoms);
};

std::string to_string(const XdSpaceTag& tag);

CoefficientObject evaluate_array(const TriangularArray& h, const Eigen::VectorXd& x);

double xd_norm(const CoefficientObject& c, const XdSpaceTag& tag);

// The Lemma-1.5 induced norm ||{h_{n,i}(x)}|| := ||x||. Requires the stacked
// functional matrix to have full column rank (numerical rank at relative
// cutoff 1e-10); throws std::invalid_argument naming the deficiency otherwise.
double induced_isometry_norm(const TriangularArray& h, const Eigen::VectorXd& x);

}  // namespace akad
