#include "akad/seqspace.hpp"

#include "akad/decomp.hpp"
#include "akad/operators.hpp"

#include <stdexcept>
#include <string>

namespace akad {

int TriangularArray::max_row_size() const {
    int m = 0;
    for (const auto& level : levels) m = std::max(m, static_cast<int>(level.rows()));
    return m;
}

Eigen::MatrixXd TriangularArray::stacked() const {
    Eigen::Index total = 0;
    for (const auto& level : levels) total += level.rows();
    Eigen::MatrixXd out(total, ambient.dim);
    Eigen::Index at = 0;
    for (const auto& level : levels) {
        out.middleRows(at, level.rows()) = level;
        at += level.rows();
    }
    return out;
}

ArrayValidation validate_triangular(const TriangularArray& h) {
    int previous = 0;
    for (int n = 1; n <= h.level_count(); ++n) {
        const auto& level = h.level(n);
        if (level.cols() != h.ambient.dim)
            return {false, n,
                    "level " + std::to_string(n) + " has functionals of dimension " +
                        std::to_string(level.cols()) + ", ambient dimension is " +
                        std::to_string(h.ambient.dim)};
        if (!level.allFinite())
            return {false, n, "level " + std::to_string(n) + " has a non-finite entry"};
        const int m_n = static_cast<int>(level.rows());
        if (n == 1 && m_n < 1)
            return {false, n, "m_1 must be at least 1"};
        if (n > 1 && m_n <= previous)
            return {false, n,
                    "row counts not strictly increasing at level " + std::to_string(n) +
                        " (m_" + std::to_string(n - 1) + " = " + std::to_string(previous) +
                        ", m_" + std::to_string(n) + " = " + std::to_string(m_n) + ")"};
        previous = m_n;
    }
    return {};
}

XdSpaceTag XdSpaceTag::row_lp(double p) {
    NormTag::lp(p);  // range check
    return XdSpaceTag{Kind::RowLp, p, nullptr};
}

XdSpaceTag XdSpaceTag::partial_sum_sup(std::shared_ptr<const AtomFamily> atoms) {
    if (!atoms) throw std::invalid_argument("PartialSumSup tag requires an atom family");
    return XdSpaceTag{Kind::PartialSumSup, 0.0, std::move(atoms)};
}

std::string to_string(const XdSpaceTag& tag) {
    switch (tag.kind) {
        case XdSpaceTag::Kind::RowLInf:
            return "row-linf";
        case XdSpaceTag::Kind::PartialSumSup:
            return "partial-sum-sup";
        case XdSpaceTag::Kind::RowLp:
            break;
    }
    return "row-lp:" + format_double(tag.p);
}

CoefficientObject evaluate_array(const TriangularArray& h, const Eigen::VectorXd& x) {
    if (x.size() != h.ambient.dim)
        throw std::invalid_argument("evaluate_array: vector has dimension " +
                                    std::to_string(x.size()) + ", ambient is " +
                                    std::to_string(h.ambient.dim));
    CoefficientObject c;
    c.levels.reserve(h.levels.size());
    for (const auto& level : h.levels) c.levels.push_back(level * x);
    return c;
}

double xd_norm(const CoefficientObject& c, const XdSpaceTag& tag) {
    double best = 0.0;
    switch (tag.kind) {
        case XdSpaceTag::Kind::RowLp: {
            const NormTag row = NormTag::lp(tag.p);
            for (const auto& level : c.levels)
                best = std::max(best, vec_norm(level, row));
            return best;
        }
        case XdSpaceTag::Kind::RowLInf: {
            for (const auto& level : c.levels)
                if (level.size() > 0)
                    best = std::max(best, level.cwiseAbs().maxCoeff());
            return best;
        }
        case XdSpaceTag::Kind::PartialSumSup:
            break;
    }
    const AtomFamily& atoms = *tag.atoms;
    for (const auto& level : c.levels) {
        const int m_n = static_cast<int>(level.size());
        if (m_n > atoms.count())
            throw std::invalid_argument(
                "xd_norm: PartialSumSup tag has " + std::to_string(atoms.count()) +
                " atoms but a level needs " + std::to_string(m_n));
        Eigen::VectorXd synth = atoms.leading(m_n) * level;
        best = std::max(best, vec_norm(synth, atoms.ambient().norm));
    }
    return best;
}

double induced_isometry_norm(const TriangularArray& h, const Eigen::VectorXd& x) {
    if (x.size() != h.ambient.dim)
        throw std::invalid_argument("induced_isometry_norm: dimension mismatch");
    const Eigen::MatrixXd stacked = h.stacked();
    const int rank = numerical_rank(stacked, 1e-10);
    if (rank < h.ambient.dim)
        throw std::invalid_argument(
            "induced_isometry_norm: functional family is not total (stacked rank " +
            std::to_string(rank) + " < dimension " + std::to_string(h.ambient.dim) + ")");
    return vec_norm(x, h.ambient.norm);
}

}  // namespace akad
