#include "akad/norms.hpp"

#include "akad/errors.hpp"
#include "akad/io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace akad {

NormTag NormTag::lp(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("NormTag: lp exponent must satisfy 1 <= p < inf");
    return NormTag{NormKind::Lp, p};
}

bool NormTag::operator==(const NormTag& other) const {
    if (kind != other.kind) return false;
    return kind != NormKind::Lp || p == other.p;
}

NormTag dual_tag(const NormTag& tag) {
    switch (tag.kind) {
        case NormKind::LInf:
        case NormKind::C0Model:
            return NormTag::lp(1.0);
        case NormKind::Lp:
            break;
    }
    if (tag.p == 1.0) return NormTag::linf();
    return NormTag::lp(tag.p / (tag.p - 1.0));
}

ModelSpace dual_space(const ModelSpace& space) {
    return ModelSpace{space.dim, dual_tag(space.norm)};
}

double vec_norm(const Eigen::VectorXd& x, const NormTag& tag) {
    if (!x.allFinite())
        throw std::invalid_argument("vec_norm: non-finite entry in input vector");
    if (x.size() == 0) return 0.0;
    switch (tag.kind) {
        case NormKind::LInf:
        case NormKind::C0Model:
            return x.cwiseAbs().maxCoeff();
        case NormKind::Lp:
            break;
    }
    if (tag.p == 1.0) return x.cwiseAbs().sum();
    if (tag.p == 2.0) return x.norm();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        sum += std::pow(std::abs(x(i)), tag.p);
    return std::pow(sum, 1.0 / tag.p);
}

std::string to_string(const NormTag& tag) {
    switch (tag.kind) {
        case NormKind::LInf:
            return "linf";
        case NormKind::C0Model:
            return "c0";
        case NormKind::Lp:
            break;
    }
    return "lp:" + format_double(tag.p);
}

NormTag parse_norm_tag(const std::string& text) {
    if (text == "linf") return NormTag::linf();
    if (text == "c0") return NormTag::c0();
    if (text.rfind("lp:", 0) == 0) {
        double p = parse_double(text.substr(3));
        if (!(p >= 1.0) || !std::isfinite(p))
            throw ParseError("norm tag: lp exponent out of range in '" + text + "'");
        return NormTag::lp(p);
    }
    throw ParseError("norm tag: expected lp:<p>, linf or c0, got '" + text + "'");
}

}  // namespace akad
