#pragma once

#include <stdexcept>
#include <string>

namespace akad {

// Malformed input files / unparseable values. CLI maps this to exit status 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem hypothesis does not hold for the given data (e.g. singular K
// where invertibility is required). CLI maps this to exit status 3.
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace akad
