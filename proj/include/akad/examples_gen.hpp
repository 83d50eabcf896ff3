#pragma once

#include "akad/decomp.hpp"

#include <cstdint>
#include <string>

namespace akad {

// Named instances used by the CLI and the test suites:
//   orthonormal            standard basis atoms, extending dual-basis rows,
//                          K = identity, l2 / RowLp(2), claimed (1, 1)
//   example-2-4            same system under the sup-of-partial-sums norm
//                          over its own atoms
//   example-2-5-dropfirst  h_{n,1} = 0, h_{n,i} = coordinate-i functional for
//                          i >= 2, K = diag(0,1,...,1), c0-model ambient with
//                          RowLInf coefficients, claimed (1, 1). A K-atomic
//                          decomposition that is not an Xd-frame.
//   mercedes               three unit vectors at 120 degrees (dim 2 only),
//                          functionals 2/3 of the atoms, K = identity
//   random-invertible      seeded random invertible atoms with biorthogonal
//                          functionals, extending rows, claimed bounds set to
//                          the exact l2 extremal bounds
struct ExampleInstance {
    std::string name;
    ApproximativeDecomposition decomposition;
};

ExampleInstance generate_example(const std::string& name, int dim,
                                 std::uint64_t seed = 0);

// On-disk layout: atoms.mat (rows = atoms), functionals.tri, operator.mat,
// instance.txt (flat key=value: name, ambient, xd, claimed_a/claimed_b).
void write_instance_dir(const ExampleInstance& instance, const std::string& dir);
ApproximativeDecomposition read_instance_dir(const std::string& dir);

}  // namespace akad
