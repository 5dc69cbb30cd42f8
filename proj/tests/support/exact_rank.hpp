#ifndef HODGELAB_TESTS_EXACT_RANK_HPP
#define HODGELAB_TESTS_EXACT_RANK_HPP

#include <Eigen/Dense>
#include <vector>

#include "hodgelab/complex.hpp"

namespace hodgelab::testing {

/// Rank of an integer matrix over the rationals, by fraction-free Bareiss
/// elimination with arbitrary-precision integers.  Exact; independent of any
/// floating-point path.
int exact_rank(const Eigen::MatrixXi& matrix);

/// Betti numbers of the relative cochain complex by rank-nullity over the
/// rationals: b_p = #relative p-simplices - rank d_p - rank d_{p-1}.
std::vector<int> exact_betti(const SimplicialComplex& cx, const BoundaryLabeling& labels);

}  // namespace hodgelab::testing

#endif
