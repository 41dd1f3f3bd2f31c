#pragma once

// small exact integer linear algebra: column echelon forms over Z, lattice
// membership, ranks and integer kernels.  sized for matrices with a handful
// of rows and columns; everything in arbitrary precision

#include <vector>

#include "horolab/rational.hpp"

namespace horolab::ab {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row major

Mat zeros(std::size_t rows, std::size_t cols);
Vec mat_apply(const Mat& m, const Vec& x);

// gcd-based column reduction; pivot columns end up in echelon position with
// positive pivots, all remaining columns identically zero
struct Echelon {
  Mat mat;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};
Echelon column_echelon(Mat a);

int rank(const Mat& a);

// is v in the Z-span of the columns of a
bool in_column_span(const Mat& a, const Vec& v);

// basis of {x : a x = 0} as columns (returned row-major, one basis vector
// per entry of the outer vector)
std::vector<Vec> kernel_basis(const Mat& a);

}  // namespace horolab::ab
