#include "horolab/abelian.hpp"

#include <cstdlib>
#include <stdexcept>

namespace horolab::ab {

Mat zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, Vec(cols, Int(0)));
}

Vec mat_apply(const Mat& m, const Vec& x) {
  Vec out(m.size(), Int(0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != x.size()) throw std::invalid_argument("matrix/vector shape");
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  }
  return out;
}

namespace {

// column operations shared by echelon and kernel computations; u, when
// present, accumulates the same operations to track the transform
struct ColOps {
  Mat* a;
  Mat* u;  // may be null

  void axpy(std::size_t dst, std::size_t src, const Int& q) {
    for (auto& row : *a) row[dst] -= q * row[src];
    if (u) {
      for (auto& row : *u) row[dst] -= q * row[src];
    }
  }
  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : *a) std::swap(row[i], row[j]);
    if (u) {
      for (auto& row : *u) std::swap(row[i], row[j]);
    }
  }
  void negate(std::size_t j) {
    for (auto& row : *a) row[j] = -row[j];
    if (u) {
      for (auto& row : *u) row[j] = -row[j];
    }
  }
};

Echelon echelon_impl(Mat a, Mat* u) {
  Echelon e;
  if (a.empty()) {
    e.mat = a;
    return e;
  }
  const std::size_t rows = a.size(), cols = a[0].size();
  ColOps ops{&a, u};
  std::size_t next = 0;  // next pivot column slot
  for (std::size_t r = 0; r < rows && next < cols; ++r) {
    // gcd-eliminate row r across the active columns until one survivor
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = next; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        if (best == cols || abs(a[r][c]) < abs(a[r][best])) best = c;
      }
      if (best == cols) break;  // row r is zero on active columns
      bool others = false;
      for (std::size_t c = next; c < cols; ++c) {
        if (c == best || a[r][c] == 0) continue;
        ops.axpy(c, best, a[r][c] / a[r][best]);
        if (a[r][c] != 0) others = true;  // remainder survives, loop again
      }
      if (!others) {
        ops.swap(next, best);
        if (a[r][next] < 0) ops.negate(next);
        e.pivots.emplace_back(r, next);
        ++next;
        break;
      }
    }
  }
  e.mat = std::move(a);
  return e;
}

}  // namespace

Echelon column_echelon(Mat a) { return echelon_impl(std::move(a), nullptr); }

int rank(const Mat& a) {
  return static_cast<int>(column_echelon(a).pivots.size());
}

bool in_column_span(const Mat& a, const Vec& v) {
  if (a.size() != v.size()) throw std::invalid_argument("matrix/vector shape");
  Echelon e = column_echelon(a);
  Vec rem = v;
  std::size_t pi = 0;
  for (std::size_t r = 0; r < rem.size(); ++r) {
    if (pi < e.pivots.size() && e.pivots[pi].first == r) {
      const std::size_t c = e.pivots[pi].second;
      const Int& p = e.mat[r][c];
      if (rem[r] % p != 0) return false;
      Int q = rem[r] / p;
      for (std::size_t rr = r; rr < rem.size(); ++rr) rem[rr] -= q * e.mat[rr][c];
      ++pi;
    } else if (rem[r] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Vec> kernel_basis(const Mat& a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  Mat u = zeros(cols, cols);
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  Mat work = a;
  Echelon e = echelon_impl(std::move(work), &u);
  // zero columns of the echelon correspond to kernel vectors in u
  std::vector<Vec> basis;
  for (std::size_t c = e.pivots.size(); c < cols; ++c) {
    Vec k(cols);
    for (std::size_t i = 0; i < cols; ++i) k[i] = u[i][c];
    basis.push_back(std::move(k));
  }
  return basis;
}

}  // namespace horolab::ab
