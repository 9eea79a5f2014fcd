#include "linhyp/linalg.hpp"

namespace linhyp {

namespace {

// Row-reduce [A | b?] in place; returns pivot column per row.
std::vector<std::size_t> rref(const Field& K, Matrix& A) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  std::size_t rows = A.size(), cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && K.is_zero(A[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    FElem inv = K.inv(A[r][c]);
    for (std::size_t j = c; j < cols; ++j) A[r][j] = K.mul(A[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || K.is_zero(A[i][c])) continue;
      FElem f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] = K.sub(A[i][j], K.mul(f, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<FElem>> solve_linear(const Field& K, Matrix A, std::vector<FElem> b) {
  if (A.empty()) {
    for (const auto& v : b)
      if (!K.is_zero(v)) return std::nullopt;
    return std::vector<FElem>{};
  }
  std::size_t cols = A[0].size();
  for (std::size_t i = 0; i < A.size(); ++i) A[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(K, A);
  // Inconsistent if a pivot landed in the augmented column.
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == cols) return std::nullopt;
  // Rows beyond the pivots must have zero rhs.
  for (std::size_t r = pivots.size(); r < A.size(); ++r)
    if (!K.is_zero(A[r][cols])) return std::nullopt;
  std::vector<FElem> x(cols, K.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = A[r][cols];
  return x;
}

std::vector<std::vector<FElem>> nullspace(const Field& K, Matrix A) {
  std::vector<std::vector<FElem>> basis;
  if (A.empty()) return basis;
  std::size_t cols = A[0].size();
  std::vector<std::size_t> pivots = rref(K, A);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FElem> v(cols, K.zero());
    v[free] = K.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = K.neg(A[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linhyp
