#include "veegroups/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace veegroups {

namespace {

void check_rectangular(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.front().size())
      throw std::invalid_argument("linalg: ragged matrix");
}

// Reduced row echelon form in place; returns the pivot column of each of the
// first `rank` rows.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  check_rectangular(m);
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

RationalMatrix nullspace_basis(RationalMatrix m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m.front().size());
  const std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  RationalMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    // Back-substitute: pivot row i forces v[pivots[i]] = -m[i][free].
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_span(const RationalMatrix& basis, const std::vector<Rational>& v) {
  RationalMatrix with = basis;
  with.push_back(v);
  return matrix_rank(std::move(with)) == matrix_rank(basis);
}

}  // namespace veegroups
