#include "coxsupport/linalg.hpp"

#include <stdexcept>

namespace coxsupport {

namespace {

// Bareiss elimination in place; returns the rank and tracks row swaps.
int bareiss(Matrix& m, int& swaps) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  CycloNum prev(1);
  std::size_t r = 0;
  swaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = CycloNum(0);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int exact_rank(Matrix m) {
  int swaps = 0;
  return bareiss(m, swaps);
}

CycloNum determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return CycloNum(1);
  int swaps = 0;
  int rank = bareiss(m, swaps);
  if (rank < static_cast<int>(n)) return CycloNum(0);
  // With full rank and no skipped columns the last pivot is the determinant.
  CycloNum det = m[n - 1][n - 1];
  return swaps % 2 ? -det : det;
}

std::vector<std::vector<CycloNum>> nullspace(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    CycloNum inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CycloNum f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<CycloNum>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloNum> v(cols, CycloNum(0));
    v[free] = CycloNum(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<CycloNum>(n, CycloNum(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycloNum(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k ? b[0].size() : 0;
  Matrix r(n, std::vector<CycloNum>(p, CycloNum(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

std::vector<CycloNum> multiply(const Matrix& a, const std::vector<CycloNum>& v) {
  std::vector<CycloNum> r(a.size(), CycloNum(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!a[i][j].is_zero()) r[i] += a[i][j] * v[j];
    }
  }
  return r;
}

Matrix inverse(const Matrix& input) {
  const std::size_t n = input.size();
  Matrix m = input;
  Matrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    CycloNum f = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      CycloNum g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace coxsupport
