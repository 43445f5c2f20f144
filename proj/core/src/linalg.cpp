#include "wallkit/linalg.hpp"

#include <cassert>
#include <utility>

namespace wallkit {

Integer determinant(IntMatrix const& a) {
  assert(a.rows() == a.cols());
  std::size_t const n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntVector SmithForm::diagonal() const {
  std::size_t const n = std::min(d.rows(), d.cols());
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d(i, i);
  return out;
}

namespace {

// Row/column operations on the working matrix with transform bookkeeping.
struct SmithState {
  IntMatrix a, u, u_inv, v;

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, Integer const& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += k * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += k * u(j, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, j) -= k * u_inv(r, i);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, i), u_inv(r, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, Integer const& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += k * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += k * v(r, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix const& input) {
  std::size_t const m = input.rows();
  std::size_t const n = input.cols();
  SmithState s{input, IntMatrix::identity(m), IntMatrix::identity(m),
               IntMatrix::identity(n)};

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t r = t; r < m; ++r) {
      for (std::size_t c = t; c < n; ++c) {
        if (s.a(r, c) != 0 && (!found || abs(s.a(r, c)) < best)) {
          found = true;
          best = abs(s.a(r, c));
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (s.a(r, t) == 0) continue;
        s.add_row(r, t, -floor_div(s.a(r, t), s.a(t, t)));
        if (s.a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (s.a(t, c) == 0) continue;
        s.add_col(c, t, -floor_div(s.a(t, c), s.a(t, t)));
        if (s.a(t, c) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t br = t, bc = t;
        Integer b = abs(s.a(t, t));
        for (std::size_t r = t + 1; r < m; ++r)
          if (s.a(r, t) != 0 && abs(s.a(r, t)) < b) { b = abs(s.a(r, t)); br = r; bc = t; }
        for (std::size_t c = t + 1; c < n; ++c)
          if (s.a(t, c) != 0 && abs(s.a(t, c)) < b) { b = abs(s.a(t, c)); br = t; bc = c; }
        s.swap_rows(t, br);
        s.swap_cols(t, bc);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad_row = m;
      for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (s.a(r, c) % s.a(t, t) != 0) { bad_row = r; break; }
      if (bad_row == m) break;
      s.add_row(t, bad_row, 1);
    }
    if (s.a(t, t) < 0) s.negate_row(t);
  }
  return SmithForm{std::move(s.a), std::move(s.u), std::move(s.u_inv),
                   std::move(s.v)};
}

std::vector<IntVector> integer_kernel(IntMatrix const& input) {
  std::size_t const m = input.rows();
  std::size_t const n = input.cols();
  IntMatrix a = input;
  IntMatrix v = IntMatrix::identity(n);
  auto add_col = [&](std::size_t i, std::size_t j, Integer const& k) {
    for (std::size_t r = 0; r < m; ++r) a(r, i) += k * a(r, j);
    for (std::size_t r = 0; r < n; ++r) v(r, i) += k * v(r, j);
  };
  auto swap_col = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m && pivot < n; ++r) {
    // Euclid across columns pivot..n-1 until one nonzero entry remains.
    while (true) {
      std::size_t best = n;
      for (std::size_t c = pivot; c < n; ++c)
        if (a(r, c) != 0 && (best == n || abs(a(r, c)) < abs(a(r, best)))) best = c;
      if (best == n) break;
      swap_col(pivot, best);
      bool others = false;
      for (std::size_t c = pivot + 1; c < n; ++c) {
        if (a(r, c) == 0) continue;
        add_col(c, pivot, -floor_div(a(r, c), a(r, pivot)));
        if (a(r, c) != 0) others = true;
      }
      if (!others) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntVector> kernel;
  for (std::size_t c = pivot; c < n; ++c) kernel.push_back(v.column(c));
  return kernel;
}

std::vector<IntVector> lattice_basis(std::vector<IntVector> const& generators) {
  if (generators.empty()) return {};
  std::vector<IntVector> rows = generators;
  std::size_t const n = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < n && pivot_row < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool others = false;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q = floor_div(rows[r][c], rows[pivot_row][c]);
        rows[r] = rows[r] - q * rows[pivot_row];
        if (rows[r][c] != 0) others = true;
      }
      if (!others) {
        if (rows[pivot_row][c] < 0) rows[pivot_row] = -rows[pivot_row];
        ++pivot_row;
        break;
      }
    }
  }
  rows.resize(pivot_row);
  return rows;
}

std::optional<std::vector<RatVector>> solve_rational(
    IntMatrix const& a, std::vector<RatVector> const& rhs_columns) {
  assert(a.rows() == a.cols());
  std::size_t const n = a.rows();
  std::size_t const k = rhs_columns.size();
  std::vector<RatVector> m(n, RatVector(n + k));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(a(r, c));
    for (std::size_t j = 0; j < k; ++j) m[r][n + j] = rhs_columns[j][r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    Rational inv = 1 / m[c][c];
    for (std::size_t j = c; j < n + k; ++j) m[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j < n + k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<RatVector> out(k, RatVector(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < n; ++r) out[j][r] = m[r][n + j];
  return out;
}

std::optional<RatVector> ldl_pivots(IntMatrix const& sym) {
  std::size_t const n = sym.rows();
  std::vector<RatVector> m(n, RatVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(sym(r, c));
  RatVector pivots(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) return std::nullopt;
    pivots[k] = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return pivots;
}

bool is_positive_definite(IntMatrix const& sym) {
  auto pivots = ldl_pivots(sym);
  if (!pivots) return false;
  for (auto const& p : *pivots)
    if (p <= 0) return false;
  return true;
}

}  // namespace wallkit
