#include "wallkit/integer.hpp"

#include <cassert>
#include <utility>

namespace wallkit {

Integer gcd(Integer const& a, Integer const& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer gcd(IntVector const& values) {
  Integer g = 0;
  for (auto const& v : values) {
    if (v != 0) {
      g = gcd(g, v);
      if (g == 1) break;
    }
  }
  return g;
}

Integer extended_gcd(Integer const& a, Integer const& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Integer floor_div(Integer const& a, Integer const& b) {
  assert(b != 0);
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(Integer const& a, Integer const& b) {
  Integer r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

Integer floor(Rational const& r) {
  return floor_div(numerator(r), denominator(r));
}

Rational mod_rational(Rational const& r, Integer const& m) {
  Rational quotient = r / Rational(m);
  return r - Rational(floor(quotient) * m);
}

std::string to_string(Integer const& value) { return value.str(); }

std::string to_string(Rational const& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

IntVector make_vector(std::initializer_list<long long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::initializer_list<long long> row_major)
    : IntMatrix(rows, cols) {
  assert(row_major.size() == rows * cols);
  std::size_t i = 0;
  for (long long v : row_major) data_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::vector<IntVector> const& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(IntVector const& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  assert(a.cols() == b.rows());
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Integer const& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntVector operator*(IntMatrix const& a, IntVector const& v) {
  assert(a.cols() == v.size());
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (v[k] != 0 && a(i, k) != 0) acc += a(i, k) * v[k];
    }
    out[i] = std::move(acc);
  }
  return out;
}

IntVector operator+(IntVector const& a, IntVector const& b) {
  assert(a.size() == b.size());
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(IntVector const& a, IntVector const& b) {
  assert(a.size() == b.size());
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector operator-(IntVector const& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVector operator*(Integer const& k, IntVector const& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

Integer dot(IntVector const& a, IntVector const& b) {
  assert(a.size() == b.size());
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace wallkit
