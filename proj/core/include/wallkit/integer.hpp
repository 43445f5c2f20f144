#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "boost/multiprecision/cpp_int.hpp"

namespace wallkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(Integer const& a, Integer const& b);
Integer gcd(IntVector const& values);

// Extended gcd: returns g = gcd(a, b) >= 0 with g = x*a + y*b.
Integer extended_gcd(Integer const& a, Integer const& b, Integer& x, Integer& y);

// Floor division and the matching non-negative remainder (b != 0).
Integer floor_div(Integer const& a, Integer const& b);
Integer floor_mod(Integer const& a, Integer const& b);

// Rational floor.
Integer floor(Rational const& r);

// Reduces r into [0, m) for a positive integer modulus m.
Rational mod_rational(Rational const& r, Integer const& m);

std::string to_string(Integer const& value);
std::string to_string(Rational const& value);

IntVector make_vector(std::initializer_list<long long> values);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols,
            std::initializer_list<long long> row_major);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::vector<IntVector> const& columns);
  static IntMatrix diagonal(IntVector const& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Integer const& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_symmetric() const;

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
IntVector operator*(IntMatrix const& a, IntVector const& v);

IntVector operator+(IntVector const& a, IntVector const& b);
IntVector operator-(IntVector const& a, IntVector const& b);
IntVector operator-(IntVector const& a);
IntVector operator*(Integer const& k, IntVector const& v);

Integer dot(IntVector const& a, IntVector const& b);

}  // namespace wallkit
