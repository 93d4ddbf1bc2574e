#pragma once

// Exact integer linear algebra: row Hermite normal form, integer kernels and
// lattice membership. Everything is computed over arbitrary-precision
// integers; no floating point is involved anywhere.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilorb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  /// Throws InputError when the rows are ragged.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_rows(std::span<const IntVector> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  IntVector row_vector(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct HermiteResult {
  IntMatrix h;  ///< row Hermite normal form of the input
  IntMatrix u;  ///< unimodular transform with u * m == h
};

/// Row Hermite normal form. Pivots are positive, entries above a pivot are
/// reduced into [0, pivot), zero rows sit at the bottom.
HermiteResult hermite_normal_form(const IntMatrix& m);

/// Sublattice of Z^n stored as its canonical basis (the nonzero rows of the
/// row HNF of any generating set). Two bases describe the same lattice iff they
/// compare equal.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  /// Canonicalizes an arbitrary (possibly dependent) generating set.
  static LatticeBasis from_generators(std::size_t ambient_dim, std::span<const IntVector> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return vectors_.size(); }
  const std::vector<IntVector>& vectors() const { return vectors_; }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> vectors_;
};

/// Basis of {x in Z^cols : m x = 0}.
LatticeBasis kernel_lattice(const IntMatrix& m);

/// Coefficients c with sum_i c_i * b_i == v, or nullopt when v is not in the
/// lattice. Throws InputError when v has the wrong length.
std::optional<IntVector> lattice_contains(const LatticeBasis& b, std::span<const Integer> v);

IntVector multiply(const IntMatrix& m, std::span<const Integer> x);
IntVector combine(const LatticeBasis& b, std::span<const Integer> coefficients);

/// Floor division for signed integers (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

IntVector to_int_vector(std::initializer_list<long long> values);

}  // namespace nilorb
