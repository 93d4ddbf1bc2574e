#pragma once

// Coordinate realizations of the E7 and E8 root systems.
//
// E7 lives in Q^8 and E8 in Q^9, both taken modulo the all-ones vector. The
// bilinear form is the ordinary dot product projected onto the sum-zero
// hyperplane:  <x, y> = x.y - (sum x)(sum y) / d,  d = ambient dimension.
// With this form every listed root has squared length 2.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/exact_linalg.hpp"

namespace nilorb {

enum class RootSystemLabel { E7, E8 };

std::string to_string(RootSystemLabel label);
/// Throws CapabilityError for anything other than "E7" / "E8".
RootSystemLabel parse_root_system_label(std::string_view text);

struct Realization {
  RootSystemLabel label;
  std::size_t ambient_dim;
  bool quotient_by_all_ones;

  static Realization of(RootSystemLabel label);
  std::size_t rank() const { return quotient_by_all_ones ? ambient_dim - 1 : ambient_dim; }

  friend bool operator==(const Realization&, const Realization&) = default;
};

/// Rational vector in a realization's ambient space, considered modulo the
/// all-ones vector when the realization is a quotient.
class QuotientVector {
 public:
  QuotientVector(Realization realization, std::vector<Rational> coords);
  QuotientVector(Realization realization, std::span<const Integer> coords);
  static QuotientVector zero(Realization realization);
  static QuotientVector from_ints(Realization realization, std::initializer_list<long long> coords);

  const Realization& realization() const { return realization_; }
  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }

  /// Representative with last coordinate zero (identity for non-quotients).
  QuotientVector canonical() const;
  /// Integer coordinates of the canonical representative, if they are integral.
  std::optional<IntVector> canonical_integral() const;
  /// Integer coordinates of this representative, if integral.
  std::optional<IntVector> integral_coords() const;

  bool is_zero() const;

  QuotientVector& operator+=(const QuotientVector& other);
  QuotientVector& operator-=(const QuotientVector& other);
  friend QuotientVector operator+(QuotientVector a, const QuotientVector& b) { return a += b; }
  friend QuotientVector operator-(QuotientVector a, const QuotientVector& b) { return a -= b; }
  friend QuotientVector operator*(const Rational& s, QuotientVector v);

  /// Equality in the quotient: the difference is a multiple of the all-ones vector.
  friend bool operator==(const QuotientVector& a, const QuotientVector& b);

  /// Sum of e_i terms, e.g. "e1+e2-e9"; uses this representative's coordinates.
  std::string to_string() const;

 private:
  Realization realization_;
  std::vector<Rational> coords_;
};

/// x.y - (sum x)(sum y)/d. Throws InputError on a realization mismatch.
Rational pair(const QuotientVector& x, const QuotientVector& y);

/// 2 a / <a, a>. Throws InputError for the zero vector.
QuotientVector coroot(const QuotientVector& alpha);

struct SimpleRootData {
  std::vector<QuotientVector> simple_roots;  // index i holds alpha_{i+1}
  IntMatrix cartan;                          // cartan(i, j) = 2<a_i, a_j> / <a_j, a_j>
};

/// Simple roots are the positive roots that are not a sum of two positive
/// roots (compared in the quotient). Differences e_i - e_{i+1} receive label
/// i; the remaining simple root(s) follow in enumeration order. Throws
/// IntegrityError when the count differs from the rank.
SimpleRootData derive_simple_roots(const Realization& realization,
                                   std::span<const QuotientVector> positive_roots);

class RootSystem {
 public:
  RootSystem(Realization realization, std::vector<QuotientVector> positive_roots);

  const Realization& realization() const { return realization_; }
  RootSystemLabel label() const { return realization_.label; }
  std::size_t rank() const { return simple_.simple_roots.size(); }
  const std::vector<QuotientVector>& positive_roots() const { return positive_roots_; }
  const std::vector<QuotientVector>& simple_roots() const { return simple_.simple_roots; }
  /// 1-based, matching the usual alpha_i notation.
  const QuotientVector& simple_root(int index) const;
  const IntMatrix& cartan() const { return simple_.cartan; }

  /// Coefficients of positive root `root_index` in the simple-root basis
  /// (all nonnegative).
  const IntVector& simple_coefficients(std::size_t root_index) const {
    return coefficients_[root_index];
  }
  std::optional<std::size_t> find_positive_root(const QuotientVector& v) const;

 private:
  Realization realization_;
  std::vector<QuotientVector> positive_roots_;
  SimpleRootData simple_;
  std::vector<IntVector> coefficients_;
};

/// Throws CapabilityError for unsupported labels.
RootSystem build_root_system(RootSystemLabel label);
/// Cached, immutable instance.
const RootSystem& root_system(RootSystemLabel label);

struct Levi {
  std::vector<int> simple_indices;  // 1-based, sorted
  std::vector<QuotientVector> simple_roots;
  std::vector<QuotientVector> positive_roots;
};

/// Positive roots supported on the chosen simple roots. Throws InputError for
/// indices outside 1..rank.
Levi levi_subsystem(const RootSystem& rs, std::span<const int> simple_indices);

/// Lattice spanned by all coroots, as canonical (last coordinate zero) integer
/// representatives.
LatticeBasis coroot_lattice(const RootSystem& rs);

/// Membership of a quotient vector in a lattice of canonical representatives.
std::optional<IntVector> quotient_lattice_contains(const LatticeBasis& lattice, const QuotientVector& v);

}  // namespace nilorb
