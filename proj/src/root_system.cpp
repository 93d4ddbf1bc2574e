#include "nilorb/root_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "nilorb/errors.hpp"

namespace nilorb {

namespace {

using RationalKey = std::vector<Rational>;

RationalKey key_of(const QuotientVector& v) { return v.canonical().coords(); }

QuotientVector unit_sum(const Realization& r, std::initializer_list<std::pair<std::size_t, int>> terms) {
  std::vector<Rational> coords(r.ambient_dim);
  for (auto [index, sign] : terms) coords[index - 1] += sign;
  return QuotientVector(r, std::move(coords));
}

std::vector<QuotientVector> e7_positive_roots() {
  const auto r = Realization::of(RootSystemLabel::E7);
  std::vector<QuotientVector> roots;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = i + 1; j <= 7; ++j) roots.push_back(unit_sum(r, {{i, 1}, {j, -1}}));
  for (std::size_t j = 1; j <= 7; ++j) roots.push_back(unit_sum(r, {{8, 1}, {j, -1}}));
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = i + 1; j <= 7; ++j)
      for (std::size_t k = j + 1; k <= 7; ++k)
        roots.push_back(unit_sum(r, {{i, 1}, {j, 1}, {k, 1}, {8, 1}}));
  return roots;
}

std::vector<QuotientVector> e8_positive_roots() {
  const auto r = Realization::of(RootSystemLabel::E8);
  std::vector<QuotientVector> roots;
  for (std::size_t i = 1; i <= 9; ++i)
    for (std::size_t j = i + 1; j <= 9; ++j) roots.push_back(unit_sum(r, {{i, 1}, {j, -1}}));
  for (std::size_t i = 1; i <= 8; ++i)
    for (std::size_t j = i + 1; j <= 8; ++j)
      for (std::size_t k = j + 1; k <= 8; ++k) roots.push_back(unit_sum(r, {{i, 1}, {j, 1}, {k, 1}}));
  for (std::size_t i = 1; i <= 8; ++i)
    for (std::size_t j = i + 1; j <= 8; ++j) roots.push_back(unit_sum(r, {{i, -1}, {j, -1}, {9, -1}}));
  return roots;
}

// Position i (1-based) when v is e_i - e_{i+1} in the quotient, else 0.
std::size_t consecutive_difference_index(const QuotientVector& v) {
  const auto& r = v.realization();
  for (std::size_t i = 1; i < r.ambient_dim; ++i)
    if (v == unit_sum(r, {{i, 1}, {i + 1, -1}})) return i;
  return 0;
}

}  // namespace

std::string to_string(RootSystemLabel label) {
  switch (label) {
    case RootSystemLabel::E7:
      return "E7";
    case RootSystemLabel::E8:
      return "E8";
  }
  return "?";
}

RootSystemLabel parse_root_system_label(std::string_view text) {
  if (text == "E7") return RootSystemLabel::E7;
  if (text == "E8") return RootSystemLabel::E8;
  throw CapabilityError("root system '" + std::string(text) + "' is not supported (available: E7, E8)");
}

Realization Realization::of(RootSystemLabel label) {
  switch (label) {
    case RootSystemLabel::E7:
      return {label, 8, true};
    case RootSystemLabel::E8:
      return {label, 9, true};
  }
  throw CapabilityError("unsupported root system label");
}

QuotientVector::QuotientVector(Realization realization, std::vector<Rational> coords)
    : realization_(realization), coords_(std::move(coords)) {
  if (coords_.size() != realization_.ambient_dim)
    throw InputError("vector of length " + std::to_string(coords_.size()) + " does not fit " +
                     nilorb::to_string(realization_.label) + " (ambient dimension " +
                     std::to_string(realization_.ambient_dim) + ")");
}

QuotientVector::QuotientVector(Realization realization, std::span<const Integer> coords)
    : QuotientVector(realization, std::vector<Rational>(coords.begin(), coords.end())) {}

QuotientVector QuotientVector::zero(Realization realization) {
  return QuotientVector(realization, std::vector<Rational>(realization.ambient_dim));
}

QuotientVector QuotientVector::from_ints(Realization realization, std::initializer_list<long long> coords) {
  std::vector<Rational> c;
  for (long long x : coords) c.emplace_back(x);
  return QuotientVector(realization, std::move(c));
}

QuotientVector QuotientVector::canonical() const {
  if (!realization_.quotient_by_all_ones || coords_.empty()) return *this;
  const Rational shift = coords_.back();
  std::vector<Rational> c = coords_;
  for (auto& x : c) x -= shift;
  return QuotientVector(realization_, std::move(c));
}

std::optional<IntVector> QuotientVector::integral_coords() const {
  IntVector out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) {
    if (denominator(x) != 1) return std::nullopt;
    out.push_back(numerator(x));
  }
  return out;
}

std::optional<IntVector> QuotientVector::canonical_integral() const { return canonical().integral_coords(); }

bool QuotientVector::is_zero() const { return *this == zero(realization_); }

QuotientVector& QuotientVector::operator+=(const QuotientVector& other) {
  if (!(realization_ == other.realization_)) throw InputError("vectors belong to different realizations");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

QuotientVector& QuotientVector::operator-=(const QuotientVector& other) {
  if (!(realization_ == other.realization_)) throw InputError("vectors belong to different realizations");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

QuotientVector operator*(const Rational& s, QuotientVector v) {
  for (auto& x : v.coords_) x *= s;
  return v;
}

bool operator==(const QuotientVector& a, const QuotientVector& b) {
  if (!(a.realization_ == b.realization_)) return false;
  if (!a.realization_.quotient_by_all_ones) return a.coords_ == b.coords_;
  if (a.coords_.empty()) return true;
  const Rational offset = a.coords_[0] - b.coords_[0];
  for (std::size_t i = 1; i < a.coords_.size(); ++i)
    if (a.coords_[i] - b.coords_[i] != offset) return false;
  return true;
}

std::string QuotientVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) os << mag;
    os << 'e' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Rational pair(const QuotientVector& x, const QuotientVector& y) {
  if (!(x.realization() == y.realization()))
    throw InputError("pair: vectors belong to different realizations (" + to_string(x.realization().label) +
                     " vs " + to_string(y.realization().label) + ")");
  Rational dot = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    dot += x.coords()[i] * y.coords()[i];
    sx += x.coords()[i];
    sy += y.coords()[i];
  }
  if (!x.realization().quotient_by_all_ones) return dot;
  return dot - sx * sy / Rational(static_cast<long long>(x.dim()));
}

QuotientVector coroot(const QuotientVector& alpha) {
  const Rational norm = pair(alpha, alpha);
  if (norm == 0) throw InputError("coroot of the zero vector");
  return Rational(2) / norm * alpha;
}

SimpleRootData derive_simple_roots(const Realization& realization,
                                   std::span<const QuotientVector> positive_roots) {
  std::map<RationalKey, std::size_t> sums;
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    for (std::size_t j = i + 1; j < positive_roots.size(); ++j)
      sums.emplace(key_of(positive_roots[i] + positive_roots[j]), 0);

  std::vector<QuotientVector> simple;
  for (const auto& root : positive_roots)
    if (!sums.contains(key_of(root))) simple.push_back(root);

  if (simple.size() != realization.rank())
    throw IntegrityError("positive system of " + to_string(realization.label) + " yields " +
                         std::to_string(simple.size()) + " simple roots, expected rank " +
                         std::to_string(realization.rank()));

  std::stable_sort(simple.begin(), simple.end(), [](const QuotientVector& a, const QuotientVector& b) {
    std::size_t ia = consecutive_difference_index(a);
    std::size_t ib = consecutive_difference_index(b);
    if (ia == 0 || ib == 0) return ia != 0 && ib == 0;
    return ia < ib;
  });

  IntMatrix cartan(simple.size(), simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) {
      Rational entry = 2 * pair(simple[i], simple[j]) / pair(simple[j], simple[j]);
      if (denominator(entry) != 1) throw IntegrityError("non-integral Cartan matrix entry");
      cartan(i, j) = numerator(entry);
    }
  return {std::move(simple), std::move(cartan)};
}

RootSystem::RootSystem(Realization realization, std::vector<QuotientVector> positive_roots)
    : realization_(realization),
      positive_roots_(std::move(positive_roots)),
      simple_(derive_simple_roots(realization_, positive_roots_)) {
  std::map<RationalKey, std::size_t> index;
  for (std::size_t i = 0; i < positive_roots_.size(); ++i) index.emplace(key_of(positive_roots_[i]), i);

  const std::size_t n = simple_.simple_roots.size();
  std::vector<std::optional<IntVector>> memo(positive_roots_.size());
  std::function<const IntVector&(std::size_t)> decompose = [&](std::size_t root) -> const IntVector& {
    if (memo[root]) return *memo[root];
    const QuotientVector& beta = positive_roots_[root];
    for (std::size_t s = 0; s < n; ++s) {
      if (beta == simple_.simple_roots[s]) {
        IntVector unit(n);
        unit[s] = 1;
        return *(memo[root] = std::move(unit));
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (pair(beta, simple_.simple_roots[s]) <= 0) continue;
      auto it = index.find(key_of(beta - simple_.simple_roots[s]));
      if (it == index.end()) continue;
      IntVector c = decompose(it->second);
      c[s] += 1;
      return *(memo[root] = std::move(c));
    }
    throw IntegrityError("positive root " + beta.to_string() + " does not descend to the simple roots");
  };
  coefficients_.reserve(positive_roots_.size());
  for (std::size_t i = 0; i < positive_roots_.size(); ++i) coefficients_.push_back(decompose(i));
}

const QuotientVector& RootSystem::simple_root(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > rank())
    throw InputError("simple root index " + std::to_string(index) + " outside 1.." + std::to_string(rank()));
  return simple_.simple_roots[static_cast<std::size_t>(index - 1)];
}

std::optional<std::size_t> RootSystem::find_positive_root(const QuotientVector& v) const {
  for (std::size_t i = 0; i < positive_roots_.size(); ++i)
    if (positive_roots_[i] == v) return i;
  return std::nullopt;
}

RootSystem build_root_system(RootSystemLabel label) {
  switch (label) {
    case RootSystemLabel::E7:
      return RootSystem(Realization::of(label), e7_positive_roots());
    case RootSystemLabel::E8:
      return RootSystem(Realization::of(label), e8_positive_roots());
  }
  throw CapabilityError("unsupported root system label");
}

const RootSystem& root_system(RootSystemLabel label) {
  static const RootSystem e7 = build_root_system(RootSystemLabel::E7);
  static const RootSystem e8 = build_root_system(RootSystemLabel::E8);
  return label == RootSystemLabel::E7 ? e7 : e8;
}

Levi levi_subsystem(const RootSystem& rs, std::span<const int> simple_indices) {
  Levi levi;
  levi.simple_indices.assign(simple_indices.begin(), simple_indices.end());
  std::sort(levi.simple_indices.begin(), levi.simple_indices.end());
  levi.simple_indices.erase(std::unique(levi.simple_indices.begin(), levi.simple_indices.end()),
                            levi.simple_indices.end());
  std::vector<bool> chosen(rs.rank(), false);
  for (int index : levi.simple_indices) {
    levi.simple_roots.push_back(rs.simple_root(index));
    chosen[static_cast<std::size_t>(index - 1)] = true;
  }
  if (levi.simple_indices.empty()) return levi;
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    const auto& c = rs.simple_coefficients(r);
    bool supported = true;
    for (std::size_t s = 0; s < c.size() && supported; ++s)
      if (c[s] != 0 && !chosen[s]) supported = false;
    if (supported) levi.positive_roots.push_back(rs.positive_roots()[r]);
  }
  return levi;
}

LatticeBasis coroot_lattice(const RootSystem& rs) {
  std::vector<IntVector> generators;
  for (const auto& alpha : rs.positive_roots()) {
    auto c = coroot(alpha).canonical_integral();
    if (!c) throw IntegrityError("coroot " + coroot(alpha).to_string() + " has no integral representative");
    generators.push_back(std::move(*c));
  }
  return LatticeBasis::from_generators(rs.realization().ambient_dim, generators);
}

std::optional<IntVector> quotient_lattice_contains(const LatticeBasis& lattice, const QuotientVector& v) {
  auto c = v.canonical_integral();
  if (!c) return std::nullopt;
  return lattice_contains(lattice, *c);
}

}  // namespace nilorb
