#include "nilorb/delta_check.hpp"

#include <algorithm>

#include "nilorb/errors.hpp"

namespace nilorb {

std::string to_string(DeltaVerdict verdict) {
  return verdict == DeltaVerdict::Integral ? "integral" : "non-integral";
}

QuotientVector principal_h(const RootSystem& rs, std::span<const int> levi) {
  if (levi.empty()) throw InputError("principal_h: the Levi has no simple roots");
  auto sub = levi_subsystem(rs, levi);
  auto h = QuotientVector::zero(rs.realization());
  for (const auto& alpha : sub.positive_roots) h += coroot(alpha);
  return h;
}

std::vector<QuotientVector> roots_pairing_value(const RootSystem& rs, const QuotientVector& h,
                                                const Integer& value) {
  std::vector<QuotientVector> out;
  const Rational target(value);
  for (const auto& alpha : rs.positive_roots())
    if (pair(alpha, h) == target) out.push_back(alpha);
  return out;
}

QuotientVector kappa(const RootSystem& rs, const QuotientVector& h) {
  auto sum = QuotientVector::zero(rs.realization());
  for (const auto& alpha : roots_pairing_value(rs, h, 1)) sum += alpha;
  return sum;
}

LatticeBasis central_torus_lattice(const RootSystem& rs, std::span<const int> levi) {
  const std::size_t dim = rs.realization().ambient_dim;
  auto sub = levi_subsystem(rs, levi);
  std::vector<IntVector> generators;
  for (const auto& alpha : rs.positive_roots()) generators.push_back(*coroot(alpha).canonical_integral());
  if (sub.simple_roots.empty()) return LatticeBasis::from_generators(dim, generators);

  // x = sum_j c_j g_j lies in the center iff <alpha_i, x> = 0 for each Levi
  // simple root; solve for integer c, then map back to ambient coordinates.
  IntMatrix constraints(sub.simple_roots.size(), generators.size());
  for (std::size_t i = 0; i < sub.simple_roots.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Rational v = pair(sub.simple_roots[i], QuotientVector(rs.realization(), generators[j]));
      if (denominator(v) != 1) throw IntegrityError("non-integral root/coroot pairing");
      constraints(i, j) = numerator(v);
    }
  auto kernel = kernel_lattice(constraints);
  std::vector<IntVector> images;
  for (const auto& c : kernel.vectors()) {
    IntVector x(dim);
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (c[j] != 0)
        for (std::size_t k = 0; k < dim; ++k) x[k] += c[j] * generators[j][k];
    images.push_back(std::move(x));
  }
  return LatticeBasis::from_generators(dim, images);
}

bool is_even_integer(const Rational& q) { return denominator(q) == 1 && numerator(q) % 2 == 0; }

DeltaReport delta_verdict(const RootSystem& rs, std::span<const int> levi) {
  auto sub = levi_subsystem(rs, levi);
  auto h = sub.simple_roots.empty() ? QuotientVector::zero(rs.realization()) : principal_h(rs, levi);
  auto roots = sub.simple_roots.empty() ? std::vector<QuotientVector>{} : roots_pairing_value(rs, h, 1);
  auto k = QuotientVector::zero(rs.realization());
  for (const auto& alpha : roots) k += alpha;
  auto torus = central_torus_lattice(rs, levi);

  std::vector<Rational> pairings;
  bool even = true;
  for (const auto& b : torus.vectors()) {
    pairings.push_back(pair(k, QuotientVector(rs.realization(), b)));
    even = even && is_even_integer(pairings.back());
  }
  return DeltaReport{rs.label(),
                     sub.simple_indices,
                     std::move(h),
                     std::move(roots),
                     std::move(k),
                     std::move(torus),
                     std::move(pairings),
                     even ? DeltaVerdict::Integral : DeltaVerdict::NonIntegral};
}

const std::vector<LeviPreset>& levi_presets() {
  static const std::vector<LeviPreset> presets = {
      {"E7:A2+A1",
       RootSystemLabel::E7,
       {1, 2, 6},
       {{"e1+e2+e3-3e8", {1, 1, 1, 0, 0, 0, 0, -3}, -14},
        {"3e8-e5-e6-e7", {0, 0, 0, 0, -1, -1, -1, 3}, 18},
        {"2e8-e6-e7", {0, 0, 0, 0, 0, -1, -1, 2}, 14},
        // Published as 16; no choice of form or representative reproduces it.
        {"4e8", {0, 0, 0, 0, 0, 0, 0, 4}, 16}}},
      {"E8:A4+2A1",
       RootSystemLabel::E8,
       {1, 2, 3, 4, 7, 8},
       {{"pi5", {1, 1, 1, 1, 1, 0, 0, 0, -5}, 35}, {"pi6", {1, 1, 1, 1, 1, 1, 0, 0, -3}, 23}}},
  };
  return presets;
}

const LeviPreset& find_preset(std::string_view name) {
  for (const auto& p : levi_presets())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : levi_presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw InputError("unknown preset '" + std::string(name) + "' (available: " + known + ")");
}

std::vector<ReferenceCheck> check_references(const RootSystem& rs, const DeltaReport& report,
                                             std::span<const ReferenceVector> references) {
  std::vector<ReferenceCheck> out;
  for (const auto& ref : references) {
    IntVector coords;
    for (long long x : ref.coords) coords.emplace_back(x);
    QuotientVector v(rs.realization(), coords);
    Rational computed = pair(report.kappa, v);
    Rational expected(ref.expected_pairing);
    out.push_back({ref.name, v, quotient_lattice_contains(report.torus_lattice, v).has_value(), expected,
                   computed, computed == expected});
  }
  return out;
}

}  // namespace nilorb
