#include "nilorb/json_io.hpp"

#include <limits>

namespace nilorb {

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Integer(numerator(x)));
  return numerator(x).str() + "/" + denominator(x).str();
}

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json raw_coords_json(const QuotientVector& v) {
  Json out = Json::array();
  for (const auto& x : v.coords()) out.push_back(to_json(x));
  return out;
}

Json to_json(const QuotientVector& v) { return raw_coords_json(v.canonical()); }

Json to_json(const LatticeBasis& b) {
  Json vectors = Json::array();
  for (const auto& v : b.vectors()) vectors.push_back(to_json(std::span<const Integer>(v)));
  return {{"ambient_dim", b.ambient_dim()}, {"rank", b.rank()}, {"vectors", vectors}};
}

Json to_json(const DeltaReport& report) {
  Json roots = Json::array();
  for (const auto& r : report.roots_pairing_one) roots.push_back(raw_coords_json(r));
  Json pairings = Json::array();
  for (const auto& p : report.pairings) pairings.push_back(to_json(p));
  return {{"system", to_string(report.system)},
          {"levi", report.levi},
          {"h", to_json(report.h)},
          {"roots_pairing_one", roots},
          {"roots_pairing_one_count", report.roots_pairing_one.size()},
          {"kappa", to_json(report.kappa)},
          {"torus_lattice", to_json(report.torus_lattice)},
          {"pairings", pairings},
          {"verdict", to_string(report.verdict)}};
}

Json to_json(const ReferenceCheck& check) {
  return {{"name", check.name},
          {"vector", raw_coords_json(check.vector)},
          {"in_torus_lattice", check.in_torus_lattice},
          {"expected_pairing", to_json(check.expected_pairing)},
          {"computed_pairing", to_json(check.computed_pairing)},
          {"status", check.matches ? "match" : "discrepancy"}};
}

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const ClassicalOrbit& o) {
  Json j = {{"type", to_string(o.type())}, {"partition", to_json(o.partition())}};
  if (o.splits_under_special_orthogonal()) j["splits_under_SO"] = true;
  return j;
}

Json to_json(const StepScript& script) {
  Json out = Json::array();
  for (const auto& s : script) out.push_back({{"n", s.n}, {"variant", to_string(s.variant)}});
  return out;
}

Json to_json(const BirationalSource& s) { return {{"source", to_json(s.source)}, {"script", to_json(s.script)}}; }

Json to_json(const ExceptionalOrbitRecord& r) {
  auto opt = [](const std::optional<bool>& b) -> Json { return b ? Json(*b) : Json(nullptr); };
  Json j = {{"group", to_string(r.group)},
            {"label", r.label},
            {"is_special", opt(r.is_special)},
            {"is_rigid", opt(r.is_rigid)},
            {"is_birationally_rigid", opt(r.is_birationally_rigid)},
            {"codim4_boundary", opt(r.codim4_boundary)},
            {"fails_smooth_locus_codim4", opt(r.fails_smooth_locus_codim4)},
            {"in_e1", r.in_e1},
            {"in_e2", r.in_e2},
            {"in_e3", r.in_e3},
            {"provenance", r.provenance}};
  if (r.levi_descriptor) j["levi_descriptor"] = *r.levi_descriptor;
  if (!r.comment.empty()) j["comment"] = r.comment;
  return j;
}

Json to_json(const ConsistencyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
  return {{"checks", checks}, {"all_passed", report.all_passed()}};
}

}  // namespace nilorb
