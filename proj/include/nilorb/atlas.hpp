#pragma once

// Table of nilpotent orbits in the exceptional Lie algebras together with a
// handful of boolean properties and their sources, plus cross-checks tying
// the table to the published orbit lists and to the delta integrality test.

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/delta_check.hpp"

namespace nilorb {

enum class ExceptionalGroup { G2, F4, E6, E7, E8 };

std::string to_string(ExceptionalGroup g);
/// Throws InputError for unknown names.
ExceptionalGroup parse_exceptional_group(std::string_view text);

/// Removes all whitespace; primes and parentheses are kept.
std::string normalize_label(std::string_view label);

/// Flag fields that carry a provenance entry.
inline constexpr std::string_view kFlagFields[] = {
    "is_special", "is_rigid", "is_birationally_rigid", "codim4_boundary", "fails_smooth_locus_codim4",
    "in_e1",      "in_e2",    "in_e3",                 "levi_descriptor"};

struct ExceptionalOrbitRecord {
  ExceptionalGroup group = ExceptionalGroup::G2;
  std::string label;
  std::optional<bool> is_special;
  std::optional<bool> is_rigid;
  std::optional<bool> is_birationally_rigid;
  std::optional<bool> codim4_boundary;
  std::optional<bool> fails_smooth_locus_codim4;
  bool in_e1 = false;
  bool in_e2 = false;
  bool in_e3 = false;
  std::optional<std::vector<int>> levi_descriptor;
  std::map<std::string, std::string> provenance;  // field name -> source
  std::string comment;

  std::string id() const;  // "E8:A_4+2A_1"
  bool is_published(std::string_view field) const;

  /// Accessors by field name for the seven boolean flags; throws InputError for others.
  std::optional<bool> flag(std::string_view field) const;
  void set_flag(std::string_view field, std::optional<bool> value);

  friend bool operator==(const ExceptionalOrbitRecord&, const ExceptionalOrbitRecord&) = default;
};

class Atlas {
 public:
  Atlas() = default;
  /// Sorts by (group, label). Does not validate; see load_atlas_text.
  explicit Atlas(std::vector<ExceptionalOrbitRecord> records);

  const std::vector<ExceptionalOrbitRecord>& records() const { return records_; }
  std::vector<ExceptionalOrbitRecord>& mutable_records() { return records_; }
  const ExceptionalOrbitRecord* find(ExceptionalGroup group, std::string_view label) const;

  friend bool operator==(const Atlas&, const Atlas&) = default;

 private:
  std::vector<ExceptionalOrbitRecord> records_;
};

/// Parses and validates an atlas document. Throws LoadError naming the
/// offending record on malformed input, unknown or missing fields, duplicate
/// (group, label) pairs, violated record invariants, or published-source flags
/// that disagree with the reference lists.
Atlas load_atlas_text(std::string_view json_text, std::string_view source_name = "<memory>");
Atlas load_atlas_file(const std::filesystem::path& path);
/// The atlas compiled into the library.
const Atlas& default_atlas();
std::string_view embedded_atlas_json();

/// Resolution order: explicit path, then $ORBIT_ATLAS_PATH, then the embedded copy.
Atlas load_atlas(const std::optional<std::filesystem::path>& path);

/// Exact lookup after whitespace normalization. Throws NotFoundError listing the
/// closest labels of the group.
const ExceptionalOrbitRecord& query(const Atlas& atlas, ExceptionalGroup group, std::string_view label);

struct CheckResult {
  std::string id;    // "C1".."C7"
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
};

struct ConsistencyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult& check(std::string_view id) const;
};

/// Evaluates delta integrality for a Levi of an exceptional group.
using DeltaOracle = std::function<DeltaVerdict(ExceptionalGroup, std::span<const int>)>;
DeltaOracle default_delta_oracle();

ConsistencyReport check_consistency(const Atlas& atlas, const DeltaOracle& delta = default_delta_oracle());

// Reference lists of the published classification, keyed by record id.
namespace reference {

struct OrbitName {
  ExceptionalGroup group;
  std::string_view label;
  std::string id() const;
};

std::span<const OrbitName> e1();
std::span<const OrbitName> e2();
std::span<const OrbitName> e3();
/// Orbits whose closure has boundary of codimension at least 4 (complete list).
std::span<const OrbitName> codim4_boundary();
/// Orbits for which the smooth locus of Spec C[O] misses O in codimension 2.
std::span<const OrbitName> smooth_locus_failures();
/// The only birationally rigid orbits that are not rigid.
std::span<const OrbitName> birationally_rigid_not_rigid();
/// Orbits stated to be special.
std::span<const OrbitName> special();
/// Orbits stated to be rigid.
std::span<const OrbitName> rigid();
/// Orbits stated to be birationally induced (hence neither rigid nor birationally rigid).
std::span<const OrbitName> birationally_induced();

/// Levi (simple-root indices) of a minimal Levi for the two orbits where it is published.
std::optional<std::vector<int>> expected_levi(ExceptionalGroup group, std::string_view label);

/// Value the published lists force on a flag of the given record, if any.
std::optional<bool> expected_flag(ExceptionalGroup group, std::string_view label, std::string_view field);

}  // namespace reference

}  // namespace nilorb
