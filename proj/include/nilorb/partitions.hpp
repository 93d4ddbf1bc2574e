#pragma once

// Nilpotent orbits of the classical Lie algebras, labelled by partitions.
//
//   B: so(2n+1), partitions of an odd number, even parts with even multiplicity
//   C: sp(2n),   partitions of an even number, odd parts with even multiplicity
//   D: so(2n),   partitions of an even number, even parts with even multiplicity
//
// Type D orbits are orbits of the full orthogonal group O(2n). Type A is
// accepted by the validity and specialness predicates only.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

enum class ClassicalType { A, B, C, D };

std::string to_string(ClassicalType type);
/// Throws InputError for anything other than A/B/C/D.
ClassicalType parse_classical_type(std::string_view text);

/// Weakly decreasing positive parts; trailing zeros are implicit.
class Partition {
 public:
  Partition() = default;
  /// Strips trailing zeros. Throws InputError on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;  // sum of the parts
  bool empty() const { return parts_.empty(); }
  /// 1-based, zero beyond the last part.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  /// Number of parts equal to value.
  int multiplicity(int value) const;

  std::string to_string() const;  // "3,3,2,2,1,1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Parses "3,3,2,2,1,1" (an empty string is the zero partition).
Partition parse_partition(std::string_view text);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

bool is_valid_type(const Partition& p, ClassicalType type);
Partition transpose(const Partition& p);

class ClassicalOrbit {
 public:
  /// Throws InputError when p is not a partition of the given type.
  ClassicalOrbit(Partition p, ClassicalType type);

  const Partition& partition() const { return partition_; }
  ClassicalType type() const { return type_; }
  /// Type D with only even parts: the O(2n)-orbit is a union of two SO(2n)-orbits.
  bool splits_under_special_orthogonal() const;

  friend bool operator==(const ClassicalOrbit&, const ClassicalOrbit&) = default;

 private:
  Partition partition_;
  ClassicalType type_;
};

bool is_special(const ClassicalOrbit& o);

enum class StepVariant { I, II };
std::string to_string(StepVariant v);  // "i" / "ii"

struct StepResult {
  Partition result;
  StepVariant variant;
};

/// Variant (i) adds 2 to the first n parts. Only when that breaks the type,
/// variant (ii) adds 2 to the first n-1 parts and 1 to parts n and n+1.
/// Throws StepInapplicableError when neither gives a partition of the type,
/// InputError when src is not of the type or n < 1, CapabilityError for type A.
StepResult elementary_step(const Partition& src, ClassicalType type, int n);

struct InverseStep {
  Partition source;
  int n;
  StepVariant variant;
  friend bool operator==(const InverseStep&, const InverseStep&) = default;
};

/// Every (source, n, variant) with elementary_step(source, type, n) == (p, variant),
/// ordered by n then variant.
std::vector<InverseStep> inverse_steps(const Partition& p, ClassicalType type);

struct ScriptStep {
  int n;
  StepVariant variant;
  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};
using StepScript = std::vector<ScriptStep>;

/// Applies the script from `source`; throws IntegrityError if a step's
/// variant differs from the recorded one.
Partition replay(const Partition& source, ClassicalType type, const StepScript& script);

/// mu_i - mu_{i+1} <= 1 for all i, with mu_{len+1} = 0.
bool is_birationally_rigid(const ClassicalOrbit& o);
bool has_codim4_boundary(const ClassicalOrbit& o);

struct BirationalSource {
  ClassicalOrbit source;
  StepScript script;  // replays source -> target
};

/// Every birationally rigid orbit reachable by undoing variant-(i) steps,
/// sorted by partition.
std::vector<BirationalSource> birational_sources(const ClassicalOrbit& o);

/// The lexicographically smallest birational source that is also special.
/// Throws PreconditionError when o is not special.
std::optional<BirationalSource> rigid_special_source(const ClassicalOrbit& o);

}  // namespace nilorb
