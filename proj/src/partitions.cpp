#include "nilorb/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "nilorb/errors.hpp"

namespace nilorb {

namespace {

// Even parts (B, D) or odd parts (C) must occur an even number of times.
bool multiplicity_condition(const Partition& p, ClassicalType type) {
  const int restricted_parity = type == ClassicalType::C ? 1 : 0;
  for (std::size_t i = 0; i < p.length();) {
    std::size_t j = i;
    while (j < p.length() && p.parts()[j] == p.parts()[i]) ++j;
    if (p.parts()[i] % 2 == restricted_parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

void require_step_type(ClassicalType type) {
  if (type == ClassicalType::A)
    throw CapabilityError("induction steps are only defined for types B, C and D");
}

// Adds `delta[i]` to part i+1, treating missing parts as zero. nullopt when a
// part would become negative or the sequence stops being weakly decreasing.
std::optional<Partition> shifted(const Partition& p, const std::vector<int>& delta) {
  std::vector<int> parts(std::max(p.length(), delta.size()), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = p.part(i + 1) + (i < delta.size() ? delta[i] : 0);
    if (parts[i] < 0) return std::nullopt;
    if (i > 0 && parts[i] > parts[i - 1]) return std::nullopt;
  }
  return Partition(std::move(parts));
}

std::vector<int> variant_delta(int n, StepVariant v, int sign) {
  std::vector<int> delta;
  if (v == StepVariant::I) {
    delta.assign(static_cast<std::size_t>(n), 2 * sign);
  } else {
    delta.assign(static_cast<std::size_t>(n + 1), 2 * sign);
    delta[static_cast<std::size_t>(n - 1)] = sign;
    delta[static_cast<std::size_t>(n)] = sign;
  }
  return delta;
}

bool gaps_at_most_one(const Partition& p) {
  for (std::size_t i = 1; i <= p.length(); ++i)
    if (p.part(i) - p.part(i + 1) > 1) return false;
  return true;
}

}  // namespace

std::string to_string(ClassicalType type) {
  switch (type) {
    case ClassicalType::A:
      return "A";
    case ClassicalType::B:
      return "B";
    case ClassicalType::C:
      return "C";
    case ClassicalType::D:
      return "D";
  }
  return "?";
}

ClassicalType parse_classical_type(std::string_view text) {
  if (text == "A") return ClassicalType::A;
  if (text == "B") return ClassicalType::B;
  if (text == "C") return ClassicalType::C;
  if (text == "D") return ClassicalType::D;
  throw InputError("unknown classical type '" + std::string(text) + "' (expected A, B, C or D)");
}

std::string to_string(StepVariant v) { return v == StepVariant::I ? "i" : "ii"; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing: " + to_string());
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InputError("cannot parse partition part '" + std::string(token) + "'");
    parts.push_back(value);
    start = end + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

bool is_valid_type(const Partition& p, ClassicalType type) {
  switch (type) {
    case ClassicalType::A:
      return true;
    case ClassicalType::B:
      return p.size() % 2 == 1 && multiplicity_condition(p, type);
    case ClassicalType::C:
    case ClassicalType::D:
      return p.size() % 2 == 0 && multiplicity_condition(p, type);
  }
  return false;
}

Partition transpose(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p.part(1)), 0);
  for (int part : p.parts())
    for (int i = 0; i < part; ++i) ++t[static_cast<std::size_t>(i)];
  return Partition(std::move(t));
}

ClassicalOrbit::ClassicalOrbit(Partition p, ClassicalType type) : partition_(std::move(p)), type_(type) {
  if (!is_valid_type(partition_, type_))
    throw InputError("(" + partition_.to_string() + ") is not a partition of type " + to_string(type_));
}

bool ClassicalOrbit::splits_under_special_orthogonal() const {
  if (type_ != ClassicalType::D || partition_.empty()) return false;
  return std::all_of(partition_.parts().begin(), partition_.parts().end(), [](int x) { return x % 2 == 0; });
}

bool is_special(const ClassicalOrbit& o) {
  const Partition t = transpose(o.partition());
  switch (o.type()) {
    case ClassicalType::A:
      return true;
    case ClassicalType::B:
      return multiplicity_condition(t, ClassicalType::B);
    case ClassicalType::C:
    case ClassicalType::D:
      return multiplicity_condition(t, ClassicalType::C);
  }
  return false;
}

StepResult elementary_step(const Partition& src, ClassicalType type, int n) {
  require_step_type(type);
  if (n < 1) throw InputError("step position must be at least 1, got " + std::to_string(n));
  if (!is_valid_type(src, type))
    throw InputError("(" + src.to_string() + ") is not a partition of type " + to_string(type));
  for (auto variant : {StepVariant::I, StepVariant::II}) {
    auto result = shifted(src, variant_delta(n, variant, +1));
    if (result && is_valid_type(*result, type)) return {std::move(*result), variant};
  }
  throw StepInapplicableError("no elementary step of type " + to_string(type) + " at n=" + std::to_string(n) +
                              " from (" + src.to_string() + ")");
}

std::vector<InverseStep> inverse_steps(const Partition& p, ClassicalType type) {
  require_step_type(type);
  std::vector<InverseStep> out;
  for (int n = 1; n <= static_cast<int>(p.length()); ++n) {
    for (auto variant : {StepVariant::I, StepVariant::II}) {
      auto source = shifted(p, variant_delta(n, variant, -1));
      if (!source || !is_valid_type(*source, type)) continue;
      auto forward = elementary_step(*source, type, n);
      if (forward.variant == variant && forward.result == p) out.push_back({std::move(*source), n, variant});
    }
  }
  return out;
}

Partition replay(const Partition& source, ClassicalType type, const StepScript& script) {
  Partition current = source;
  for (const auto& step : script) {
    auto next = elementary_step(current, type, step.n);
    if (next.variant != step.variant)
      throw IntegrityError("replay: step at n=" + std::to_string(step.n) + " from (" + current.to_string() +
                           ") is variant " + to_string(next.variant) + ", script says " + to_string(step.variant));
    current = std::move(next.result);
  }
  return current;
}

bool is_birationally_rigid(const ClassicalOrbit& o) {
  require_step_type(o.type());
  return gaps_at_most_one(o.partition());
}

bool has_codim4_boundary(const ClassicalOrbit& o) { return is_birationally_rigid(o); }

std::vector<BirationalSource> birational_sources(const ClassicalOrbit& o) {
  require_step_type(o.type());
  const ClassicalType type = o.type();
  std::map<Partition, std::map<Partition, StepScript>> memo;

  std::function<const std::map<Partition, StepScript>&(const Partition&)> search =
      [&](const Partition& p) -> const std::map<Partition, StepScript>& {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::map<Partition, StepScript> found;
    if (gaps_at_most_one(p)) {
      found.emplace(p, StepScript{});
    } else {
      for (const auto& inv : inverse_steps(p, type)) {
        if (inv.variant != StepVariant::I) continue;
        for (const auto& [source, script] : search(inv.source)) {
          if (found.contains(source)) continue;
          StepScript extended = script;
          extended.push_back({inv.n, StepVariant::I});
          found.emplace(source, std::move(extended));
        }
      }
    }
    return memo.emplace(p, std::move(found)).first->second;
  };

  std::vector<BirationalSource> out;
  for (const auto& [source, script] : search(o.partition()))
    out.push_back({ClassicalOrbit(source, type), script});
  return out;
}

std::optional<BirationalSource> rigid_special_source(const ClassicalOrbit& o) {
  if (!is_special(o))
    throw PreconditionError("(" + o.partition().to_string() + ") of type " + to_string(o.type()) +
                            " is not special");
  for (auto& candidate : birational_sources(o))
    if (is_special(candidate.source)) return std::move(candidate);
  return std::nullopt;
}

}  // namespace nilorb
