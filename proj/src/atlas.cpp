#include "nilorb/atlas.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nilorb/errors.hpp"
#include "nilorb/root_system.hpp"

namespace nilorb {

namespace {

constexpr std::string_view kPublishedPrefix = "paper §";
constexpr std::string_view kExternalPrefix = "external:";

constexpr std::string_view kBoolFlags[] = {"is_special", "is_rigid", "is_birationally_rigid", "codim4_boundary",
                                           "fails_smooth_locus_codim4", "in_e1", "in_e2", "in_e3"};

const std::set<std::string, std::less<>> kRecordKeys = {
    "group", "label", "is_special", "is_rigid", "is_birationally_rigid", "codim4_boundary",
    "fails_smooth_locus_codim4", "in_e1", "in_e2", "in_e3", "levi_descriptor", "provenance", "comment"};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

[[noreturn]] void fail(std::string_view source, std::size_t index, const std::string& who, const std::string& what) {
  std::ostringstream os;
  os << source << ": record " << index;
  if (!who.empty()) os << " (" << who << ")";
  os << ": " << what;
  throw LoadError(os.str());
}

std::optional<bool> optional_bool(const nlohmann::json& j, std::string_view key, const auto& complain) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_boolean()) complain("field '" + std::string(key) + "' must be a boolean or null");
  return it->template get<bool>();
}

ExceptionalOrbitRecord parse_record(const nlohmann::json& j, std::string_view source, std::size_t index) {
  std::string who;
  auto complain = [&](const std::string& what) { fail(source, index, who, what); };
  if (!j.is_object()) complain("record must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!kRecordKeys.contains(key)) complain("unknown field '" + key + "'");
  for (std::string_view key : {"group", "label", "in_e1", "in_e2", "in_e3", "provenance"})
    if (!j.contains(key)) complain("missing field '" + std::string(key) + "'");

  ExceptionalOrbitRecord r;
  if (!j["group"].is_string() || !j["label"].is_string()) complain("group and label must be strings");
  try {
    r.group = parse_exceptional_group(j["group"].get<std::string>());
  } catch (const InputError& e) {
    complain(e.what());
  }
  r.label = normalize_label(j["label"].get<std::string>());
  if (r.label.empty()) complain("empty label");
  who = r.id();

  r.is_special = optional_bool(j, "is_special", complain);
  r.is_rigid = optional_bool(j, "is_rigid", complain);
  r.is_birationally_rigid = optional_bool(j, "is_birationally_rigid", complain);
  r.codim4_boundary = optional_bool(j, "codim4_boundary", complain);
  r.fails_smooth_locus_codim4 = optional_bool(j, "fails_smooth_locus_codim4", complain);
  for (std::string_view key : {"in_e1", "in_e2", "in_e3"})
    if (!j[key].is_boolean()) complain("field '" + std::string(key) + "' must be a boolean");
  r.in_e1 = j["in_e1"].get<bool>();
  r.in_e2 = j["in_e2"].get<bool>();
  r.in_e3 = j["in_e3"].get<bool>();

  if (auto it = j.find("levi_descriptor"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) complain("levi_descriptor must be an array of simple-root indices");
    std::vector<int> levi;
    for (const auto& x : *it) {
      if (!x.is_number_integer() || x.get<int>() < 1) complain("levi_descriptor entries must be positive integers");
      levi.push_back(x.get<int>());
    }
    std::sort(levi.begin(), levi.end());
    if (std::adjacent_find(levi.begin(), levi.end()) != levi.end()) complain("levi_descriptor repeats an index");
    r.levi_descriptor = std::move(levi);
  }

  if (auto it = j.find("comment"); it != j.end()) {
    if (!it->is_string()) complain("comment must be a string");
    r.comment = it->get<std::string>();
  }

  const auto& prov = j["provenance"];
  if (!prov.is_object()) complain("provenance must be an object");
  for (const auto& [key, value] : prov.items()) {
    if (std::find(std::begin(kFlagFields), std::end(kFlagFields), key) == std::end(kFlagFields))
      complain("provenance for unknown field '" + key + "'");
    if (!value.is_string()) complain("provenance of '" + key + "' must be a string");
    r.provenance.emplace(key, value.get<std::string>());
  }
  return r;
}

void validate_record(const ExceptionalOrbitRecord& r, std::string_view source, std::size_t index) {
  auto complain = [&](const std::string& what) { fail(source, index, r.id(), what); };

  if (int(r.in_e1) + int(r.in_e2) + int(r.in_e3) > 1) complain("in_e1, in_e2, in_e3 are mutually exclusive");
  if (r.is_rigid == true && r.is_birationally_rigid != true)
    complain("is_rigid=true requires is_birationally_rigid=true");

  for (std::string_view field : kFlagFields) {
    const bool present = field == "levi_descriptor" ? r.levi_descriptor.has_value() : r.flag(field).has_value();
    auto it = r.provenance.find(std::string(field));
    if (!present) {
      if (it != r.provenance.end()) complain("provenance given for absent field '" + std::string(field) + "'");
      continue;
    }
    if (it == r.provenance.end()) complain("field '" + std::string(field) + "' has no provenance");
    const std::string& src = it->second;
    const bool published = src.starts_with(kPublishedPrefix);
    if (!published && !src.starts_with(kExternalPrefix))
      complain("provenance of '" + std::string(field) + "' must start with \"" + std::string(kPublishedPrefix) +
               "\" or \"" + std::string(kExternalPrefix) + "\"");
    if (!published) continue;

    if (field == "levi_descriptor") {
      if (reference::expected_levi(r.group, r.label) != r.levi_descriptor)
        complain("levi_descriptor disagrees with the published Levi");
      continue;
    }
    auto expected = reference::expected_flag(r.group, r.label, field);
    if (!expected) complain("field '" + std::string(field) + "' claims a published source that states no value");
    if (*expected != *r.flag(field))
      complain("field '" + std::string(field) + "' contradicts the published lists (expected " +
               (*expected ? "true" : "false") + ")");
  }
}

std::set<std::string> ids_where(const Atlas& atlas, const std::function<bool(const ExceptionalOrbitRecord&)>& pred) {
  std::set<std::string> out;
  for (const auto& r : atlas.records())
    if (pred(r)) out.insert(r.id());
  return out;
}

std::set<std::string> ids_of(std::span<const reference::OrbitName> list) {
  std::set<std::string> out;
  for (const auto& o : list) out.insert(o.id());
  return out;
}

// Elements of exactly one side, tagged with the side they are missing from.
std::vector<std::string> symmetric_difference(const std::set<std::string>& found, const std::set<std::string>& wanted) {
  std::vector<std::string> out;
  for (const auto& id : found)
    if (!wanted.contains(id)) out.push_back(id);
  for (const auto& id : wanted)
    if (!found.contains(id)) out.push_back(id);
  return out;
}

CheckResult make_check(std::string id, std::string name, std::vector<std::string> witnesses) {
  CheckResult c{std::move(id), std::move(name), witnesses.empty(), std::move(witnesses)};
  return c;
}

}  // namespace

std::string to_string(ExceptionalGroup g) {
  switch (g) {
    case ExceptionalGroup::G2:
      return "G2";
    case ExceptionalGroup::F4:
      return "F4";
    case ExceptionalGroup::E6:
      return "E6";
    case ExceptionalGroup::E7:
      return "E7";
    case ExceptionalGroup::E8:
      return "E8";
  }
  return "?";
}

ExceptionalGroup parse_exceptional_group(std::string_view text) {
  for (auto g : {ExceptionalGroup::G2, ExceptionalGroup::F4, ExceptionalGroup::E6, ExceptionalGroup::E7,
                 ExceptionalGroup::E8})
    if (text == to_string(g)) return g;
  throw InputError("unknown exceptional group '" + std::string(text) + "' (expected G2, F4, E6, E7 or E8)");
}

std::string normalize_label(std::string_view label) {
  std::string out;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string ExceptionalOrbitRecord::id() const { return to_string(group) + ":" + label; }

bool ExceptionalOrbitRecord::is_published(std::string_view field) const {
  auto it = provenance.find(std::string(field));
  return it != provenance.end() && it->second.starts_with(kPublishedPrefix);
}

std::optional<bool> ExceptionalOrbitRecord::flag(std::string_view field) const {
  if (field == "is_special") return is_special;
  if (field == "is_rigid") return is_rigid;
  if (field == "is_birationally_rigid") return is_birationally_rigid;
  if (field == "codim4_boundary") return codim4_boundary;
  if (field == "fails_smooth_locus_codim4") return fails_smooth_locus_codim4;
  if (field == "in_e1") return in_e1;
  if (field == "in_e2") return in_e2;
  if (field == "in_e3") return in_e3;
  throw InputError("'" + std::string(field) + "' is not a boolean flag");
}

void ExceptionalOrbitRecord::set_flag(std::string_view field, std::optional<bool> value) {
  auto required = [&] {
    if (!value) throw InputError("'" + std::string(field) + "' cannot be null");
    return *value;
  };
  if (field == "is_special") is_special = value;
  else if (field == "is_rigid") is_rigid = value;
  else if (field == "is_birationally_rigid") is_birationally_rigid = value;
  else if (field == "codim4_boundary") codim4_boundary = value;
  else if (field == "fails_smooth_locus_codim4") fails_smooth_locus_codim4 = value;
  else if (field == "in_e1") in_e1 = required();
  else if (field == "in_e2") in_e2 = required();
  else if (field == "in_e3") in_e3 = required();
  else throw InputError("'" + std::string(field) + "' is not a boolean flag");
}

Atlas::Atlas(std::vector<ExceptionalOrbitRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.group, a.label) < std::tie(b.group, b.label);
  });
}

const ExceptionalOrbitRecord* Atlas::find(ExceptionalGroup group, std::string_view label) const {
  const std::string wanted = normalize_label(label);
  for (const auto& r : records_)
    if (r.group == group && r.label == wanted) return &r;
  return nullptr;
}

Atlas load_atlas_text(std::string_view json_text, std::string_view source_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string(source_name) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_array()) throw LoadError(std::string(source_name) + ": atlas must be a JSON array of records");

  std::vector<ExceptionalOrbitRecord> records;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto r = parse_record(doc[i], source_name, i);
    if (auto [it, inserted] = seen.emplace(r.id(), i); !inserted)
      fail(source_name, i, r.id(), "duplicate of record " + std::to_string(it->second));
    validate_record(r, source_name, i);
    records.push_back(std::move(r));
  }
  return Atlas(std::move(records));
}

Atlas load_atlas_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open atlas file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_atlas_text(buffer.str(), path.string());
}

const Atlas& default_atlas() {
  static const Atlas atlas = load_atlas_text(embedded_atlas_json(), "<embedded atlas>");
  return atlas;
}

Atlas load_atlas(const std::optional<std::filesystem::path>& path) {
  if (path) return load_atlas_file(*path);
  if (const char* env = std::getenv("ORBIT_ATLAS_PATH"); env && *env) return load_atlas_file(env);
  return default_atlas();
}

const ExceptionalOrbitRecord& query(const Atlas& atlas, ExceptionalGroup group, std::string_view label) {
  if (const auto* r = atlas.find(group, label)) return *r;
  const std::string wanted = normalize_label(label);
  std::vector<std::pair<std::size_t, std::string>> candidates;
  for (const auto& r : atlas.records())
    if (r.group == group) candidates.emplace_back(edit_distance(wanted, r.label), r.label);
  std::sort(candidates.begin(), candidates.end());
  std::string message = "no orbit '" + wanted + "' in " + to_string(group);
  if (!candidates.empty()) {
    message += "; nearest labels:";
    for (std::size_t i = 0; i < std::min<std::size_t>(3, candidates.size()); ++i)
      message += (i ? ", " : " ") + candidates[i].second;
  }
  throw NotFoundError(message);
}

bool ConsistencyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ConsistencyReport::check(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw NotFoundError("no consistency check '" + std::string(id) + "'");
}

DeltaOracle default_delta_oracle() {
  return [](ExceptionalGroup group, std::span<const int> levi) {
    if (group != ExceptionalGroup::E7 && group != ExceptionalGroup::E8)
      throw CapabilityError("delta integrality is implemented for E7 and E8 only");
    const auto& rs = root_system(parse_root_system_label(to_string(group)));
    return delta_verdict(rs, levi).verdict;
  };
}

ConsistencyReport check_consistency(const Atlas& atlas, const DeltaOracle& delta) {
  ConsistencyReport report;

  {
    auto characterized = ids_where(atlas, [](const auto& r) {
      return r.is_birationally_rigid == true && r.fails_smooth_locus_codim4 == true;
    });
    auto listed = ids_where(atlas, [](const auto& r) { return r.in_e1; });
    auto witnesses = symmetric_difference(characterized, listed);
    if (listed.size() != reference::e1().size())
      witnesses.push_back("|e1|=" + std::to_string(listed.size()) + ", expected " +
                          std::to_string(reference::e1().size()));
    report.checks.push_back(make_check("C1", "(e1) characterization", std::move(witnesses)));
  }
  {
    auto found = ids_where(atlas, [](const auto& r) { return r.is_birationally_rigid == true && r.is_rigid == false; });
    report.checks.push_back(make_check("C2", "birigid-not-rigid quadruple",
                                       symmetric_difference(found, ids_of(reference::birationally_rigid_not_rigid()))));
  }
  {
    auto bad = ids_where(atlas, [](const auto& r) { return r.is_rigid == true && r.is_birationally_rigid != true; });
    report.checks.push_back(make_check("C3", "rigid implies birigid", {bad.begin(), bad.end()}));
  }
  {
    auto found = ids_where(atlas, [](const auto& r) { return r.fails_smooth_locus_codim4 == true; });
    report.checks.push_back(
        make_check("C4", "smooth-locus list", symmetric_difference(found, ids_of(reference::smooth_locus_failures()))));
  }
  {
    auto found = ids_where(atlas, [](const auto& r) { return r.codim4_boundary == true; });
    report.checks.push_back(
        make_check("C5", "codim>=4 list", symmetric_difference(found, ids_of(reference::codim4_boundary()))));
  }
  {
    std::vector<std::string> witnesses;
    for (const auto& r : atlas.records()) {
      if (!r.levi_descriptor) {
        if (reference::expected_levi(r.group, r.label)) witnesses.push_back(r.id() + " (missing levi_descriptor)");
        continue;
      }
      const auto expected = r.in_e3 ? DeltaVerdict::NonIntegral : DeltaVerdict::Integral;
      try {
        auto verdict = delta(r.group, *r.levi_descriptor);
        if (verdict != expected)
          witnesses.push_back(r.id() + " (verdict " + to_string(verdict) + ", expected " + to_string(expected) + ")");
      } catch (const Error& e) {
        witnesses.push_back(r.id() + " (" + e.what() + ")");
      }
    }
    report.checks.push_back(make_check("C6", "delta cross-check", std::move(witnesses)));
  }
  {
    std::vector<std::string> witnesses;
    for (const auto& r : atlas.records())
      if (int(r.in_e1) + int(r.in_e2) + int(r.in_e3) > 1) witnesses.push_back(r.id() + " (in several lists)");
    auto append = [&](std::vector<std::string> ids) { witnesses.insert(witnesses.end(), ids.begin(), ids.end()); };
    append(symmetric_difference(ids_where(atlas, [](const auto& r) { return r.in_e2; }), ids_of(reference::e2())));
    append(symmetric_difference(ids_where(atlas, [](const auto& r) { return r.in_e3; }), ids_of(reference::e3())));
    append(symmetric_difference(ids_where(atlas, [](const auto& r) { return r.in_e1; }), ids_of(reference::e1())));
    for (const auto& r : atlas.records())
      if ((r.in_e2 || r.in_e3) && r.is_special != true) witnesses.push_back(r.id() + " (e2/e3 member not special)");
    for (const auto& o : reference::special()) {
      const auto* r = atlas.find(o.group, o.label);
      if (!r || r->is_special != true) witnesses.push_back(o.id() + " (stated special)");
    }
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    report.checks.push_back(make_check("C7", "e-list exclusivity and specialness", std::move(witnesses)));
  }
  return report;
}

}  // namespace nilorb
