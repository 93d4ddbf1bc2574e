#include "nilorb/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilorb/atlas.hpp"
#include "nilorb/delta_check.hpp"
#include "nilorb/errors.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/selftest.hpp"

namespace nilorb::cli {

using nilorb::to_json;

namespace {

CommandResult ok(Json payload, int exit_code = 0) {
  CommandResult r;
  r.payload = std::move(payload);
  r.exit_code = exit_code;
  return r;
}

CommandResult error(std::string message, int exit_code) {
  CommandResult r;
  r.status = Status::Error;
  r.exit_code = exit_code;
  r.diagnostics.push_back(std::move(message));
  return r;
}

// Library exceptions -> CommandResult with the matching exit code.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const LoadError& e) {
    return error(e.what(), 1);
  } catch (const IntegrityError& e) {
    return error(std::string("internal consistency failure: ") + e.what(), 1);
  } catch (const Error& e) {
    return error(e.what(), 2);
  }
}

void flatten(const Json& node, const std::string& path, std::vector<std::string>& lines) {
  auto scalar_array = [](const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
  };
  if (node.is_object()) {
    if (node.empty()) lines.push_back(path + ": {}");
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, lines);
  } else if (node.is_array() && !scalar_array(node)) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", lines);
  } else if (node.is_string()) {
    lines.push_back(path + ": " + node.get<std::string>());
  } else {
    lines.push_back(path + ": " + node.dump());
  }
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(start, end - start));
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw InputError("cannot parse integer '" + token + "'");
    }
    start = end + 1;
  }
  return values;
}

std::vector<int> parse_levi(std::string_view text, const RootSystem& rs) {
  std::vector<int> levi;
  if (text == "all") {
    for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) levi.push_back(i);
    return levi;
  }
  if (text.empty() || text == "none") return levi;
  for (int part : parse_int_list(text)) levi.push_back(part);
  return levi;
}

struct Options {
  bool json = false;
  std::string type, parts;
  int n = 0;
  std::string system, levi, preset;
  std::string group, label;
  std::string data;
};

std::optional<std::filesystem::path> data_path(const Options& o) {
  if (o.data.empty()) return std::nullopt;
  return std::filesystem::path(o.data);
}

CommandResult cmd_partition(const std::string& action, const Options& o) {
  return guarded([&]() -> CommandResult {
    const auto type = parse_classical_type(o.type);
    const auto p = parse_partition(o.parts);
    if (action == "validate") {
      Json j = {{"type", to_string(type)}, {"partition", to_json(p)}, {"size", p.size()},
                {"valid", is_valid_type(p, type)}};
      if (is_valid_type(p, type)) j["splits_under_SO"] = ClassicalOrbit(p, type).splits_under_special_orthogonal();
      return ok(j);
    }
    ClassicalOrbit orbit(p, type);
    if (action == "special") return ok({{"special", is_special(orbit)}});
    if (action == "rigid") return ok({{"birationally_rigid", is_birationally_rigid(orbit)}});
    if (action == "step") {
      auto step = elementary_step(p, type, o.n);
      return ok({{"result", to_json(step.result)}, {"variant", to_string(step.variant)}});
    }
    if (action == "sources") {
      Json sources = Json::array();
      for (const auto& s : birational_sources(orbit)) sources.push_back(to_json(s));
      return ok({{"sources", sources}});
    }
    if (action == "rigid-special-source") {
      auto found = rigid_special_source(orbit);
      if (!found)
        return error("no birationally rigid special source found for a special orbit; this is a bug", 1);
      return ok(to_json(*found));
    }
    return error("unknown partition action '" + action + "'", 2);
  });
}

CommandResult cmd_delta(const Options& o) {
  return guarded([&]() -> CommandResult {
    if (!o.preset.empty() && (!o.system.empty() || !o.levi.empty()))
      return error("--preset cannot be combined with --system/--levi", 2);
    const LeviPreset* preset = o.preset.empty() ? nullptr : &find_preset(o.preset);
    if (!preset && o.system.empty()) return error("either --preset or --system is required", 2);
    const auto& rs = root_system(preset ? preset->system : parse_root_system_label(o.system));
    const auto levi = preset ? preset->levi : parse_levi(o.levi, rs);
    for (int i : levi) (void)rs.simple_root(i);

    auto report = delta_verdict(rs, levi);
    Json payload = to_json(report);
    if (preset) {
      payload["preset"] = preset->name;
      Json refs = Json::array();
      for (const auto& c : check_references(rs, report, preset->references)) refs.push_back(to_json(c));
      payload["reference_checks"] = refs;
    }
    CommandResult r = ok(payload);
    if (preset)
      for (const auto& c : check_references(rs, report, preset->references))
        if (!c.matches)
          r.diagnostics.push_back("reference value for " + c.name + " is " + to_json(c.expected_pairing).dump() +
                                  ", computed " + to_json(c.computed_pairing).dump());
    return r;
  });
}

CommandResult cmd_atlas(const std::string& action, const Options& o) {
  return guarded([&]() -> CommandResult {
    const Atlas atlas = load_atlas(data_path(o));
    if (action == "query") {
      if (o.group.empty() || o.label.empty()) return error("atlas query needs --group and --label", 2);
      return ok(to_json(query(atlas, parse_exceptional_group(o.group), o.label)));
    }
    if (action == "check") {
      auto report = check_consistency(atlas);
      return ok(to_json(report), report.all_passed() ? 0 : 1);
    }
    if (action == "list") {
      Json records = Json::array();
      std::optional<ExceptionalGroup> group;
      if (!o.group.empty()) group = parse_exceptional_group(o.group);
      for (const auto& r : atlas.records())
        if (!group || r.group == *group) records.push_back(to_json(r));
      return ok({{"count", records.size()}, {"records", records}});
    }
    return error("unknown atlas action '" + action + "'", 2);
  });
}

CommandResult cmd_selftest(const Options& o) {
  Json criteria = Json::array();
  bool all = true;
  auto loaded = guarded([&]() -> CommandResult {
    const Atlas atlas = load_atlas(data_path(o));
    for (const auto& c : selftest::run_all(atlas)) {
      all = all && c.passed;
      criteria.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"details", c.details}});
    }
    return ok(Json::object());
  });
  if (loaded.status == Status::Error) {
    // Everything except the atlas criterion can still run.
    for (const auto& c : {selftest::e7_root_system(), selftest::e8_root_system(), selftest::e7_example_replay(),
                          selftest::e8_example_replay(), selftest::classical_fixtures(),
                          selftest::rigid_special_sources_exhaustive(), selftest::step_semantics()})
      criteria.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"details", c.details}});
    criteria.push_back({{"id", 8}, {"name", "atlas consistency"}, {"passed", false},
                        {"details", Json::array({"atlas load failed: " + loaded.diagnostics.front()})}});
    auto lattice = selftest::lattice_oracle();
    criteria.push_back(
        {{"id", lattice.id}, {"name", lattice.name}, {"passed", lattice.passed}, {"details", lattice.details}});
    all = false;
  }
  CommandResult r = ok({{"criteria", criteria}, {"all_passed", all}}, all ? 0 : 1);
  for (const auto& c : criteria)
    if (!c["passed"].get<bool>())
      r.diagnostics.push_back("criterion " + std::to_string(c["id"].get<int>()) + " failed: " +
                              c["name"].get<std::string>());
  return r;
}

std::string render_selftest(const Json& payload) {
  std::ostringstream os;
  for (const auto& c : payload["criteria"]) {
    os << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["id"].get<int>() << ". "
       << c["name"].get<std::string>() << '\n';
    for (const auto& d : c["details"]) os << "         " << d.get<std::string>() << '\n';
  }
  os << "all_passed: " << (payload["all_passed"].get<bool>() ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace

Json to_json(const CommandResult& result) {
  return {{"status", result.status == Status::Ok ? "ok" : "error"},
          {"payload", result.payload},
          {"diagnostics", result.diagnostics}};
}

std::string render_text(const Json& doc) {
  std::vector<std::string> lines;
  flatten(doc, "", lines);
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbit combinatorics: partitions, delta integrality, exceptional orbit atlas", "nilorb"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  std::string action;
  auto* partition = app.add_subcommand("partition", "Classical orbits given by partitions");
  partition->add_option("action", action, "validate | special | rigid | step | sources | rigid-special-source")
      ->required()
      ->check(CLI::IsMember({"validate", "special", "rigid", "step", "sources", "rigid-special-source"}));
  partition->add_option("--type", o.type, "B, C or D")->required();
  partition->add_option("--parts", o.parts, "Comma-separated parts, e.g. 3,3,2,2,1,1")->required();
  partition->add_option("--n", o.n, "Step position (for 'step')");
  partition->add_flag("--json", o.json);

  auto* delta = app.add_subcommand("delta", "Delta integrality for a standard Levi of E7/E8");
  delta->add_option("--system", o.system, "E7 or E8");
  delta->add_option("--levi", o.levi, "Comma-separated simple-root indices, 'all' or 'none'");
  delta->add_option("--preset", o.preset, "E7:A2+A1 or E8:A4+2A1");
  delta->add_flag("--json", o.json);

  auto* atlas = app.add_subcommand("atlas", "Exceptional orbit atlas");
  atlas->add_option("action", action, "query | check | list")
      ->required()
      ->check(CLI::IsMember({"query", "check", "list"}));
  atlas->add_option("--group", o.group, "G2, F4, E6, E7 or E8");
  atlas->add_option("--label", o.label, "Orbit label, e.g. A_4+2A_1");
  atlas->add_option("--data", o.data, "Atlas JSON file (default: $ORBIT_ATLAS_PATH, then the built-in copy)");
  atlas->add_flag("--json", o.json);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--data", o.data, "Atlas JSON file to check instead of the built-in copy");
  self->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "nilorb: " << e.what() << "\n" << "Run with --help for usage.\n";
    return 2;
  }

  CommandResult result;
  if (partition->parsed()) {
    if (action == "step" && partition->count("--n") == 0) result = error("'partition step' needs --n", 2);
    else result = cmd_partition(action, o);
  } else if (delta->parsed()) {
    result = cmd_delta(o);
  } else if (atlas->parsed()) {
    result = cmd_atlas(action, o);
  } else if (self->parsed()) {
    result = cmd_selftest(o);
  }

  if (o.json) {
    out << to_json(result).dump(2) << '\n';
  } else if (result.status == Status::Ok) {
    out << "status: ok\n";
    out << (self->parsed() ? render_selftest(result.payload) : render_text(result.payload));
    for (const auto& d : result.diagnostics) out << "diagnostic: " << d << '\n';
  } else {
    out << "status: error\n";
    for (const auto& d : result.diagnostics) err << "nilorb: " << d << '\n';
  }
  return result.exit_code;
}

}  // namespace nilorb::cli
