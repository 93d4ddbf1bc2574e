#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "nilorb/atlas.hpp"
#include "nilorb/cli.hpp"

using namespace nilorb;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, PartitionCommands) {
  auto special = run({"--json", "partition", "special", "--type", "D", "--parts", "3,3,2,2,1,1"});
  EXPECT_EQ(special.code, 0);
  EXPECT_EQ(special.json()["payload"], Json({{"special", true}}));

  auto rigid = run({"partition", "rigid", "--type", "C", "--parts", "4,2", "--json"});
  EXPECT_EQ(rigid.json()["payload"], Json({{"birationally_rigid", false}}));

  auto step = run({"partition", "step", "--type", "C", "--parts", "1,1", "--n", "1", "--json"});
  EXPECT_EQ(step.json()["payload"], Json({{"result", {2, 2}}, {"variant", "ii"}}));
  EXPECT_EQ(step.json()["status"], "ok");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"partition", "special", "--type", "C", "--parts", "3,1"}).code, 2);
  EXPECT_EQ(run({"partition", "special", "--type", "Q", "--parts", "1"}).code, 2);
  EXPECT_EQ(run({"partition", "step", "--type", "C", "--parts", "1,1"}).code, 2);
  EXPECT_EQ(run({"delta", "--system", "E7", "--levi", "9"}).code, 2);
  EXPECT_EQ(run({"delta", "--system", "E6", "--levi", "1"}).code, 2);
  EXPECT_EQ(run({"delta", "--preset", "nope"}).code, 2);
  EXPECT_EQ(run({"atlas", "query", "--group", "E8", "--label", "A_4+2A1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto err = run({"--json", "partition", "special", "--type", "C", "--parts", "3,1"});
  EXPECT_EQ(err.json()["status"], "error");
  EXPECT_FALSE(err.json()["diagnostics"].empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, DeltaPresetReportsDiscrepancy) {
  auto r = run({"delta", "--preset", "E7:A2+A1", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["payload"]["verdict"], "integral");
  EXPECT_EQ(j["payload"]["reference_checks"][3]["status"], "discrepancy");
  EXPECT_EQ(j["diagnostics"].size(), 1u);

  auto e8 = run({"delta", "--system", "E8", "--levi", "1,2,3,4,7,8", "--json"});
  EXPECT_EQ(e8.json()["payload"]["verdict"], "non-integral");
}

TEST(Cli, TextAndJsonCarryTheSameFields) {
  auto text = run({"atlas", "query", "--group", "E7", "--label", "A_2+A_1"});
  auto json = run({"atlas", "query", "--group", "E7", "--label", "A_2+A_1", "--json"});
  ASSERT_EQ(text.code, 0);
  EXPECT_EQ(text.out, "status: ok\n" + cli::render_text(json.json()["payload"]));
}

TEST(Cli, AtlasCheckAndList) {
  EXPECT_EQ(run({"atlas", "check"}).code, 0);
  auto list = run({"atlas", "list", "--group", "E7", "--json"});
  auto e7 = std::count_if(default_atlas().records().begin(), default_atlas().records().end(),
                         [](const auto& r) { return r.group == ExceptionalGroup::E7; });
  EXPECT_EQ(list.json()["payload"]["count"], e7);
  EXPECT_EQ(list.json()["payload"]["records"].size(), static_cast<std::size_t>(e7));
}

TEST(Cli, BrokenAtlasFailsCheck) {
  auto doc = Json::parse(embedded_atlas_json());
  for (auto& r : doc)
    if (r["group"] == "E7" && r["label"] == "A_2+A_1") r["levi_descriptor"] = nullptr, r["provenance"].erase("levi_descriptor");
  auto path = write_temp("nilorb_cli_broken.json", doc.dump());
  auto check = run({"atlas", "check", "--data", path.string(), "--json"});
  EXPECT_EQ(check.code, 1);
  EXPECT_FALSE(check.json()["payload"]["all_passed"].get<bool>());

  auto self = run({"selftest", "--data", path.string(), "--json"});
  EXPECT_EQ(self.code, 1);
  for (const auto& c : self.json()["payload"]["criteria"])
    EXPECT_EQ(c["passed"].get<bool>(), c["id"] != 8) << c["name"];

  ::setenv("ORBIT_ATLAS_PATH", path.c_str(), 1);
  EXPECT_EQ(run({"atlas", "check"}).code, 1);
  ::unsetenv("ORBIT_ATLAS_PATH");
  std::filesystem::remove(path);
}

TEST(Cli, UnreadableAtlasIsADataError) {
  auto path = write_temp("nilorb_cli_garbage.json", "[{]");
  auto r = run({"atlas", "check", "--data", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("malformed"), std::string::npos);
  std::filesystem::remove(path);
}
