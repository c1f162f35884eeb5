#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli_runner.hpp"
#include "vcmod/vcmod.hpp"

using cli_runner::run;
using cli_runner::sample;
using Json = nlohmann::json;

namespace {

std::vector<Json> records(const std::string& out) {
  std::vector<Json> rs;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) rs.push_back(Json::parse(line));
  return rs;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("vcmod-test-" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, VcOnPowerSetFixture) {
  const auto r = run("vc --class " + sample("pow4.cls"));
  ASSERT_EQ(r.code, 0);
  const auto rec = records(r.out).at(0);
  EXPECT_EQ(rec["vc"], 4);
  EXPECT_EQ(rec["version"], std::string("vcmod-") + vcmod::kVersion);
  EXPECT_TRUE(rec.contains("limits"));
  EXPECT_TRUE(rec.contains("seed"));
}

TEST(Cli, BoundGolden) {
  const auto r = run("bound --epsilon 0.1 --delta 0.05 --d 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(records(r.out).at(0)["sample_complexity"], 228315);
}

TEST(Cli, StoneCheckAgrees) {
  const auto r = run("stone-check --class " + sample("random.cls") + " --negligible " + sample("N.set"));
  ASSERT_EQ(r.code, 0);
  const auto rec = records(r.out).at(0);
  EXPECT_EQ(rec["vc_mod"], rec["vc_stone"]);
  EXPECT_EQ(rec["equal"], true);
  EXPECT_EQ(rec["lifted_valid"], true);
  const auto inline_set = run("vc-mod --class " + sample("random.cls") + " --negligible 00110000");
  EXPECT_EQ(records(inline_set.out).at(0)["vc_mod"], rec["vc_mod"]);
}

TEST(Cli, ThickAndRemoval) {
  auto r = run("vc-thick --class " + sample("fc16.cls") + " --min-size 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(records(r.out).at(0)["vc_thick"], 1);
  r = run("vc-removal --class " + sample("pow4.cls") + " --budget 1 --mode greedy");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(records(r.out).at(0)["vc"], 3);
  EXPECT_EQ(records(r.out).at(0)["heuristic"], true);
}

TEST(Cli, GenWritesLoadableClass) {
  const auto path = temp_path("gen.cls");
  ASSERT_EQ(run("gen finite-cofinite --m 8 --t 2 --out " + path).code, 0);
  EXPECT_EQ(vcmod::load_class(path), vcmod::gen_finite_cofinite(8, 2));
  const auto out = run("gen intervals --m 4");
  std::istringstream in(out.out);
  EXPECT_EQ(vcmod::read_class(in), vcmod::gen_intervals(4));
  EXPECT_EQ(run("gen random --m 4 --count 3").code, 2);  // needs --seed
}

TEST(Cli, PackingRecords) {
  const auto r = run("packing --d 5 --epsilon 0.1");
  ASSERT_EQ(r.code, 0);
  const auto rec = records(r.out).at(0);
  EXPECT_EQ(rec["packing_meets_bound"], true);
  EXPECT_EQ(rec["bounds_ordered"], true);
  EXPECT_TRUE(rec.contains("atom_bound"));
  const auto by_class = run("packing --class " + sample("pow4.cls") + " --separation 0.5");
  ASSERT_EQ(by_class.code, 0);
  EXPECT_EQ(records(by_class.out).at(0)["packing"], 8);
}

TEST(Cli, PacSimEchoesProvenance) {
  const auto r = run("pac-sim --config " + sample("pac_intervals.json") + " --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto rs = records(r.out);
  EXPECT_EQ(rs.size(), 2u * 2u * 3u);
  for (const auto& rec : rs) {
    EXPECT_EQ(rec["seed"], 3);
    EXPECT_TRUE(rec.contains("n_atom_bound"));
    EXPECT_EQ(rec["consistency_violations"], 0);
  }
  EXPECT_EQ(run("pac-sim --config " + sample("pac_intervals.json")).code, 2);
}

TEST(Cli, CsvCurves) {
  const auto r = run("ugc-sim --config " + sample("ugc_finite_cofinite.json") + " --seed 4 --csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,probability,std_error,worst_measure,n_atom_bound");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("vc").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("vc --class /nonexistent.cls").code, 2);
  EXPECT_EQ(run("vc-thick --class " + sample("pow4.cls") + " --min-size 0").code, 2);
  EXPECT_EQ(run("vc --class " + sample("fc16.cls") + " --max-nodes 2").code, 3);

  const auto bad_seed = temp_path("seeded.json");
  write_file(bad_seed, R"({"class": {"family": "thresholds", "m": 5}, "targets": [2], "n_grid": [3],
                          "epsilons": [0.1], "trials": 5, "seed": 9})");
  EXPECT_EQ(run("pac-sim --config " + bad_seed + " --seed 8").code, 2);
  EXPECT_EQ(run("pac-sim --config " + bad_seed + " --seed 9").code, 0);

  // a target outside the class: samples that hit point 2 admit no consistent member
  const auto cls_path = temp_path("single.cls");
  write_file(cls_path, "vcmod-class 1\nm 3\ncount 2\n100\n110\n");
  const std::string body = R"({"class": {"file": ")" + cls_path +
                           R"("}, "targets": [{"points": [2]}], "n_grid": [4], "epsilons": [0.1], "trials": 20)";
  const auto fatal = temp_path("fatal.json");
  write_file(fatal, body + "}");
  EXPECT_EQ(run("pac-sim --config " + fatal + " --seed 1").code, 4);
  const auto lenient = temp_path("lenient.json");
  write_file(lenient, body + R"(, "no_consistent": "full_error"})");
  const auto r = run("pac-sim --config " + lenient + " --seed 1");
  ASSERT_EQ(r.code, 0);
  const auto rec = records(r.out).at(0);
  EXPECT_GT(rec["no_consistent"].get<int>(), 0);
  EXPECT_EQ(rec["target_in_class"], false);

  const auto mismatch = temp_path("mismatch.set");
  write_file(mismatch, "vcmod-set 1\nm 4\n0000\n");
  EXPECT_EQ(run("vc-mod --class " + cls_path + " --negligible " + mismatch).code, 2);
}
