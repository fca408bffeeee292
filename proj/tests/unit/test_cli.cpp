#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/category_io.hpp"
#include "cli/commands.hpp"
#include "cli/report_io.hpp"
#include "tcat/catalog.hpp"
#include "tcat/closure.hpp"

namespace tcat::cli {
namespace {

using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("tcat_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

struct CommandRun {
  int code = 0;
  std::string out;
  std::string err;
};

template <typename Fn>
CommandRun run(Fn fn, const Options& opt) {
  std::ostringstream out, err;
  CommandRun r;
  r.code = fn(opt, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Options opts(const std::string& input, const std::string& transparent = "auto", const std::string& format = "table") {
  Options o;
  o.input = input;
  o.transparent = transparent;
  o.format = format;
  return o;
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code(ErrorKind::Parse), 2);
  EXPECT_EQ(exit_code(ErrorKind::OutOfScope), 3);
  EXPECT_EQ(exit_code(ErrorKind::Inconsistent), 1);
  EXPECT_EQ(exit_code(ErrorKind::Numerical), 1);
  EXPECT_EQ(exit_code(ErrorKind::InvalidArgument), 1);
}

TEST(Tolerance, FlagThenEnvironmentThenDefault) {
  EXPECT_DOUBLE_EQ(resolve_tolerance(1e-6, "1e-3").eps, 1e-6);
  EXPECT_DOUBLE_EQ(resolve_tolerance(std::nullopt, "1e-3").eps, 1e-3);
  EXPECT_DOUBLE_EQ(resolve_tolerance(std::nullopt, nullptr).eps, 1e-9);
  EXPECT_THROW(resolve_tolerance(-1.0, nullptr), Error);
  EXPECT_THROW(resolve_tolerance(std::nullopt, "abc"), Error);
}

class CatalogFile : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogFile, ExportParseExportIsByteIdentical) {
  const std::string first = export_category(catalog_get(GetParam()));
  const Category back = assemble(parse_category(json::parse(first)));
  EXPECT_EQ(export_category(back), first);
}

TEST_P(CatalogFile, ExportThenValidateSucceeds) {
  TempDir dir;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_catalog_export(GetParam(), dir.file("c.json"), out, err), 0);
  const CommandRun r = run(cmd_validate, opts(dir.file("c.json")));
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("valid"), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(All, CatalogFile, ::testing::ValuesIn(catalog_names()));

TEST(Validate, BrokenAssociativityExitsOneNamingWitness) {
  TempDir dir;
  json j = json::parse(export_category(catalog_get("toric")));
  // Replace e (x) e = 1 by e (x) e = m, which breaks associativity but keeps the file well formed.
  for (auto& t : j["fusion"]) {
    if (t[0] == "e" && t[1] == "e") t[2] = "m";
  }
  const CommandRun r = run(cmd_validate, opts(dir.write("bad.json", j.dump(2))));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE((r.out + r.err).find("associativity fails at ("), std::string::npos) << r.out << r.err;
}

TEST(Validate, MalformedFileExitsTwo) {
  TempDir dir;
  EXPECT_EQ(run(cmd_validate, opts(dir.write("bad.json", "{ not json"))).code, 2);
  EXPECT_EQ(run(cmd_validate, opts(dir.write("shape.json", R"({"name": "x", "labels": 3})"))).code, 2);
  json j = json::parse(export_category(catalog_get("semion")));
  j["twists"]["s"] = {{"phase", {1, 0}}};
  EXPECT_EQ(run(cmd_validate, opts(dir.write("den.json", j.dump()))).code, 2);
}

TEST(Validate, UnknownInputExitsTwo) { EXPECT_EQ(run(cmd_validate, opts("/nonexistent/nothing.json")).code, 2); }

TEST(Validate, BrokenHexagonExitsOne) {
  TempDir dir;
  json j = json::parse(export_category(catalog_get("semion")));
  j["F"] = json::object();
  EXPECT_EQ(run(cmd_validate, opts(dir.write("flip.json", j.dump()))).code, 1);
}

TEST(Conventions, RightHexagonStoresReverseBraiding) {
  // The same semion written with right-hexagon R-symbols must load to identical data.
  json j = json::parse(export_category(catalog_get("semion")));
  j["conventions"]["hexagon"] = "right";
  j["R"]["s,s|1"] = {{"phase", {3, 4}}};
  const Category c = assemble(parse_category(j));
  EXPECT_LT(std::abs(c.skeletal->R(1, 1, 0) - Scalar(0, 1)), 1e-12);
  EXPECT_TRUE(check_hexagon(*c.skeletal).ok);
  EXPECT_EQ(export_category(c), export_category(assemble(parse_category(json::parse(export_category(c))))));
}

TEST(Center, Examples) {
  const CommandRun ising = run(cmd_center, opts("ising"));
  EXPECT_EQ(ising.code, 0);
  EXPECT_NE(ising.out.find("modular: yes"), std::string::npos) << ising.out;
  const CommandRun s3 = run(cmd_center, opts("repS3"));
  EXPECT_NE(s3.out.find("modular: no"), std::string::npos) << s3.out;
  const CommandRun svec = run(cmd_center, opts("svec", "auto", "json"));
  const json j = json::parse(svec.out);
  EXPECT_EQ(j["fermions"], json::array({"f"}));
}

TEST(Close, Examples) {
  const CommandRun z4 = run(cmd_close, opts("z4metric"));
  EXPECT_EQ(z4.code, 0);
  EXPECT_NE(z4.out.find("modular: yes"), std::string::npos) << z4.out;

  const CommandRun s3 = run(cmd_close, opts("repS3", "auto", "json"));
  EXPECT_EQ(s3.code, 0);
  const json j = json::parse(s3.out);
  EXPECT_TRUE(j["trivial"].get<bool>());
  EXPECT_EQ(j["sectors"].size(), 1u);

  const CommandRun ising = run(cmd_close, opts("ising", "auto", "json"));
  EXPECT_EQ(json::parse(ising.out)["sectors"].size(), 3u);
}

TEST(Close, ScopeAndLabelErrors) {
  EXPECT_EQ(run(cmd_close, opts("svec", "f")).code, 3);
  EXPECT_EQ(run(cmd_close, opts("ising", "f")).code, 3);
  EXPECT_EQ(run(cmd_close, opts("repS3", "nope")).code, 2);
  Options bad = opts("repS3");
  bad.format = "yaml";
  EXPECT_NE(run(cmd_close, bad).code, 0);
}

TEST(Close, JsonRoundTrips) {
  for (const auto& [name, s] : std::vector<std::pair<std::string, std::string>>{
           {"repS3", "z"}, {"repD4", "a,b,c"}, {"z4metric", "auto"}, {"ising", "auto"}}) {
    const CommandRun r = run(cmd_close, opts(name, s, "json"));
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(closure_to_json(closure_from_json(j)), j) << name;
  }
}

TEST(Close, ReportsAreDeterministic) {
  const CommandRun a = run(cmd_close, opts("repD4", "a,b,c"));
  const CommandRun b = run(cmd_close, opts("repD4", "a,b,c"));
  EXPECT_EQ(a.out, b.out);
}

TEST(Galois, RepD4Lattice) {
  const CommandRun r = run(cmd_galois, opts("repD4", "auto", "json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 5u);
}

TEST(Catalog, ListNamesEveryEntry) {
  std::ostringstream out;
  EXPECT_EQ(cmd_catalog_list(out), 0);
  for (const auto& n : catalog_names()) EXPECT_NE(out.str().find(n), std::string::npos);
}

TEST(Catalog, ExportUnknownFails) {
  std::ostringstream out, err;
  EXPECT_NE(cmd_catalog_export("nonsense", "", out, err), 0);
}

TEST(FormatScalar, ExactAndInexact) {
  EXPECT_EQ(format_scalar(Amplitude(ExactPhase(0, 1))), "1");
  EXPECT_EQ(format_scalar(Amplitude(ExactPhase(1, 2))), "-1");
  EXPECT_EQ(format_scalar(Amplitude(ExactPhase(1, 4))), "i");
  EXPECT_EQ(format_scalar(Amplitude(ExactPhase(3, 4))), "-i");
  EXPECT_EQ(format_scalar(Amplitude(ExactPhase(1, 16))), "e(1/16)");
}

}  // namespace
}  // namespace tcat::cli
