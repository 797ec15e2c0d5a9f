#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "integra/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "integra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = integra::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("integra_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct writes a loadable table") {
    const auto dir = scratch_dir("construct");
    const auto path = (dir / "g.json").string();
    const Run r = run({"construct", "--spec", "dic(cyclic:6)", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto g = integra::group_from_text(buf.str());
    CHECK(g.order() == 12);
    CHECK(integra::recognize_named(g, "Dic12"));
    const Run p = run({"construct", "--group", path, "--profile"});
    CHECK(p.code == 0);
    CHECK(integra::json::parse(p.out)["order"] == 12);
  }

  TEST_CASE("every catalog spec survives export and reload") {
    const auto dir = scratch_dir("roundtrip");
    for (const auto& entry : integra::named_catalog()) {
      CAPTURE(entry.name);
      const auto path = (dir / (entry.name + ".json")).string();
      REQUIRE(run({"construct", "--spec", entry.construct_spec, "--out", path}).code == 0);
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      CHECK(integra::recognize_named(integra::group_from_text(buf.str()), entry.name));
    }
  }

  TEST_CASE("spectrum") {
    const Run r = run({"spectrum", "--spec", "dihedral:8", "--set-words", "a^2,a^3*b,b"});
    CHECK(r.code == 0);
    const auto j = integra::json::parse(r.out);
    CHECK(j["integral"] == false);
    const Run strict = run({"spectrum", "--spec", "dihedral:8", "--set-words", "a^2,a^3*b,b", "--strict"});
    CHECK(strict.code == 1);
    auto indices = j["set"].get<std::vector<int>>();
    std::string list;
    for (int i : indices) list += (list.empty() ? "" : ",") + std::to_string(i);
    const Run by_index = run({"spectrum", "--spec", "dihedral:8", "--set-indices", list});
    CHECK(by_index.code == 0);
    CHECK(by_index.out == r.out);
    const Run table = run({"spectrum", "--spec", "D8", "--set-words", "a,a^3", "--table"});
    CHECK(table.out.find("eigenvalue") != std::string::npos);
    CHECK(table.out.find('{') != std::string::npos);
  }

  TEST_CASE("classify exit codes") {
    CHECK(run({"classify", "--spec", "dihedral:6", "--class", "A", "--k", "3"}).code == 0);
    const Run r = run({"classify", "--spec", "dihedral:8", "--class", "A", "--k", "3"});
    CHECK(r.code == 1);
    CHECK(integra::json::parse(r.out)["member"] == false);
    CHECK(run({"classify", "--spec", "dihedral:8", "--class", "A", "--k", "3", "--dedup"}).code == 1);
    CHECK(run({"classify", "--spec", "dihedral:8", "--class", "X", "--k", "3"}).code == 2);
    CHECK(run({"classify", "--spec", "dihedral:8", "--class", "A", "--k", "0"}).code == 2);
    CHECK(run({"classify", "--spec", "nonsense", "--class", "A", "--k", "3"}).code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"spectrum", "--spec", "D8"}).code == 2);
    CHECK(run({"spectrum", "--spec", "D8", "--set-words", "c"}).code == 2);
    CHECK(run({"spectrum", "--spec", "D8", "--set-indices", "1"}).code == 2);
    CHECK(run({"spectrum", "--spec", "D8", "--set-indices", "99"}).code == 2);
    CHECK(run({"construct", "--group", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("verify") {
    const Run one = run({"verify", "--claim", "C1"});
    CHECK(one.code == 0);
    CHECK(integra::json::parse(one.out).size() == 1);
    CHECK(run({"verify", "--claim", "C0"}).code == 2);
    const Run none = run({"verify", "--filter", "Q*"});
    CHECK(none.code == 0);
    CHECK(integra::json::parse(none.out).empty());
  }

  TEST_CASE("census") {
    const auto dir = scratch_dir("census");
    REQUIRE(run({"construct", "--spec", "dihedral:8", "--out", (dir / "d8.json").string()}).code == 0);
    REQUIRE(run({"construct", "--spec", "sl:2:3", "--out", (dir / "sl23.json").string()}).code == 0);
    std::ofstream(dir / "notes.txt") << "ignored";
    const Run r = run({"census", "--dir", dir.string(), "--k", "3"});
    CHECK(r.code == 0);
    const auto j = integra::json::parse(r.out);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["group"] == "d8.json");
    CHECK(j[0]["class"] == "A");
    CHECK(j[0]["member"] == false);
    CHECK(j[3]["group"] == "sl23.json");
    CHECK(j[3]["member"] == true);
    const Run only_g = run({"census", "--dir", dir.string(), "--k", "3", "--class", "G"});
    CHECK(integra::json::parse(only_g.out).size() == 2);
    std::ofstream(dir / "broken.json") << "{\"format\":\"ftg-1\"}";
    CHECK(run({"census", "--dir", dir.string(), "--k", "3"}).code == 2);
    CHECK(run({"census", "--dir", (dir / "missing").string(), "--k", "3"}).code == 2);
  }
}
