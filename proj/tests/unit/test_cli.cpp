#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <sfvs/generators.hpp>
#include <sfvs/instance_io.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sfvs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sfvs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("sfvs_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

const char* kTriangle = "p sfvs 3 3\ne 1 2\ne 2 3\ne 1 3\nt 1\n";

}  // namespace

TEST_CASE("solve: triangle with one terminal") {
  TempDir dir;
  const auto r = run({"solve", dir.write("t.txt", kTriangle), "--weighted"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"optimum_weight\": \"2/1\"") != std::string::npos);
  CHECK(r.out.find("\"certified\": true") != std::string::npos);
  CHECK(r.out.find("timings") == std::string::npos);
}

TEST_CASE("solve: no terminals keeps all vertices") {
  TempDir dir;
  const auto r = run({"solve", dir.write("p.txt", "p sfvs 3 2\ne 1 2\ne 2 3\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"deleted\": []") != std::string::npos);
  CHECK(r.out.find("\"optimum_weight\": \"3/1\"") != std::string::npos);
}

TEST_CASE("solve: threshold equal to the total weight is a yes") {
  TempDir dir;
  const auto r = run({"solve", dir.write("k.txt", std::string(kTriangle) + "k 3/1\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"decision\": true") != std::string::npos);
}

TEST_CASE("solve: errors map to exit codes") {
  TempDir dir;
  const auto bad = run({"solve", dir.write("bad.txt", "p sfvs 2 1\ne 1 5\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"solve", "/nonexistent/file"}).code == 2);
  CHECK(run({"solve", dir.write("t.txt", kTriangle), "--backend", "magic"}).code == 2);
  CHECK(run({"solve", dir.write("t.txt", kTriangle), "--weighted", "--unweighted"}).code == 2);
  CHECK(run({"solve", dir.write("w.txt", "p sfvs 2 0\nw 1 2/1\n"), "--unweighted"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  // a path has an independent pair, so the dp backend sees a non-empty modulator
  const auto cap = run({"solve", dir.write("p5.txt", "p sfvs 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\nt 3\n"), "--backend",
                        "dp", "--max-modulator", "0"});
  CHECK(cap.code == 3);
}

TEST_CASE("solve: timings only on request") {
  TempDir dir;
  CHECK(run({"solve", dir.write("t.txt", kTriangle), "--timings"}).out.find("total_ms") != std::string::npos);
}

TEST_CASE("solve: output does not depend on the thread count") {
  TempDir dir;
  sfvs::GeneratorSpec spec;
  spec.family = sfvs::Family::Sp1p4FreeFiltered;
  spec.n = 10;
  spec.unit_weights = false;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    spec.seed = seed;
    const auto file = dir.write("g.txt", sfvs::format_instance(sfvs::generate(spec).instance));
    const auto a = run({"solve", file, "--threads", "1"});
    const auto b = run({"solve", file, "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify: accepts solver output and rejects broken records") {
  TempDir dir;
  const auto inst = dir.write("t.txt", kTriangle);
  const auto solved = run({"solve", inst});
  REQUIRE(solved.code == 0);
  CHECK(run({"verify", inst, dir.write("r.json", solved.out)}).code == 0);

  const auto cycle = run({"verify", inst, dir.write("c.json", R"({"n": 3, "forest": [1, 2, 3], "deleted": []})")});
  CHECK(cycle.code == 1);
  CHECK(cycle.out.find("cycle through terminal 1") != std::string::npos);

  const auto overlap = run({"verify", inst, dir.write("o.json", R"({"n": 3, "forest": [1, 2], "deleted": [2, 3]})")});
  CHECK(overlap.code == 1);
  CHECK(overlap.out.find("both kept and deleted") != std::string::npos);

  CHECK(run({"verify", inst, dir.write("m.json", R"({"n": 3, "forest": [1, 2], "deleted": []})")}).code == 1);
  CHECK(run({"verify", inst, dir.write("w.json", R"({"n": 3, "forest": [1, 2], "deleted": [3], "optimum_weight": "3/1"})")})
            .code == 1);
  CHECK(run({"verify", inst, dir.write("n.json", R"({"n": 4, "forest": [1, 2], "deleted": [3, 4]})")}).code == 2);
  CHECK(run({"verify", inst, dir.write("x.json", "not json")}).code == 2);
}

TEST_CASE("recognize") {
  TempDir dir;
  const auto hit = run({"recognize", "--s", "2", dir.write("h.txt", "p sfvs 6 3\ne 3 4\ne 4 5\ne 5 6\n")});
  CHECK(hit.code == 1);
  std::istringstream words(hit.out);
  std::string tag;
  words >> tag;
  CHECK(tag == "pattern");
  int count = 0;
  for (int id; words >> id;) ++count;
  CHECK(count == 6);

  std::string k5 = "p sfvs 5 10\n";
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) k5 += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
  const auto free = run({"recognize", "--s", "2", dir.write("k5.txt", k5)});
  CHECK(free.code == 0);
  CHECK(free.out == "free\n");
}

TEST_CASE("gen is deterministic and rejects unknown families") {
  const auto a = run({"gen", "--family", "random_cograph", "--seed", "1"});
  const auto b = run({"gen", "--family", "random_cograph", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  CHECK(run({"gen", "--family", "nope", "--seed", "1"}).code == 2);
  CHECK(run({"gen", "--family", "random_gnp", "--seed", "1", "--weights", "heavy"}).code == 2);
}

TEST_CASE("bench rejects unknown suites and runs a known one") {
  CHECK(run({"bench", "--suite", "nope"}).code == 2);
  const auto r = run({"bench", "--suite", "pipeline"});
  CHECK(r.code == 0);
  CHECK(r.out.find("weighted_pipeline") != std::string::npos);
}

TEST_CASE("solve then verify succeeds on a thousand generated instances") {
  TempDir dir;
  const char* families[] = {"random_gnp", "random_cograph", "cograph_plus_modulator", "sp1p4_free_filtered",
                            "split_like", "paper_fig1_like"};
  int verified = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string family = families[i % 6];
    const auto gen = run({"gen", "--family", family, "--seed", std::to_string(i + 1), "--n",
                          std::to_string(3 + i % 6), "--modulator", "2", "--weights", i % 2 ? "random" : "unit"});
    REQUIRE(gen.code == 0);
    const auto inst = dir.write("i.txt", gen.out);
    const auto solved = run({"solve", inst});
    REQUIRE(solved.code == 0);
    const auto check = run({"verify", inst, dir.write("r.json", solved.out)});
    REQUIRE_MESSAGE(check.code == 0, check.out);
    ++verified;
  }
  CHECK(verified == 1000);
}
