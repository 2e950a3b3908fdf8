#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "logmink/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "logmink");
  std::ostringstream out, err;
  const int code = logmink::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("logmink_cli_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kUnitDisk = R"({"name": "B", "repr": {"type": "disk", "radius": 1}})";
const char* kTwoDisk = R"({"name": "2B", "repr": {"type": "disk", "radius": 2}})";
const char* kEllipse = R"({"repr": {"type": "ellipse", "a": 2, "b": 1}})";
const char* kPerturbed = R"({"repr": {"type": "trig", "a0": 1, "cos": [0, 0.1]}})";

}  // namespace

TEST_CASE("compute") {
  TempDir dir;
  const std::string b = dir.write("b.json", kUnitDisk);
  const std::string b2 = dir.write("b2.json", kTwoDisk);
  const std::string e = dir.write("e.json", kEllipse);

  Result r = run({"compute", "volume", b});
  CHECK(r.code == 0);
  CHECK(r.out == "3.14159265359\n");
  CHECK(run({"compute", "surface", b}).out == "6.28318530718\n");
  CHECK(run({"compute", "mixed", b2, b}).out == "6.28318530718\n");
  CHECK(run({"compute", "steiner", b2, b}).out == "t1=-2 t2=-2 disc=0\n");
  CHECK(run({"compute", "entropy", e, b}).out == "-3.28766504891\n");
  CHECK(run({"compute", "conevol", b}).out == "3.14159265359\n");
  // Both witnesses can slide along an axis, so only the values are pinned.
  CHECK(run({"compute", "inradius", e, b}).out.rfind("1 witness=(", 0) == 0);
  CHECK(run({"compute", "outradius", e, b}).out.rfind("2 witness=(", 0) == 0);
  CHECK(run({"compute", "volume", b, "--grid-n", "64"}).out == "3.14159265359\n");

  CHECK(run({"compute", "mixed", b}).code == 2);
  CHECK(run({"compute", "bogus", b}).code == 2);
  CHECK(run({"compute", "volume", dir.file("missing.json")}).code == 2);
}

TEST_CASE("make-body") {
  TempDir dir;
  const std::string p = dir.write("p.json", kPerturbed);
  const std::string out = dir.file("p_samples.json");
  const Result r = run({"make-body", p, out, "--grid-n", "128"});
  CHECK(r.code == 0);
  CHECK(fs::exists(out));
  CHECK(run({"compute", "volume", out}).out == "3.09446876379\n");
}

TEST_CASE("invalid bodies exit with 3") {
  TempDir dir;
  const std::string off = dir.write("off.json", R"({"repr": {"type": "disk", "radius": 1,
                                                   "center": [3, 0]}})");
  const std::string concave = dir.write("c.json", R"({"repr": {"type": "trig", "a0": 1,
                                                     "cos": [0, 0.4]}})");
  CHECK(run({"compute", "volume", off}).code == 3);
  const Result r = run({"compute", "volume", concave});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotConvex") != std::string::npos);
  CHECK(r.err.find("theta") != std::string::npos);
}

TEST_CASE("position") {
  TempDir dir;
  const std::string e = dir.write("e.json", kEllipse);
  const std::string b = dir.write("b.json", kUnitDisk);
  const std::string out_l = dir.file("l.json");
  const std::string out_k = dir.file("k.json");
  Result r = run({"position", e, b, out_l, "--out-k", out_k});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("r=1 R=2 ", 0) == 0);
  // A positioned pair is a fixed point.
  r = run({"position", out_k, out_l, "--out", dir.file("l2.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("v=(0,0)") != std::string::npos);
  CHECK(r.out.find("k_shift=(0,0)") != std::string::npos);

  CHECK(run({"position", e, b}).code == 2);
  // An impossible feasibility tolerance is reported as a positioning failure.
  CHECK(run({"position", e, b, out_l, "--tol", "-1"}).code == 5);
}

TEST_CASE("verify") {
  TempDir dir;
  const std::string p = dir.write("p.json", kPerturbed);
  const std::string b = dir.write("b.json", kUnitDisk);
  const std::string b2 = dir.write("b2.json", kTwoDisk);
  const std::string shifted = dir.write("s.json", R"({"repr": {"type": "disk", "radius": 1,
                                                     "center": [0.9, 0]}})");

  Result r = run({"verify", "entropy", p, b});
  CHECK(r.code == 0);
  CHECK(r.out == "entropy,-0.0249246188714,0.0233843400552,0.0483089589266,true,false\n");
  r = run({"verify", "green_osher:sq", b2, b});
  CHECK(r.code == 0);
  CHECK(r.out.find(",true,true\n") != std::string::npos);
  CHECK(run({"verify", "ball_entropy", p}).code == 0);
  CHECK(run({"verify", "log_bm", p, b, "--lambda", "0.3", "--m", "256"}).code == 0);

  // Not at a dilation position unless asked to position first.
  CHECK(run({"verify", "entropy", b2, shifted}).code == 4);
  CHECK(run({"verify", "entropy", b2, shifted, "--position"}).code == 0);
  // A tolerance demanding slack of at least V(K) turns the report into a violation.
  r = run({"verify", "entropy", p, b, "--tol", "-1"});
  CHECK(r.code == 6);
  CHECK(r.out.find(",false,false\n") != std::string::npos);

  CHECK(run({"verify", "nope", p, b}).code == 2);
  CHECK(run({"verify", "entropy", p}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("fuzz is deterministic") {
  TempDir dir;
  const std::string cfg = dir.write(
      "cfg.json", R"({"trials": 20, "seed": 11, "grid_n": 128, "harmonics": 6,
                      "checks": ["entropy", "logmink", "green_osher:neglog", "entropy_nd"]})");
  const std::string a = dir.file("a.csv");
  const std::string c = dir.file("c.csv");
  const Result ra = run({"fuzz", cfg, a, "--threads", "1"});
  const Result rc = run({"fuzz", cfg, "--out", c, "--threads", "4"});
  CHECK(ra.code == 0);
  CHECK(rc.code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(c));
  CHECK(text.rfind("trial,check,lhs,rhs,slack,holds,equality_case,r,R,seed_K,seed_L\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 20 * 4);
  CHECK(ra.out.rfind("trials=20 positioning_failures=0 check_errors=0 fine_violation=", 0) == 0);

  const std::string bad = dir.write("bad.json", R"({"trials": 0, "seed": 1})");
  CHECK(run({"fuzz", bad, dir.file("x.csv")}).code == 2);
  CHECK(run({"fuzz", cfg}).code == 2);
}

#ifdef LOGMINK_CLI_PATH
TEST_CASE("the installed executable") {
  TempDir dir;
  const std::string b = dir.write("b.json", kUnitDisk);
  const std::string cmd = std::string(LOGMINK_CLI_PATH) + " compute volume " + b + " > " +
                          dir.file("out.txt");
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(dir.file("out.txt")) == "3.14159265359\n");
  const std::string bad = std::string(LOGMINK_CLI_PATH) + " frobnicate 2> /dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
#endif
