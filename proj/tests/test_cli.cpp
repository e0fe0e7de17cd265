#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "cl3_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const char* bin = std::getenv("CL3_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CL3_BIN must point at the cl3 binary");
  fs::path outfile = work_dir() / "stdout.txt";
  std::string cmd =
      std::string(bin) + " " + args + " > " + outfile.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(outfile);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string file(const char* name) { return (work_dir() / name).string(); }

}  // namespace

TEST_CASE("build constructs the advertised classes") {
  auto r = run("build --p 3 --family bd-S1 --out " + file("q3.txt"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "family=bd-S1\n"));
  CHECK(contains(r.out, "size=65\n"));
  CHECK(contains(r.out, "x=5\n"));
  CHECK(fs::exists(file("q3.txt")));

  auto r5 = run("build --p 5 --family bd-E2 --out " + file("q5e2.txt"));
  CHECK(r5.exit_code == 0);
  CHECK(contains(r5.out, "size=403\n"));
  CHECK(contains(r5.out, "x=13\n"));

  // explicit extension field with an explicit modulus
  auto r9 = run("build --p 3 --h 2 --modulus 1,0,1 --family bd-S1 --out " +
                file("q9.txt"));
  CHECK(r9.exit_code == 0);
  CHECK(contains(r9.out, "size=3731\n"));
  CHECK(contains(r9.out, "x=41\n"));
  std::string header = slurp(file("q9.txt")).substr(0, 200);
  CHECK(contains(header, "p=3\n"));
  CHECK(contains(header, "h=2\n"));
  CHECK(contains(header, "modulus=1,0,1\n"));
  CHECK(contains(header, "convention=first-nonzero-1\n"));
}

TEST_CASE("usage errors exit with 2, help with 0") {
  CHECK(run("build --p 3 --family bd-X1 --out " + file("x.txt")).exit_code == 2);
  CHECK(run("build --p 3 --family bd-S1").exit_code == 2);  // --out required
  CHECK(run("build --family bd-S1 --out " + file("x.txt")).exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("").exit_code == 2);  // a subcommand is required
  CHECK(run("--help").exit_code == 0);
  CHECK(run("build --help").exit_code == 0);
  CHECK(run("verify --in " + file("no_such_file.txt")).exit_code == 2);
  // p must be an odd prime
  CHECK(run("build --p 4 --family bd-S1 --out " + file("x.txt")).exit_code == 2);
  CHECK(run("build --p 2 --family bd-S1 --out " + file("x.txt")).exit_code == 2);
}

TEST_CASE("verify reports pass and is byte-stable across runs and workers") {
  auto a = run("verify --in " + file("q3.txt") + " --spreads 40 --seed 1729");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "result=pass\n"));
  CHECK(contains(a.out, "size=65\n"));
  CHECK(contains(a.out, "x=5\n"));
  CHECK(contains(a.out, "degree_check=pass\n"));
  CHECK(contains(a.out, "spread_intersections=5:40\n"));
  CHECK(contains(a.out, "switchable_pairs=10\n"));
  CHECK(contains(a.out, "rng=mt19937_64\n"));
  CHECK(contains(a.out, "seed=1729\n"));

  auto b = run("verify --in " + file("q3.txt") + " --spreads 40 --seed 1729");
  CHECK(a.out == b.out);
  auto c = run("verify --in " + file("q3.txt") +
               " --spreads 40 --seed 1729 --workers 3");
  CHECK(a.out == c.out);
  // a different seed still passes but draws different spreads
  auto d = run("verify --in " + file("q3.txt") + " --spreads 40 --seed 9");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "seed=9\n"));
}

TEST_CASE("verify distinguishes data errors from verification failures") {
  // dropping a member leaves 64 lines, which no parameter fits: exit 1
  {
    std::string good = slurp(file("q3.txt"));
    std::string trimmed = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
    std::ofstream(file("q3_short.txt")) << trimmed;
  }
  CHECK(run("verify --in " + file("q3_short.txt")).exit_code == 1);

  // swapping one member for a non-member keeps the size but breaks the
  // degree property: exit 1 with a counterexample in the report
  {
    std::string good = slurp(file("q3.txt"));
    std::string swapped = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
    swapped += "0 0 0 0 0 1\n";  // an external line, never a member here
    std::ofstream(file("q3_swapped.txt")) << swapped;
  }
  auto r = run("verify --in " + file("q3_swapped.txt") + " --spreads 5");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "result=fail\n"));
  CHECK(contains(r.out, "degree_check=fail\n"));
  CHECK(contains(r.out, "counterexample_line="));

  // garbage tuples are data errors: exit 2
  {
    std::string good = slurp(file("q3.txt"));
    std::ofstream(file("q3_junk.txt")) << good << "1 1 1 1 1 1\n";
  }
  CHECK(run("verify --in " + file("q3_junk.txt")).exit_code == 2);
}

TEST_CASE("switch picks the pair, switches back, and round-trips bytes") {
  auto r = run("switch --in " + file("q3.txt") + " --out " + file("q3p.txt"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "pair_point=4\n"));
  CHECK(contains(r.out, "pair_plane=13\n"));
  CHECK(contains(r.out, "size=65\n"));
  CHECK(slurp(file("q3p.txt")) != slurp(file("q3.txt")));

  auto back = run("switch --in " + file("q3p.txt") + " --pair 4 --out " +
                  file("q3pp.txt"));
  CHECK(back.exit_code == 0);
  CHECK(slurp(file("q3pp.txt")) == slurp(file("q3.txt")));

  // point 0 is off the quadric, so no switchable pair uses it
  CHECK(run("switch --in " + file("q3.txt") + " --pair 0 --out " +
            file("x.txt")).exit_code == 2);

  auto ver = run("verify --in " + file("q3p.txt") + " --spreads 20");
  CHECK(ver.exit_code == 0);
  CHECK(contains(ver.out, "result=pass\n"));
}

TEST_CASE("pattern prints the matrix and identity checks") {
  auto r = run("pattern --in " + file("q3.txt") + " --line 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "line=7\n"));
  CHECK(contains(r.out, "in_class=false\n"));
  CHECK(contains(r.out, "x=5\n"));
  CHECK(contains(r.out, "matrix=\n"));
  CHECK(contains(r.out, "identity_row_col_sums=pass\n"));
  CHECK(contains(r.out, "identity_linear_relation=pass\n"));
  CHECK(contains(r.out, "identity_additivity=pass\n"));
  CHECK(contains(r.out, "identity_square_sum=pass\n"));

  CHECK(run("pattern --in " + file("q3.txt") + " --line 130").exit_code == 2);
  CHECK(run("pattern --in " + file("q3.txt") + " --line -1").exit_code == 2);
}

TEST_CASE("spectrum prints both histograms") {
  auto r = run("spectrum --in " + file("q3.txt"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "size=65\n"));
  CHECK(contains(r.out, "plane_spectrum=2:10 6:15 10:15\n"));
  CHECK(contains(r.out, "point_spectrum=3:15 7:15 11:10\n"));
}

TEST_CASE("compare reports the invariant verdict") {
  auto q3 = run("compare " + file("q3p.txt") + " " + file("q3.txt"));
  CHECK(q3.exit_code == 0);
  CHECK(contains(q3.out, "result=Indistinguishable\n"));
  CHECK(contains(q3.out, "size_a=65\n"));
  CHECK(contains(q3.out, "size_b=65\n"));

  REQUIRE(run("build --p 5 --family bd-S1 --out " + file("q5.txt")).exit_code == 0);
  REQUIRE(run("switch --in " + file("q5.txt") + " --out " + file("q5p.txt"))
              .exit_code == 0);
  auto q5 = run("compare " + file("q5p.txt") + " " + file("q5.txt"));
  CHECK(q5.exit_code == 0);
  CHECK(contains(q5.out, "result=Distinct\n"));

  // different fields cannot be compared
  CHECK(run("compare " + file("q3.txt") + " " + file("q5.txt")).exit_code == 2);
}
