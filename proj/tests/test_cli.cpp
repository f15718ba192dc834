#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(BANDQ_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("bandq_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& body) {
  auto p = scratch() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("cli classify") {
  auto r = run("classify " + write("m1.txt", "-1 2\n1 -1\n"));
  CHECK(r.code == 0);
  CHECK(r.out.find("Q: yes (T9.1 pattern iii, det=-1)") != std::string::npos);

  r = run("classify " + write("a1.txt", "-1 0\n0 -1\n"));
  CHECK(r.code == 1);
  CHECK(r.out.find("Q: no (nonpositive row 1)") != std::string::npos);

  CHECK(run("classify " + write("bad.txt", "1 x\n2\n")).code == 64);
  CHECK(run("classify " + (scratch() / "missing.txt").string()).code == 64);

  r = run("classify --json " + write("m1.txt", "-1 2\n1 -1\n"));
  CHECK(r.out.find("\"theorem\"") != std::string::npos);
  CHECK(r.out.find("\"answer\"") != std::string::npos);
}

TEST_CASE("cli verify") {
  auto r = run("verify " + write("four.txt", "1 1 0 0\n0 1 1 0\n0 0 1 -1\n1 0 0 0\n"));
  CHECK(r.code == 0);
  r = run("verify " + write("diag.txt", "1 0 0\n0 2 0\n0 0 3\n"));
  CHECK(r.code == 0);
  r = run("verify " + write("dense.txt", "1 2 -1\n-2 1 3\n3 -1 1\n"));
  CHECK(r.code == 0);
}

TEST_CASE("cli degree") {
  CHECK(run("degree " + write("id.txt", "1 0\n0 1\n")).out.find("1") != std::string::npos);
  auto r = run("degree " + write("m1.txt", "-1 2\n1 -1\n"));
  CHECK(r.code == 0);
  CHECK(r.out.find("-1") != std::string::npos);
  CHECK(run("degree " + write("a2.txt", "0 1\n0 1\n")).code == 1);
}

TEST_CASE("cli generate is deterministic") {
  auto a = run("generate --type 2x2 --n 2 --count 10000 --seed 1");
  auto b = run("generate --type 2x2 --n 2 --count 10000 --seed 1");
  CHECK(a.code == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
  CHECK(run("generate --type bdsw-4 --n 1 --count 1 --seed 1").code == 64);
  CHECK(run("generate --type bdsw-3 --n 4 --count 3 --seed 2").code == 0);
}

TEST_CASE("cli jordan") {
  CHECK(run("jordan identities --algebra sym:3 --samples 200 --seed 1").code == 0);
  CHECK(run("jordan rank-one --a eigs:1,2 --b eigs:3,1 --algebra sym:2").code == 0);
  CHECK(run("jordan embed-check --matrix " + write("m1.txt", "-1 2\n1 -1\n") + " --q \"-1 -1\" --frame random").code ==
        0);
}
