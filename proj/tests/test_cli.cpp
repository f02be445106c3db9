#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "rankgray/io.hpp"
#include "rankgray/verify.hpp"

using namespace rankgray;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string bin_path() {
  const char* bin = std::getenv("RANKGRAY_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "set RANKGRAY_BIN to the rankgray binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = bin_path() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int rc = pclose(p);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string tmp_file(const std::string& name) { return "/tmp/rankgray_cli_" + name; }

size_t count_lines(const std::string& s) {
  size_t c = 0;
  for (char ch : s)
    if (ch == '\n') ++c;
  return c;
}

}  // namespace

TEST_CASE("gen: seven symbols round trip") {
  unsetenv("RANKGRAY_MAX_N");
  RunResult r = run("gen --n 7");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  GenSequence seq = parse_sequence(in);
  CHECK(seq.n == 7);
  CHECK(seq.gens.size() == 2520);
  SnakeReport rep = verify_snake_serial(seq, WalkMode::An);
  CHECK(rep.is_hamiltonian_in_An);
  CHECK(rep.snake_ok());

  std::string path = tmp_file("g7.txt");
  write_atomic(path, r.out);
  CHECK(run("verify --in " + path).code == 0);
  CHECK(run("verify --in " + path + " --json").out.find("\"is_hamiltonian_in_An\": true") !=
        std::string::npos);

  // corrupt one generator: the verifier must reject with code 5
  GenSequence bad = seq;
  bad.gens[7] = (bad.gens[7] == 3) ? 5 : 3;
  write_atomic(path, format_sequence(bad));
  CHECK(run("verify --in " + path).code == 5);
  std::remove(path.c_str());
}

TEST_CASE("gen: rejection exit codes") {
  CHECK(run("gen --n 5").code == 3);
  CHECK(run("gen --n 3").code == 3);
  CHECK(run("gen --n 8").code == 2);
  CHECK(run("gen --n 13").code == 3);  // above the default ceiling
  CHECK(run("gen").code == 2);
  CHECK(run("gen --n 7 --badflag").code == 2);
  CHECK(run("gen --n 7 --format nope").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("RANKGRAY_IGNORED").code == 2);
}

TEST_CASE("gen: ceiling override via environment") {
  setenv("RANKGRAY_MAX_N", "7", 1);
  CHECK(run("gen --n 9").code == 3);
  unsetenv("RANKGRAY_MAX_N");
  CHECK(run("gen --n 9 --format succ").code == 0);
}

TEST_CASE("gen: alternative formats") {
  RunResult succ = run("gen --n 7 --format succ");
  REQUIRE(succ.code == 0);
  std::istringstream in(succ.out);
  SuccessorCover c = parse_cover(in);
  CHECK(c.size() == 2520);
  CHECK(c.count_cycles() == 1);

  RunResult perms = run("gen --n 7 --format perms");
  REQUIRE(perms.code == 0);
  CHECK(count_lines(perms.out) == 2520);
  CHECK(perms.out.substr(0, 14) == "1 2 3 4 5 6 7\n");

  CHECK(run("gen --n 11 --format perms").code == 2);  // refused before generating
}

TEST_CASE("verify: malformed input") {
  std::string path = tmp_file("junk.txt");
  write_atomic(path, "garbage\n");
  CHECK(run("verify --in " + path).code == 2);
  write_atomic(path, "n=3\n1 2 3\n9\n");
  CHECK(run("verify --in " + path).code == 2);
  std::remove(path.c_str());
  CHECK(run("verify --in /does/not/exist.txt").code == 2);
}

TEST_CASE("verify: reads stdin when no --in") {
  std::string path = tmp_file("stdin.txt");
  GenSequence tri;
  tri.n = 3;
  tri.start = Perm::identity(3);
  tri.gens = {3, 3, 3};
  write_atomic(path, format_sequence(tri));
  std::string cmd = bin_path() + " verify < " + path + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::string out;
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int rc = pclose(p);
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK(out.find("length: 3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("m6 and bound") {
  RunResult m6 = run("m6");
  REQUIRE(m6.code == 0);
  std::istringstream in(m6.out);
  GenSequence seq = parse_sequence(in);
  CHECK(seq.n == 6);
  CHECK(seq.gens.size() == 315);

  std::string path = tmp_file("m6.txt");
  write_atomic(path, m6.out);
  CHECK(run("verify --in " + path + " --mode sn").code == 0);
  CHECK(run("verify --in " + path + " --mode an").code == 5);
  std::remove(path.c_str());

  CHECK(run("bound --n 7").out == "2520\n");
  CHECK(run("bound --n 6").out == "360\n");
  CHECK(run("bound --n 21").code == 2);
}

TEST_CASE("rankin") {
  RunResult r5 = run("rankin --n 5 --gens 3,5");
  CHECK(r5.code == 0);
  CHECK(r5.out.find("hamiltonian cycle excluded: yes") != std::string::npos);
  RunResult r7 = run("rankin --n 7 --gens 5,7");
  CHECK(r7.code == 0);
  CHECK(r7.out.find("hamiltonian cycle excluded: yes") != std::string::npos);
  CHECK(run("rankin --n 5 --gens 3,4").code == 2);
  CHECK(run("rankin --n 5 --gens 3").code == 2);
  CHECK(run("rankin --n 5 --gens 3,3").code == 2);
}

TEST_CASE("hypergraph") {
  RunResult h9 = run("hypergraph --n 9 --connected");
  CHECK(h9.code == 0);
  CHECK(count_lines(h9.out) == 34);
  CHECK(h9.out.find("5,6 ; 6,9 ; 7,8 ; 8,9 ; 9,5 ; 9,7\n") == 0);  // the 6-edge leads
  RunResult h3 = run("hypergraph --n 3");
  CHECK(h3.code == 0);
  CHECK(count_lines(h3.out) == 2);
  CHECK(run("hypergraph --n 4 --connected").code == 2);  // needs five symbols
  CHECK(run("hypergraph --n 2").code == 2);
}

TEST_CASE("search") {
  RunResult s3 = run("search --n 3 --gens 3");
  REQUIRE(s3.code == 0);
  std::istringstream in(s3.out);
  GenSequence w = parse_sequence(in);
  CHECK(w.gens.size() == 3);
  CHECK(verify_snake_serial(w, WalkMode::An).is_cycle);

  CHECK(run("search --n 5 --gens 3,5 --max-nodes 50").code == 6);
  CHECK(run("search --n 5 --gens 3,3").code == 2);
  CHECK(run("search --n 5 --gens 7").code == 2);
}

TEST_CASE("atomic output file") {
  std::string path = tmp_file("out7.txt");
  std::remove(path.c_str());
  RunResult r = run("gen --n 7 --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());  // payload went to the file
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string first;
  std::getline(f, first);
  CHECK(first == "n=7");
  // no temp droppings
  CHECK(!std::ifstream(path + ".tmp").good());
  std::remove(path.c_str());
}
