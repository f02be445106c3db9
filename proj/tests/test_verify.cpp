#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankgray/hamgen.hpp"
#include "rankgray/verify.hpp"

using namespace rankgray;

static GenSequence walk_of(int n, std::vector<uint8_t> gens,
                           Perm start = Perm{}) {
  GenSequence s;
  s.n = n;
  s.start = start.n ? start : Perm::identity(n);
  s.gens = std::move(gens);
  return s;
}

TEST_CASE("single vertex") {
  for (WalkMode m : {WalkMode::An, WalkMode::Sn}) {
    SnakeReport r = verify_snake_serial(walk_of(4, {}), m);
    CHECK(r.length == 1);
    CHECK_FALSE(r.is_cycle);
    CHECK_FALSE(r.is_hamiltonian_in_An);
    CHECK(r.min_pairwise_kendall_ok);
    CHECK(r.violations.empty());
    CHECK(r.generator_histogram.empty());
    CHECK(r.snake_ok());
  }
}

TEST_CASE("simple closed orbits") {
  // tau_5 generates a five-step orbit of even permutations
  SnakeReport r = verify_snake_serial(walk_of(5, {5, 5, 5, 5, 5}), WalkMode::An);
  CHECK(r.length == 5);
  CHECK(r.is_cycle);
  CHECK_FALSE(r.is_hamiltonian_in_An);  // only 5 of the 60 vertices
  CHECK(r.min_pairwise_kendall_ok);
  CHECK(r.violations.empty());
  CHECK(r.generator_histogram == std::map<int, uint64_t>{{5, 5}});
}

TEST_CASE("open walk") {
  SnakeReport r = verify_snake_serial(walk_of(3, {3, 3}), WalkMode::An);
  CHECK(r.length == 3);
  CHECK_FALSE(r.is_cycle);
  CHECK(r.min_pairwise_kendall_ok);
  CHECK(r.violations.empty());
}

TEST_CASE("generated cycle is a Hamiltonian snake") {
  GenSequence seven = generate(7);
  SnakeReport r = verify_snake_serial(seven, WalkMode::An);
  CHECK(r.length == 2520);
  CHECK(r.is_cycle);
  CHECK(r.is_hamiltonian_in_An);
  CHECK(r.min_pairwise_kendall_ok);
  CHECK(r.violations.empty());
  uint64_t total = 0;
  for (const auto& [k, c] : r.generator_histogram) {
    CHECK((k == 3 || k == 5 || k == 7));
    total += c;
  }
  CHECK(total == 2520);
}

TEST_CASE("adjacent transposition cycle trips the distance check") {
  GenSequence two = walk_of(2, {2, 2});
  SnakeReport sn = verify_snake_serial(two, WalkMode::Sn);
  CHECK(sn.length == 2);
  CHECK(sn.is_cycle);
  CHECK_FALSE(sn.min_pairwise_kendall_ok);
  REQUIRE(sn.violations.size() == 1);
  CHECK(sn.violations[0] == SnakeViolation{0, 1, "kendall distance 1"});

  SnakeReport an = verify_snake_serial(two, WalkMode::An);
  REQUIRE(an.violations.size() == 2);
  CHECK(an.violations[0] == SnakeViolation{0, 1, "kendall distance 1"});
  CHECK(an.violations[1] == SnakeViolation{1, 1, "odd permutation"});
}

TEST_CASE("mode decides whether odd vertices are findings") {
  GenSequence four = walk_of(4, {4, 4, 4, 4});
  SnakeReport sn = verify_snake_serial(four, WalkMode::Sn);
  CHECK(sn.is_cycle);
  CHECK(sn.min_pairwise_kendall_ok);
  CHECK(sn.violations.empty());
  CHECK_FALSE(sn.is_hamiltonian_in_An);

  SnakeReport an = verify_snake_serial(four, WalkMode::An);
  CHECK(an.min_pairwise_kendall_ok);
  REQUIRE(an.violations.size() == 2);
  CHECK(an.violations[0] == SnakeViolation{1, 1, "odd permutation"});
  CHECK(an.violations[1] == SnakeViolation{3, 3, "odd permutation"});

  // a walk confined to the odd coset is fine in Sn mode
  GenSequence coset = walk_of(3, {3, 3, 3}, Perm::of({2, 1, 3}));
  CHECK(verify_snake_serial(coset, WalkMode::Sn).snake_ok());
  CHECK(verify_snake_serial(coset, WalkMode::An).violations.size() == 3);
}

TEST_CASE("revisits are reported with both step indices") {
  // id -> tau_3 -> id -> tau_3: revisits rank 0 at step 2 and tau_3 at 3
  GenSequence w = walk_of(3, {3, 3, 3, 3, 3, 3});
  SnakeReport r = verify_snake_serial(w, WalkMode::An);
  CHECK(r.is_cycle);
  CHECK_FALSE(r.is_hamiltonian_in_An);
  REQUIRE(r.violations.size() == 3);
  CHECK(r.violations[0] == SnakeViolation{0, 3, "vertex revisited"});
  CHECK(r.violations[1] == SnakeViolation{1, 4, "vertex revisited"});
  CHECK(r.violations[2] == SnakeViolation{2, 5, "vertex revisited"});
}

TEST_CASE("chunked verifier matches the reference") {
  GenSequence seven = generate(7);
  SnakeReport ref = verify_snake_serial(seven, WalkMode::An);
  for (int t : {2, 3, 4, 8}) {
    SnakeReport par = verify_snake(seven, WalkMode::An, t);
    CHECK(par == ref);
  }
  // threads = 1 routes to the reference path
  CHECK(verify_snake(seven, WalkMode::An, 1) == ref);

  // corrupt one edge; the walk must now collide with itself
  GenSequence bad = seven;
  bad.gens[1000] = (bad.gens[1000] == 3) ? 5 : 3;
  SnakeReport bad_ref = verify_snake_serial(bad, WalkMode::An);
  CHECK_FALSE(bad_ref.is_hamiltonian_in_An);
  CHECK_FALSE(bad_ref.violations.empty());
  for (int t : {2, 4}) CHECK(verify_snake(bad, WalkMode::An, t) == bad_ref);

  // open-walk agreement: drop the last edge
  GenSequence open = seven;
  open.gens.pop_back();
  SnakeReport open_ref = verify_snake_serial(open, WalkMode::An);
  CHECK(open_ref.length == 2520);
  CHECK_FALSE(open_ref.is_cycle);
  CHECK(open_ref.snake_ok());
  for (int t : {2, 4}) CHECK(verify_snake(open, WalkMode::An, t) == open_ref);
}

TEST_CASE("nine symbols, chunked and reference agree") {
  GenSequence nine = generate(9);
  SnakeReport par = verify_snake(nine, WalkMode::An, 4);
  CHECK(par.is_hamiltonian_in_An);
  CHECK(par.length == 181440);
  CHECK(par.min_pairwise_kendall_ok);
  SnakeReport ref = verify_snake_serial(nine, WalkMode::An);
  CHECK(par == ref);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(verify_snake_serial(walk_of(0, {}), WalkMode::An),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_snake_serial(walk_of(3, {1}), WalkMode::An),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_snake_serial(walk_of(3, {4}), WalkMode::An),
                  std::invalid_argument);
  GenSequence mismatch;
  mismatch.n = 5;
  mismatch.start = Perm::identity(4);
  CHECK_THROWS_AS(verify_snake_serial(mismatch, WalkMode::An), std::invalid_argument);
  CHECK_THROWS_AS(verify_snake(mismatch, WalkMode::An, 2), std::invalid_argument);
}
