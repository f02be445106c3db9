#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rankgray/cover.hpp"

namespace rankgray {

// An: the walk is expected to stay inside the alternating group, so
// visiting an odd permutation is reported as a violation. Sn: any
// permutation is fair game (mixed-parity generator sets).
enum class WalkMode { An, Sn };

struct SnakeViolation {
  uint64_t a = 0;  // earlier step index involved
  uint64_t b = 0;  // later step index (== a for single-vertex findings)
  std::string reason;
  bool operator==(const SnakeViolation&) const = default;
};

struct SnakeReport {
  // number of distinct intended vertices: steps for a closed walk,
  // steps + 1 for an open one, 1 for an empty generator list
  uint64_t length = 0;
  bool is_cycle = false;
  bool is_hamiltonian_in_An = false;
  // no two visited vertices sit at Kendall distance 1, i.e. the visited
  // set is independent in the adjacent-transposition flip graph
  bool min_pairwise_kendall_ok = false;
  std::map<int, uint64_t> generator_histogram;
  // capped detail list; the flags above are always exact
  std::vector<SnakeViolation> violations;

  bool snake_ok() const { return min_pairwise_kendall_ok && violations.empty(); }
  bool operator==(const SnakeReport&) const = default;
};

// Single-threaded reference verifier. Canonical violation order: sorted
// by (a, b, reason), at most 1000 entries kept.
SnakeReport verify_snake_serial(const GenSequence& seq, WalkMode mode);

// Chunked verifier: splits the walk across OpenMP threads, composing
// chunk products to find the boundary permutations. On any detected
// problem it reruns the serial reference so the report is identical no
// matter how many threads ran. threads <= 0 picks the OpenMP default.
SnakeReport verify_snake(const GenSequence& seq, WalkMode mode, int threads = 0);

}  // namespace rankgray
