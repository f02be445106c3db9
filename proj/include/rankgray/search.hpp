#pragma once

#include <cstdint>
#include <vector>

#include "rankgray/cover.hpp"

namespace rankgray {

struct SearchBudget {
  uint64_t max_nodes = 0;   // 0 = unlimited
  double max_seconds = 0;   // 0 = unlimited
};

struct SearchResult {
  uint64_t best_length = 0;
  GenSequence witness;  // closed walk achieving best_length (empty if none)
  bool exact = false;   // the whole space was exhausted within budget
  uint64_t nodes = 0;   // vertices pushed during the search
};

// Longest closed walk from the identity through distinct permutations
// whose visited set stays pairwise Kendall distance >= 2 apart. The
// Cayley graph is vertex transitive, so rooting at the identity loses
// no generality. gens are jump-to-front indices, each in 2..n.
SearchResult longest_snake(int n, const std::vector<int>& gens,
                           const SearchBudget& budget = {});

}  // namespace rankgray
