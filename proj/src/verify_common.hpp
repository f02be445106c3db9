#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "rankgray/perm.hpp"
#include "rankgray/verify.hpp"

namespace rankgray::detail {

inline void check_walk_args(const GenSequence& seq) {
  if (seq.n < 1 || seq.n > kMaxN)
    throw std::invalid_argument("verify: n out of range");
  if (seq.start.n != seq.n)
    throw std::invalid_argument("verify: start permutation has the wrong size");
  for (uint8_t g : seq.gens)
    if (g < 2 || g > seq.n)
      throw std::invalid_argument("verify: generator index " + std::to_string(int(g)) +
                                  " outside 2..n");
}

// Lexicographic S_n rank plus the Lehmer digits it came from, so the
// ranks of all adjacent-transposition neighbors can be found in O(1)
// each: swapping positions i, i+1 only changes digits i and i+1.
struct RankedVertex {
  uint64_t rank = 0;
  std::array<uint8_t, kMaxN> code{};
};

inline RankedVertex rank_with_code(const Perm& p, const uint64_t* weight) {
  RankedVertex rv;
  lehmer_code(p, rv.code);
  for (int i = 0; i < p.n - 1; ++i) rv.rank += rv.code[i] * weight[i];
  return rv;
}

// Rank of p * s_i (entries in positions i+1, i+2 swapped, 0-based i).
inline uint64_t neighbor_rank(const RankedVertex& rv, const Perm& p, int i,
                              const uint64_t* weight) {
  int64_t di = rv.code[i], dj = rv.code[i + 1];
  int64_t ni = dj + (p.v[i] < p.v[i + 1] ? 1 : 0);
  int64_t nj = di - (p.v[i + 1] < p.v[i] ? 1 : 0);
  return rv.rank + (ni - di) * static_cast<int64_t>(weight[i]) +
         (nj - dj) * static_cast<int64_t>(weight[i + 1]);
}

// weight[i] = (n - 1 - i)!
inline void fill_weights(int n, uint64_t* weight) {
  for (int i = 0; i < n; ++i) weight[i] = factorial(n - 1 - i);
}

// tau_k is a k-cycle, odd as a permutation exactly when k is even, so a
// step with even k flips the parity of the vertex.
inline bool parity_flips(uint8_t k) { return k % 2 == 0; }

}  // namespace rankgray::detail
