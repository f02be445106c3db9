#include <atomic>
#include <vector>

#include "rankgray/verify.hpp"
#include "verify_common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankgray {

SnakeReport verify_snake(const GenSequence& seq, WalkMode mode, int threads) {
  detail::check_walk_args(seq);
  const int n = seq.n;
  const uint64_t L = seq.gens.size();
  int T = threads;
#ifdef _OPENMP
  if (T <= 0) T = omp_get_max_threads();
#endif
  if (T <= 1 || L < 2 * static_cast<uint64_t>(T))
    return verify_snake_serial(seq, mode);

  // Boundary permutations: each thread composes its chunk's generator
  // product, then the prefixes are chained serially.
  std::vector<uint64_t> cut(T + 1);
  for (int c = 0; c <= T; ++c) cut[c] = L * static_cast<uint64_t>(c) / T;
  std::vector<Perm> prod(T);
#pragma omp parallel for num_threads(T) schedule(static)
  for (int c = 0; c < T; ++c) {
    Perm p = Perm::identity(n);
    for (uint64_t t = cut[c]; t < cut[c + 1]; ++t) p = apply_tau(p, seq.gens[t]);
    prod[c] = p;
  }
  std::vector<Perm> bound(T + 1);
  bound[0] = seq.start;
  for (int c = 0; c < T; ++c) bound[c + 1] = compose(bound[c], prod[c]);
  const bool closed = (bound[T] == seq.start);

  // Mark phase: set one bit per visited vertex; a second set of the
  // same bit is a revisit no matter which thread does it.
  const uint64_t space = factorial(n);
  std::vector<uint64_t> bm((space + 63) / 64, 0);
  std::atomic<bool> dup{false}, odd{false};
  std::vector<std::array<uint64_t, kMaxN + 1>> hist(T);
  for (auto& h : hist) h.fill(0);
#pragma omp parallel for num_threads(T) schedule(static)
  for (int c = 0; c < T; ++c) {
    Perm cur = bound[c];
    bool even_now = is_even(cur);
    for (uint64_t t = cut[c]; t < cut[c + 1]; ++t) {
      uint64_t r = rank_sn(cur);
      std::atomic_ref<uint64_t> word(bm[r >> 6]);
      uint64_t mask = uint64_t(1) << (r & 63);
      if (word.fetch_or(mask, std::memory_order_relaxed) & mask)
        dup.store(true, std::memory_order_relaxed);
      if (!even_now) odd.store(true, std::memory_order_relaxed);
      ++hist[c][seq.gens[t]];
      even_now ^= detail::parity_flips(seq.gens[t]);
      cur = apply_tau(cur, seq.gens[t]);
    }
  }
  if (!closed) {
    uint64_t r = rank_sn(bound[T]);
    uint64_t mask = uint64_t(1) << (r & 63);
    if ((bm[r >> 6] & mask))
      dup.store(true, std::memory_order_relaxed);
    bm[r >> 6] |= mask;
    if (!is_even(bound[T])) odd.store(true, std::memory_order_relaxed);
  }

  // Revisits poison the probe phase's meaning; let the reference code
  // walk it all again and write the canonical report.
  if (dup.load()) return verify_snake_serial(seq, mode);

  // Probe phase: every flip neighbor of every visited vertex must miss
  // the bitmap.
  uint64_t weight[kMaxN];
  detail::fill_weights(n, weight);
  std::atomic<bool> khit{false};
#pragma omp parallel for num_threads(T) schedule(static)
  for (int c = 0; c < T; ++c) {
    Perm cur = bound[c];
    for (uint64_t t = cut[c]; t < cut[c + 1]; ++t) {
      if (!khit.load(std::memory_order_relaxed)) {
        detail::RankedVertex rv = detail::rank_with_code(cur, weight);
        for (int i = 0; i + 1 < n; ++i) {
          uint64_t nr = detail::neighbor_rank(rv, cur, i, weight);
          if ((bm[nr >> 6] >> (nr & 63)) & 1u) khit.store(true, std::memory_order_relaxed);
        }
      }
      cur = apply_tau(cur, seq.gens[t]);
    }
  }
  if (!closed && !khit.load()) {
    detail::RankedVertex rv = detail::rank_with_code(bound[T], weight);
    for (int i = 0; i + 1 < n; ++i) {
      uint64_t nr = detail::neighbor_rank(rv, bound[T], i, weight);
      if ((bm[nr >> 6] >> (nr & 63)) & 1u) khit.store(true);
    }
  }

  if (khit.load() || (mode == WalkMode::An && odd.load()))
    return verify_snake_serial(seq, mode);

  SnakeReport rep;
  rep.length = closed ? L : L + 1;
  rep.is_cycle = closed;
  rep.is_hamiltonian_in_An = closed && !odd.load() && L == half_factorial(n);
  rep.min_pairwise_kendall_ok = true;
  for (int c = 0; c < T; ++c)
    for (int k = 2; k <= n; ++k)
      if (hist[c][k]) rep.generator_histogram[k] += hist[c][k];
  return rep;
}

}  // namespace rankgray
