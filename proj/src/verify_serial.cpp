#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "rankgray/verify.hpp"
#include "verify_common.hpp"

namespace rankgray {

namespace {
constexpr size_t kDetailCap = 1000;  // violations kept in the report
constexpr size_t kEventCap = 2048;   // raw events gathered before dedup
}  // namespace

SnakeReport verify_snake_serial(const GenSequence& seq, WalkMode mode) {
  detail::check_walk_args(seq);
  const int n = seq.n;
  const uint64_t L = seq.gens.size();

  SnakeReport rep;
  for (uint8_t g : seq.gens) ++rep.generator_histogram[g];

  const uint64_t space = factorial(n);
  std::vector<uint64_t> bm((space + 63) / 64, 0);
  auto bit = [&](uint64_t r) { return (bm[r >> 6] >> (r & 63)) & uint64_t(1); };
  auto set_bit = [&](uint64_t r) { bm[r >> 6] |= uint64_t(1) << (r & 63); };

  // Pass 1: mark every visited vertex, collecting repeat visits and, in
  // An mode, vertices of the wrong parity.
  std::vector<std::pair<uint64_t, uint64_t>> dup_events;  // (rank, later step)
  std::vector<uint64_t> odd_steps;
  bool has_dup = false, has_odd = false;
  bool even_now = is_even(seq.start);
  Perm cur = seq.start;
  auto visit = [&](uint64_t t) {
    uint64_t r = rank_sn(cur);
    if (bit(r)) {
      has_dup = true;
      if (dup_events.size() < kEventCap) dup_events.push_back({r, t});
    } else {
      set_bit(r);
    }
    if (!even_now) {
      has_odd = true;
      if (mode == WalkMode::An && odd_steps.size() < kEventCap) odd_steps.push_back(t);
    }
  };
  for (uint64_t t = 0; t < L; ++t) {
    visit(t);
    even_now ^= detail::parity_flips(seq.gens[t]);
    cur = apply_tau(cur, seq.gens[t]);
  }
  const bool closed = (L > 0 && cur == seq.start);
  if (L == 0) {
    visit(0);
    rep.length = 1;
  } else if (closed) {
    rep.length = L;
  } else {
    visit(L);  // an open walk's endpoint is a vertex in its own right
    rep.length = L + 1;
  }
  rep.is_cycle = closed;
  rep.is_hamiltonian_in_An = closed && !has_dup && !has_odd && L == half_factorial(n);

  // Pass 2: probe the n-1 flip neighbors of every visited vertex
  // against the bitmap. A hit means two vertices at Kendall distance 1.
  uint64_t weight[kMaxN];
  detail::fill_weights(n, weight);
  const uint64_t probe_count = (L == 0) ? 1 : (closed ? L : L + 1);
  std::vector<std::pair<uint64_t, uint64_t>> hits;  // (step, neighbor rank)
  bool has_kendall = false;
  cur = seq.start;
  for (uint64_t t = 0; t < probe_count; ++t) {
    detail::RankedVertex rv = detail::rank_with_code(cur, weight);
    for (int i = 0; i + 1 < n; ++i) {
      uint64_t nr = detail::neighbor_rank(rv, cur, i, weight);
      if (bit(nr)) {
        has_kendall = true;
        if (hits.size() < kEventCap) hits.push_back({t, nr});
      }
    }
    if (t < L) cur = apply_tau(cur, seq.gens[t]);
  }
  rep.min_pairwise_kendall_ok = !has_kendall;

  // Pass 3: resolve the first step index of every rank a detail entry
  // refers to, then emit the canonically ordered capped list.
  std::set<uint64_t> needed;
  for (const auto& [r, t] : dup_events) needed.insert(r);
  for (const auto& [t, r] : hits) needed.insert(r);
  std::map<uint64_t, uint64_t> first_pos;
  if (!needed.empty()) {
    cur = seq.start;
    for (uint64_t t = 0; t < probe_count && first_pos.size() < needed.size(); ++t) {
      uint64_t r = rank_sn(cur);
      if (needed.count(r) && !first_pos.count(r)) first_pos[r] = t;
      if (t < L) cur = apply_tau(cur, seq.gens[t]);
    }
  }
  std::vector<SnakeViolation> out;
  for (const auto& [r, t] : dup_events)
    out.push_back({first_pos[r], t, "vertex revisited"});
  for (uint64_t t : odd_steps) out.push_back({t, t, "odd permutation"});
  std::set<std::pair<uint64_t, uint64_t>> seen_pair;
  for (const auto& [t, r] : hits) {
    uint64_t o = first_pos[r];
    uint64_t a = std::min(t, o), b = std::max(t, o);
    if (seen_pair.insert({a, b}).second)
      out.push_back({a, b, "kendall distance 1"});
  }
  std::sort(out.begin(), out.end(), [](const SnakeViolation& x, const SnakeViolation& y) {
    return std::tie(x.a, x.b, x.reason) < std::tie(y.a, y.b, y.reason);
  });
  if (out.size() > kDetailCap) out.resize(kDetailCap);
  rep.violations = std::move(out);
  return rep;
}

}  // namespace rankgray
