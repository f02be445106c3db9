#include "rankgray/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "verify_common.hpp"

namespace rankgray {

namespace {

struct Frame {
  Perm v;
  uint64_t rank;
  uint32_t gi;        // next generator index to try
  uint8_t entry_gen;  // generator that led here (0 at the root)
};

struct Dfs {
  int n;
  std::vector<int> gens;
  uint64_t weight[kMaxN];
  std::vector<uint64_t> visited;
  std::vector<uint8_t> forbid;  // visited flip-neighbors per vertex
  std::vector<Frame> st;
  uint64_t nodes = 1;  // the root counts
  uint64_t best = 0;
  std::vector<uint8_t> best_gens;
  bool aborted = false;
  bool done = false;
  uint64_t max_possible;
  uint64_t budget_nodes;
  double budget_seconds;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  bool bit(uint64_t r) const { return (visited[r >> 6] >> (r & 63)) & 1u; }

  void mark(const Perm& p, uint64_t r, int dir) {
    if (dir > 0)
      visited[r >> 6] |= uint64_t(1) << (r & 63);
    else
      visited[r >> 6] &= ~(uint64_t(1) << (r & 63));
    detail::RankedVertex rv = detail::rank_with_code(p, weight);
    for (int i = 0; i + 1 < n; ++i) {
      uint64_t nr = detail::neighbor_rank(rv, p, i, weight);
      forbid[nr] = static_cast<uint8_t>(forbid[nr] + dir);
    }
  }

  bool over_budget() {
    if (budget_nodes && nodes >= budget_nodes) return true;
    if (budget_seconds > 0 && (nodes & 1023) == 0) {
      auto el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
      if (el.count() >= budget_seconds) return true;
    }
    return false;
  }

  void record_cycle(uint8_t closing) {
    uint64_t len = st.size();
    if (len <= best) return;
    best = len;
    best_gens.clear();
    for (size_t i = 1; i < st.size(); ++i) best_gens.push_back(st[i].entry_gen);
    best_gens.push_back(closing);
    if (best == max_possible) done = true;
  }

  void run() {
    const Perm id = Perm::identity(n);
    const uint64_t root_rank = rank_sn(id);
    mark(id, root_rank, +1);
    st.push_back({id, root_rank, 0, 0});
    while (!st.empty() && !done && !aborted) {
      Frame& f = st.back();
      if (f.gi >= gens.size()) {
        mark(f.v, f.rank, -1);
        st.pop_back();
        continue;
      }
      int g = gens[f.gi++];
      Perm nxt = apply_tau(f.v, g);
      if (nxt == id) {
        record_cycle(static_cast<uint8_t>(g));
        continue;
      }
      uint64_t r = rank_sn(nxt);
      if (bit(r) || forbid[r]) continue;
      if (over_budget()) {
        aborted = true;
        continue;
      }
      ++nodes;
      mark(nxt, r, +1);
      st.push_back({nxt, r, 0, static_cast<uint8_t>(g)});
    }
  }
};

}  // namespace

SearchResult longest_snake(int n, const std::vector<int>& gens,
                           const SearchBudget& budget) {
  if (n < 2 || n > 12)
    throw std::invalid_argument("longest_snake: n must be in 2..12");
  if (gens.empty()) throw std::invalid_argument("longest_snake: no generators");
  for (int g : gens)
    if (g < 2 || g > n)
      throw std::invalid_argument("longest_snake: generator index outside 2..n");
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] == gens[j])
        throw std::invalid_argument("longest_snake: duplicate generator");

  Dfs d;
  d.n = n;
  d.gens = gens;
  detail::fill_weights(n, d.weight);
  const uint64_t space = factorial(n);
  d.visited.assign((space + 63) / 64, 0);
  d.forbid.assign(space, 0);
  d.max_possible = half_factorial(n);
  d.budget_nodes = budget.max_nodes;
  d.budget_seconds = budget.max_seconds;
  d.run();

  SearchResult res;
  res.best_length = d.best;
  res.witness.n = n;
  res.witness.start = Perm::identity(n);
  res.witness.gens = std::move(d.best_gens);
  res.exact = d.done || !d.aborted;
  res.nodes = d.nodes;
  return res;
}

}  // namespace rankgray
