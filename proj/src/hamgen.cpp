#include "rankgray/hamgen.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rankgray {

int configured_max_n() {
  if (const char* env = std::getenv("RANKGRAY_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 7 && v <= kMaxN) return static_cast<int>(v);
  }
  return 11;
}

const std::vector<A7Row>& a7_rules() {
  static const std::vector<A7Row> rows = {
      {{{{6, -7, -7, -7, 0, 0, 0}}, {{-7, -7, -7, 6, 0, 0, 0}}}, 5},
      {{{{6, 7, 0, 0, 0, 0, 0}}, {{7, 6, 0, 0, 0, 0, 0}}}, 3},
      {{{{5, 6, 7, -1, 0, 0, 0}}, {{5, 7, 6, 0, 0, 0, 0}}}, 5},
      {{{{2, 5, 6, 7, 0, 0, 0}}, {{4, 5, 7, 6, 0, 0, 0}}}, 5},
      {{{{5, 6, 7, 1, 2, 3, 4}},
        {{5, 6, 1, 2, 3, 4, 7}},
        {{5, 6, 2, 3, 7, 1, 4}},
        {{5, 6, 3, 7, 1, 4, 2}}},
       3},
      {{{{5, 6, 2, 3, 4, 7, 1}}, {{5, 6, 7, 1, 4, 2, 3}}}, 5},
  };
  return rows;
}

bool a7_pattern_matches(const A7Pattern& pat, const Perm& p) {
  for (int i = 0; i < 7; ++i) {
    int8_t c = pat.cells[i];
    if (c == 0) continue;
    if (c > 0 && p.v[i] != c) return false;
    if (c < 0 && p.v[i] == -c) return false;
  }
  return true;
}

int a7_successor(const Perm& p) {
  if (p.n != 7) throw std::invalid_argument("a7_successor: needs a permutation of size 7");
  for (const A7Row& row : a7_rules())
    for (const A7Pattern& pat : row.patterns)
      if (a7_pattern_matches(pat, p)) return row.gen;
  return 7;
}

GenSequence base_case_a7() {
  const uint64_t total = half_factorial(7);
  GenSequence seq;
  seq.n = 7;
  seq.start = Perm::identity(7);
  seq.gens.reserve(total);
  std::vector<bool> seen(total, false);
  Perm cur = seq.start;
  bool saw_5 = false;
  for (uint64_t step = 0; step < total; ++step) {
    uint64_t r = rank_even(cur);
    if (seen[r]) throw std::logic_error("base_case_a7: walk revisits a vertex early");
    seen[r] = true;
    int g = a7_successor(cur);
    saw_5 |= (g == 5);
    seq.gens.push_back(static_cast<uint8_t>(g));
    cur = apply_tau(cur, g);
  }
  if (!(cur == seq.start)) throw std::logic_error("base_case_a7: rule table fails to close the cycle");
  if (!saw_5) throw std::logic_error("base_case_a7: cycle is missing tau_5 edges");
  return seq;
}

std::vector<int64_t> penultimate_table(const GenSequence& cycle) {
  int m = cycle.n;
  uint64_t total = half_factorial(m);
  if (cycle.gens.size() != total)
    throw std::invalid_argument("penultimate_table: walk length is not |A_n|");
  std::vector<bool> seen(total, false);
  std::vector<int64_t> pos(m + 1, -1);
  Perm cur = cycle.start;
  for (uint64_t p = 0; p < total; ++p) {
    uint64_t r = rank_even(cur);
    if (seen[r]) throw std::invalid_argument("penultimate_table: walk is not a Hamiltonian cycle");
    seen[r] = true;
    if (cycle.gens[p] == m && pos[cur.v[m - 1]] < 0) pos[cur.v[m - 1]] = static_cast<int64_t>(p);
    cur = apply_tau(cur, cycle.gens[p]);
  }
  if (!(cur == cycle.start))
    throw std::invalid_argument("penultimate_table: walk is not a Hamiltonian cycle");
  for (int i = 1; i <= m; ++i)
    if (pos[i] < 0)
      throw std::invalid_argument("penultimate_table: no tau_n vertex ends in " +
                                  std::to_string(i));
  return pos;
}

std::vector<uint8_t> rotate_cut(const GenSequence& cycle, int k) {
  auto it = std::find(cycle.gens.begin(), cycle.gens.end(), static_cast<uint8_t>(k));
  if (it == cycle.gens.end())
    throw std::invalid_argument("rotate_cut: cycle contains no tau_" + std::to_string(k) +
                                " edge");
  size_t c = static_cast<size_t>(it - cycle.gens.begin());
  size_t m = cycle.gens.size();
  std::vector<uint8_t> out;
  out.reserve(m - 1);
  for (size_t j = 1; j < m; ++j) out.push_back(cycle.gens[(c + j) % m]);
  return out;
}

InductiveStepper::InductiveStepper(const GenSequence& prev) : n_(prev.n + 2) {
  if (prev.n < 7 || prev.n % 2 == 0)
    throw std::invalid_argument("inductive step: previous cycle must be A_m for odd m >= 7");
  if (n_ > kMaxN) throw std::invalid_argument("inductive step: resulting n exceeds kMaxN");
  m_ = half_factorial(prev.n);
  gens_ = prev.gens;

  // Embedded walk of the previous cycle, fixing the last two positions.
  walk_.reserve(m_);
  Perm cur = embed(prev.start);
  for (uint64_t t = 0; t < m_; ++t) {
    walk_.push_back(cur);
    cur = apply_tau(cur, gens_[t]);
  }
  if (!(cur == walk_.front()))
    throw std::invalid_argument("inductive step: previous walk does not close");

  pen_ = penultimate_table(prev);

  auto first_of = [this](int k) {
    auto it = std::find(gens_.begin(), gens_.end(), static_cast<uint8_t>(k));
    if (it == gens_.end())
      throw std::invalid_argument("inductive step: previous cycle has no tau_" +
                                  std::to_string(k) + " edge");
    return static_cast<int64_t>(it - gens_.begin());
  };
  cut_n2_ = first_of(n_ - 2);
  cut_n4_ = first_of(n_ - 4);

  order_ = order_hyperedges(
      build_connected(n_, {n_ - 4, n_ - 3, n_ - 2, n_ - 1, n_}));

  cover_.assign(half_factorial(n_), 0);
  class_p0_.assign(static_cast<size_t>(n_) * n_, Perm{});
  class_covered_.assign(static_cast<size_t>(n_) * n_, false);
}

Perm InductiveStepper::embed(const Perm& p) const {
  Perm q;
  q.n = static_cast<uint8_t>(n_);
  for (int i = 0; i < p.n; ++i) q.v[i] = p.v[i];
  for (int i = p.n; i < n_; ++i) q.v[i] = static_cast<uint8_t>(i + 1);
  return q;
}

// Lay the open path L[tau_k] from `start`, writing one cover entry per
// vertex except the endpoint, whose edge the caller chooses. Records the
// coset representative of the class so splice targets can be found later.
Perm InductiveStepper::lay_path(const Perm& start, int k) {
  int64_t c = (k == n_ - 2) ? cut_n2_ : cut_n4_;
  size_t cls = static_cast<size_t>(start.v[n_ - 2] - 1) * n_ + (start.v[n_ - 1] - 1);
  if (class_covered_[cls]) throw std::logic_error("lay_path: class already covered");
  class_covered_[cls] = true;
  class_p0_[cls] = compose(start, inverse(walk_[(c + 1) % m_]));

  Perm cur = start;
  for (uint64_t j = 1; j < m_; ++j) {
    uint64_t t = (static_cast<uint64_t>(c) + j) % m_;
    uint64_t r = rank_even(cur);
    if (cover_[r]) throw std::logic_error("lay_path: vertex already assigned");
    cover_[r] = gens_[t];
    cur = apply_tau(cur, gens_[t]);
  }
  return cur;
}

void InductiveStepper::run_step0() {
  if (step0_done_) throw std::logic_error("run_step0: already done");
  const int kseq[6] = {n_ - 2, n_ - 4, n_ - 4, n_ - 2, n_ - 4, n_ - 4};
  Perm cur = Perm::identity(n_);
  for (int k : kseq) {
    uint64_t r = rank_even(cur);
    if (cover_[r]) throw std::logic_error("run_step0: vertex already assigned");
    cover_[r] = static_cast<uint8_t>(n_);
    cur = apply_tau(cur, n_);
    cur = lay_path(cur, k);
  }
  if (!(cur == Perm::identity(n_)))
    throw std::logic_error("run_step0: the order-2 relation failed to close the double block");
  // the six classes laid must be exactly the 6-edge of the hypergraph
  for (const PairV& p : order_[0])
    if (!class_covered_[static_cast<size_t>(p.a - 1) * n_ + (p.b - 1)])
      throw std::logic_error("run_step0: covered classes do not match the 6-edge");
  step0_done_ = true;
}

void InductiveStepper::splice_next() {
  if (!step0_done_) throw std::logic_error("splice_next: run_step0 first");
  if (done_ >= splices_total()) throw std::logic_error("splice_next: nothing left to splice");
  const Hyperedge& h = order_[done_ + 1];

  // Rotate the triple so the already covered pair sits in the (b, c)
  // slot; a is then the element the splice target must show third from
  // the end.
  auto [p, q, r] = canonical_triple(h);
  int a, b, c;
  auto covered = [this](int u, int v) {
    return class_covered_[static_cast<size_t>(u - 1) * n_ + (v - 1)];
  };
  if (covered(q, r) && !covered(r, p) && !covered(p, q)) {
    a = p, b = q, c = r;
  } else if (covered(r, p) && !covered(p, q) && !covered(q, r)) {
    a = q, b = r, c = p;
  } else if (covered(p, q) && !covered(q, r) && !covered(r, p)) {
    a = r, b = p, c = q;
  } else {
    throw std::logic_error("splice_next: edge does not touch the covered region in one pair");
  }

  const Perm& p0 = class_p0_[static_cast<size_t>(b - 1) * n_ + (c - 1)];
  int xhat = inverse(p0).v[a - 1];
  if (xhat > n_ - 2) throw std::logic_error("splice_next: target element not in the subcycle");
  int64_t pos = pen_[xhat];
  Perm vhat = compose(p0, walk_[pos]);
  uint64_t rhat = rank_even(vhat);
  if (cover_[rhat] != n_ - 2)
    throw std::logic_error("splice_next: splice target vertex is not assigned tau_{n-2}");

  Perm old_next = apply_tau(vhat, n_ - 2);
  cover_[rhat] = static_cast<uint8_t>(n_);

  Perm s1 = apply_tau(vhat, n_);
  if (s1.v[n_ - 2] != a || s1.v[n_ - 1] != b)
    throw std::logic_error("splice_next: first detour class mismatch");
  Perm e1 = lay_path(s1, n_ - 2);
  uint64_t re1 = rank_even(e1);
  if (cover_[re1]) throw std::logic_error("splice_next: endpoint already assigned");
  cover_[re1] = static_cast<uint8_t>(n_);

  Perm s2 = apply_tau(e1, n_);
  if (s2.v[n_ - 2] != c || s2.v[n_ - 1] != a)
    throw std::logic_error("splice_next: second detour class mismatch");
  Perm e2 = lay_path(s2, n_ - 2);
  uint64_t re2 = rank_even(e2);
  if (cover_[re2]) throw std::logic_error("splice_next: endpoint already assigned");
  cover_[re2] = static_cast<uint8_t>(n_);

  // (tau_n tau_{n-2}^-1)^3 = id, so the third tau_n edge must return to
  // the old successor of the splice target.
  if (!(apply_tau(e2, n_) == old_next))
    throw std::logic_error("splice_next: detour does not rejoin the cycle");

  ++done_;
}

GenSequence InductiveStepper::extract() const {
  if (done_ != splices_total()) throw std::logic_error("extract: splices remaining");
  uint64_t total = half_factorial(n_);
  GenSequence seq;
  seq.n = n_;
  seq.start = Perm::identity(n_);
  seq.gens.reserve(total);
  Perm cur = seq.start;
  for (uint64_t step = 0; step < total; ++step) {
    uint64_t r = rank_even(cur);
    uint8_t g = cover_[r];
    if (!g) throw std::logic_error("extract: cover is not total");
    seq.gens.push_back(g);
    cur = apply_tau(cur, g);
    if (cur == seq.start && step + 1 < total)
      throw std::logic_error("extract: cover is not a single cycle");
  }
  if (!(cur == seq.start)) throw std::logic_error("extract: walk does not close");
  if (std::find(seq.gens.begin(), seq.gens.end(), static_cast<uint8_t>(n_ - 2)) ==
      seq.gens.end())
    throw std::logic_error("extract: result is missing tau_{n-2} edges");
  return seq;
}

GenSequence inductive_step(const GenSequence& prev) {
  InductiveStepper st(prev);
  st.run_step0();
  while (st.splices_done() < st.splices_total()) st.splice_next();
  return st.extract();
}

GenSequence generate(int n) {
  if (n < 1) throw std::invalid_argument("generate: n must be positive");
  if (n % 2 == 0)
    throw std::invalid_argument(
        "generate: n must be odd (jump-to-front generators of even length are odd "
        "permutations)");
  if (n == 5)
    throw unsupported_n(
        "no directed Hamiltonian cycle of A_5 on {tau_3, tau_5} exists (order of "
        "tau_5 tau_3^-1 is odd while |A_5|/3 is even), so n = 5 cannot be generated");
  if (n < 7) throw unsupported_n("generate: supported range starts at n = 7");
  int ceiling = configured_max_n();
  if (n > ceiling)
    throw unsupported_n("generate: n = " + std::to_string(n) + " exceeds the ceiling of " +
                        std::to_string(ceiling) + " (set RANKGRAY_MAX_N to raise it)");
  GenSequence seq = base_case_a7();
  for (int m = 9; m <= n; m += 2) seq = inductive_step(seq);
  return seq;
}

}  // namespace rankgray
