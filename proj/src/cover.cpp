#include "rankgray/cover.hpp"

#include <algorithm>
#include <sstream>

namespace rankgray {

static std::string link_message(const Perm& vertex, int expected, int found) {
  std::ostringstream os;
  os << "linkage precondition failed at vertex [" << vertex.str() << "]: expected tau_"
     << expected << ", cover assigns tau_" << found;
  return os.str();
}

link_error::link_error(const Perm& v, int exp, int fnd)
    : std::runtime_error(link_message(v, exp, fnd)), vertex(v), expected(exp), found(fnd) {}

SuccessorCover::SuccessorCover(int n, std::vector<uint8_t> succ, Unchecked)
    : n_(n), succ_(std::move(succ)) {}

SuccessorCover::SuccessorCover(int n, std::vector<uint8_t> succ) : n_(n), succ_(std::move(succ)) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("cover: n out of range");
  if (succ_.size() != half_factorial(n)) throw std::invalid_argument("cover: wrong size");
  validate();
}

void SuccessorCover::validate() const {
  for (uint64_t r = 0; r < succ_.size(); ++r) {
    int k = succ_[r];
    if (k < 3 || k > n_ || k % 2 == 0)
      throw std::invalid_argument("cover: entry " + std::to_string(r) +
                                  " is not an odd generator index in [3, n]");
  }
  // Injectivity of r -> rank(unrank(r) * tau_succ[r]). Totality plus
  // injectivity means every vertex also has exactly one incoming edge.
  std::vector<uint8_t> indeg(succ_.size(), 0);
  for (uint64_t r = 0; r < succ_.size(); ++r) {
    uint64_t t = rank_even(apply_tau(unrank_even(r, n_), succ_[r]));
    if (indeg[t]++)
      throw std::invalid_argument("cover: vertex at even rank " + std::to_string(t) +
                                  " has two incoming edges");
  }
}

SuccessorCover SuccessorCover::single_generator(int n, int k) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("cover: n out of range");
  if (k < 3 || k > n || k % 2 == 0)
    throw std::invalid_argument("cover: generator index must be odd and in [3, n]");
  return SuccessorCover(n, std::vector<uint8_t>(half_factorial(n), static_cast<uint8_t>(k)),
                        Unchecked{});
}

SuccessorCover SuccessorCover::from_sequences(int n, const std::vector<GenSequence>& seqs) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("cover: n out of range");
  uint64_t total = half_factorial(n);
  std::vector<uint8_t> succ(total, 0);
  for (const GenSequence& s : seqs) {
    if (s.n != n) throw std::invalid_argument("from_sequences: size mismatch");
    if (s.gens.empty()) throw std::invalid_argument("from_sequences: empty walk");
    Perm cur = s.start;
    for (uint8_t g : s.gens) {
      uint64_t r = rank_even(cur);
      if (succ[r]) throw std::invalid_argument("from_sequences: walks overlap");
      succ[r] = g;
      cur = apply_tau(cur, g);
    }
    if (!(cur == s.start)) throw std::invalid_argument("from_sequences: walk does not close");
  }
  for (uint64_t r = 0; r < total; ++r)
    if (!succ[r]) throw std::invalid_argument("from_sequences: cover not total");
  return SuccessorCover(n, std::move(succ));
}

uint64_t SuccessorCover::count_cycles() const { return cycle_lengths().size(); }

std::vector<uint64_t> SuccessorCover::cycle_lengths() const {
  std::vector<bool> seen(succ_.size(), false);
  std::vector<uint64_t> lengths;
  for (uint64_t r0 = 0; r0 < succ_.size(); ++r0) {
    if (seen[r0]) continue;
    uint64_t len = 0;
    Perm cur = unrank_even(r0, n_);
    uint64_t r = r0;
    do {
      seen[r] = true;
      ++len;
      cur = apply_tau(cur, succ_[r]);
      r = rank_even(cur);
    } while (r != r0);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<GenSequence> SuccessorCover::to_sequences() const {
  std::vector<bool> seen(succ_.size(), false);
  std::vector<GenSequence> out;
  for (uint64_t r0 = 0; r0 < succ_.size(); ++r0) {
    if (seen[r0]) continue;
    GenSequence s;
    s.n = n_;
    s.start = unrank_even(r0, n_);
    Perm cur = s.start;
    uint64_t r = r0;
    do {
      seen[r] = true;
      s.gens.push_back(succ_[r]);
      cur = apply_tau(cur, succ_[r]);
      r = rank_even(cur);
    } while (r != r0);
    out.push_back(std::move(s));
  }
  return out;
}

SuccessorCover SuccessorCover::three_fold_link(const AlternatingSite& site) const {
  int k = site.k, l = site.l;
  if (k < 3 || k > n_ || k % 2 == 0 || l < 3 || l > n_ || l % 2 == 0 || k == l)
    throw std::invalid_argument("three_fold_link: k, l must be distinct odd indices in [3, n]");
  if (site.anchor.n != n_ || !is_even(site.anchor))
    throw std::invalid_argument("three_fold_link: anchor must be an even permutation of size n");
  int q = std::abs(k - l) + 1;

  // Sources of the cover-owned tau_k edges: anchor * (tau_l tau_k^-1)^t.
  // The replacement tau_l edge out of source t lands exactly where the
  // deleted tau_k edge out of source t+1 started from, so in-degrees are
  // conserved and the result is again a valid cover.
  std::vector<uint64_t> ranks(q);
  Perm cur = site.anchor;
  for (int t = 0; t < q; ++t) {
    ranks[t] = rank_even(cur);
    if (succ_[ranks[t]] != k) throw link_error(cur, k, succ_[ranks[t]]);
    cur = apply_tau_inv(apply_tau(cur, l), k);
  }
  if (!(cur == site.anchor))
    throw std::logic_error("three_fold_link: alternating cycle failed to close");

  std::vector<uint8_t> next = succ_;
  for (int t = 0; t < q; ++t) next[ranks[t]] = static_cast<uint8_t>(l);
  return SuccessorCover(n_, std::move(next), Unchecked{});
}

SuccessorCover SuccessorCover::six_fold_swap(const Perm& anchor, bool forward) const {
  if (n_ < 7) throw std::invalid_argument("six_fold_link: needs n >= 7");
  if (anchor.n != n_ || !is_even(anchor))
    throw std::invalid_argument("six_fold_link: anchor must be an even permutation of size n");

  // Walking the alternating 12-cycle by whole relation factors
  // tau_n tau_{kseq[t]}^-1 lands on the six vertices that own the
  // tau_{n-2}/tau_{n-4} edges; the factor used to arrive at a vertex is
  // also the label of its outgoing alternating edge.
  const int kseq[6] = {n_ - 2, n_ - 4, n_ - 4, n_ - 2, n_ - 4, n_ - 4};
  Perm cur = anchor;
  uint64_t ranks[6];
  int expected[6];
  for (int t = 0; t < 6; ++t) {
    cur = apply_tau_inv(apply_tau(cur, n_), kseq[t]);
    ranks[t] = rank_even(cur);
    expected[t] = kseq[t];
  }
  if (!(cur == anchor)) throw std::logic_error("six_fold_link: 12-cycle failed to close");

  std::vector<uint8_t> next = succ_;
  for (int t = 0; t < 6; ++t) {
    int want = forward ? expected[t] : n_;
    int put = forward ? n_ : expected[t];
    if (succ_[ranks[t]] != want)
      throw link_error(unrank_even(ranks[t], n_), want, succ_[ranks[t]]);
    next[ranks[t]] = static_cast<uint8_t>(put);
  }
  return SuccessorCover(n_, std::move(next), Unchecked{});
}

SuccessorCover SuccessorCover::six_fold_link(const Perm& anchor) const {
  return six_fold_swap(anchor, true);
}

SuccessorCover SuccessorCover::six_fold_unlink(const Perm& anchor) const {
  return six_fold_swap(anchor, false);
}

}  // namespace rankgray
