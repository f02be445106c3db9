#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rankgray/perm.hpp"

namespace rankgray {

// A closed generator walk: starting at `start`, apply tau_gens[0],
// tau_gens[1], ... in order. Most code produces walks that return to
// `start`, but the type itself does not promise closure; verifiers check.
struct GenSequence {
  int n = 0;
  Perm start;
  std::vector<uint8_t> gens;
};

// Site of a q-fold alternating cycle between tau_k and tau_l edges,
// q = |k-l|+1. The anchor is the vertex whose outgoing tau_l edge is
// the first one of the alternating cycle; the q vertices carrying
// cover-owned tau_k edges are anchor * (tau_l tau_k^-1)^t, t < q.
struct AlternatingSite {
  Perm anchor;
  int k = 0;
  int l = 0;
};

// Thrown when a linkage precondition fails, naming the first offending
// vertex and what was found there.
class link_error : public std::runtime_error {
 public:
  link_error(const Perm& vertex, int expected, int found);
  Perm vertex;
  int expected;
  int found;
};

// A cycle cover of A_n drawn with jump-to-front edges: entry r is the
// generator index assigned to the vertex unrank_even(r). Totality plus
// injectivity of the induced successor map make it a disjoint union of
// directed cycles covering all of A_n.
class SuccessorCover {
 public:
  // Validates: every entry an odd index in [3, n], successor map injective.
  SuccessorCover(int n, std::vector<uint8_t> succ);

  // Assign tau_k everywhere. Cycles are the cosets of <tau_k>, so there
  // are |A_n| / k of them, each of length k.
  static SuccessorCover single_generator(int n, int k);

  // Rebuild a cover from disjoint closed walks that together visit every
  // even permutation exactly once.
  static SuccessorCover from_sequences(int n, const std::vector<GenSequence>& seqs);

  int n() const { return n_; }
  uint64_t size() const { return succ_.size(); }
  int at(uint64_t even_rank) const { return succ_[even_rank]; }
  const std::vector<uint8_t>& raw() const { return succ_; }
  bool operator==(const SuccessorCover&) const = default;

  uint64_t count_cycles() const;
  // Multiset of cycle lengths, sorted ascending.
  std::vector<uint64_t> cycle_lengths() const;

  // Canonical decomposition: one walk per cycle, each starting at the
  // cycle's minimum even rank, cycles ordered by that rank.
  std::vector<GenSequence> to_sequences() const;

  // Replace the q tau_k edges of the alternating cycle at `site` with its
  // q tau_l edges. If the q deleted edges lay on q distinct cycles this
  // merges them into one (count change -(q-1)); in every case the parity
  // of the cycle count is preserved since q is odd.
  SuccessorCover three_fold_link(const AlternatingSite& site) const;

  // The length-12 alternating cycle tied to the order-2 relation
  // tau_n tau_{n-2}^-1 tau_n tau_{n-4}^-1 tau_n tau_{n-4}^-1: replace its
  // two tau_{n-2} and four tau_{n-4} edges with six tau_n edges. Merges
  // six distinct cycles into one (count change -5, parity flips).
  SuccessorCover six_fold_link(const Perm& anchor) const;

  // Inverse surgery: replace the six tau_n edges of the same alternating
  // cycle with the tau_{n-2}/tau_{n-4} pattern.
  SuccessorCover six_fold_unlink(const Perm& anchor) const;

 private:
  struct Unchecked {};
  SuccessorCover(int n, std::vector<uint8_t> succ, Unchecked);
  void validate() const;
  SuccessorCover six_fold_swap(const Perm& anchor, bool forward) const;

  int n_;
  std::vector<uint8_t> succ_;
};

}  // namespace rankgray
