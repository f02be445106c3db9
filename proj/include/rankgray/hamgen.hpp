#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rankgray/cover.hpp"
#include "rankgray/hypergraph.hpp"
#include "rankgray/perm.hpp"

namespace rankgray {

// Requested n is structurally valid but outside what this build can or
// will construct (below 7, above the configured ceiling, or a case with
// no Hamiltonian cycle at all).
class unsupported_n : public std::runtime_error {
 public:
  explicit unsupported_n(const std::string& what) : std::runtime_error(what) {}
};

// Ceiling for generate(), default 11, overridable through the
// RANKGRAY_MAX_N environment variable. Everything beyond 11 is far past
// workstation scale; the override exists for machines with the memory.
int configured_max_n();

// Successor rule table for the hand-built A_7 cycle. Cells: 0 matches
// anything, +v matches exactly v, -v matches anything except v.
struct A7Pattern {
  std::array<int8_t, 7> cells;
};
struct A7Row {
  std::vector<A7Pattern> patterns;
  int gen;
};

// Rows checked in order, first match wins; no match means tau_7.
const std::vector<A7Row>& a7_rules();
bool a7_pattern_matches(const A7Pattern& pat, const Perm& p);
int a7_successor(const Perm& p);

// Walk the rule table from the identity: a directed Hamiltonian cycle of
// A_7 (2520 steps) containing tau_5 edges. Throws if the table fails to
// produce one.
GenSequence base_case_a7();

// For a Hamiltonian cycle of A_m: position of a vertex whose last entry
// is i and whose outgoing edge is tau_m, for every i in [m]. Indexed by
// element, entry [0] unused.
std::vector<int64_t> penultimate_table(const GenSequence& cycle);

// The open list L[tau_k]: rotate the cycle to start just after its first
// tau_k edge and omit that edge. The m-1 remaining generators compose to
// tau_k^-1.
std::vector<uint8_t> rotate_cut(const GenSequence& cycle, int k);

// One induction stage, from a Hamiltonian cycle of A_{n-2} to one of
// A_n, driveable splice by splice for inspection. The cover starts
// empty, run_step0 lays the six suffix classes of the fused 6-edge, and
// each splice consumes the next 3-edge of the hypergraph ordering,
// converting one tau_{n-2} edge of the partial cover into a detour
// through the edge's two uncovered classes.
class InductiveStepper {
 public:
  explicit InductiveStepper(const GenSequence& prev);

  int n() const { return n_; }
  const std::vector<Hyperedge>& hyperedges() const { return order_; }
  size_t splices_total() const { return order_.size() - 1; }
  size_t splices_done() const { return done_; }

  void run_step0();
  void splice_next();
  GenSequence extract() const;

  // 0 means unassigned; indexed by even rank
  const std::vector<uint8_t>& cover_raw() const { return cover_; }

 private:
  Perm embed(const Perm& p) const;
  Perm lay_path(const Perm& start, int k);

  int n_;
  uint64_t m_;
  std::vector<uint8_t> gens_;
  std::vector<Perm> walk_;
  std::vector<int64_t> pen_;
  int64_t cut_n2_;
  int64_t cut_n4_;
  std::vector<Hyperedge> order_;
  std::vector<uint8_t> cover_;
  std::vector<Perm> class_p0_;
  std::vector<bool> class_covered_;
  size_t done_ = 0;
  bool step0_done_ = false;
};

GenSequence inductive_step(const GenSequence& prev);

// Hamiltonian snake cycle of A_n for odd n >= 7: the A_7 base case
// chained through induction stages.
GenSequence generate(int n);

}  // namespace rankgray
