#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rankgray {

// Hard ceiling for the fixed-size permutation storage. 15! still fits in
// uint64 rank arithmetic with room to spare.
inline constexpr int kMaxN = 15;

// Permutation of {1..n} in one-line notation. v[i] holds the image of
// position i+1, values are 1-based like the usual written form, unused
// tail entries stay zero so default equality works.
//
// Composition convention throughout: (a*b)(i) = a(b(i)).
struct Perm {
  uint8_t n = 0;
  std::array<uint8_t, kMaxN> v{};

  static Perm identity(int n);
  static Perm of(std::initializer_list<int> vals);
  static Perm of(const std::vector<int>& vals);

  // 1-based accessor, p.at(i) = image of i.
  int at(int pos) const { return v[pos - 1]; }
  int size() const { return n; }

  bool operator==(const Perm&) const = default;
  std::string str() const;  // "7 1 2 3 4 5 6"
};

// Jump-to-front generator: tau_k sends the element in position k to
// position 1 and shifts positions 1..k-1 right by one. One-line form
// [k, 1, 2, ..., k-1, k+1, ..., n]. Requires 2 <= k <= n.
Perm make_tau(int k, int n);

Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

// p * tau_k and p * tau_k^-1 without materializing tau_k.
Perm apply_tau(const Perm& p, int k);
Perm apply_tau_inv(const Perm& p, int k);

// tau_l * tau_k^-1, the displacement between two jump-to-front moves.
// Its order as a group element is |k - l| + 1.
Perm ratio(int l, int k, int n);

int inversions(const Perm& p);
bool is_even(const Perm& p);
uint64_t order(const Perm& p);

// Number of adjacent transpositions needed to turn a into b, i.e. the
// inversion count of a^-1 * b. A right-invariant metric on S_n.
uint64_t kendall_distance(const Perm& a, const Perm& b);

// b differs from a by swapping the entries in positions i and i+1
// (1 <= i <= n-1). These are exactly the permutations at Kendall
// distance 1 from a.
Perm swap_adjacent(const Perm& p, int i);

uint64_t factorial(int n);
// |A_n|: n!/2 for n >= 2, and 1 for n in {0,1}.
uint64_t half_factorial(int n);

// Lexicographic rank within S_n (Lehmer code), 0-based.
uint64_t rank_sn(const Perm& p);
Perm unrank_sn(uint64_t r, int n);

// Rank among the even permutations in lexicographic order. The identity
// ranks 0. Throws if p is odd.
uint64_t rank_even(const Perm& p);
Perm unrank_even(uint64_t r, int n);

// Lehmer digits of p: code[i] = #{ j > i : v[j] < v[i] }, 0-based
// positions. Sum of digits gives the inversion count.
void lehmer_code(const Perm& p, std::array<uint8_t, kMaxN>& code);

}  // namespace rankgray
