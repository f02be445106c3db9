#include "rankgray/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rankgray {

static void check_n(int n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("permutation size out of range: " + std::to_string(n));
}

Perm Perm::identity(int n) {
  check_n(n);
  Perm p;
  p.n = static_cast<uint8_t>(n);
  for (int i = 0; i < n; ++i) p.v[i] = static_cast<uint8_t>(i + 1);
  return p;
}

static Perm from_range(const int* first, int n) {
  check_n(n);
  Perm p;
  p.n = static_cast<uint8_t>(n);
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    int x = first[i];
    if (x < 1 || x > n || (seen >> x) & 1u)
      throw std::invalid_argument("not a permutation of 1..n");
    seen |= 1u << x;
    p.v[i] = static_cast<uint8_t>(x);
  }
  return p;
}

Perm Perm::of(std::initializer_list<int> vals) {
  std::vector<int> tmp(vals);
  return from_range(tmp.data(), static_cast<int>(tmp.size()));
}

Perm Perm::of(const std::vector<int>& vals) {
  return from_range(vals.data(), static_cast<int>(vals.size()));
}

std::string Perm::str() const {
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    if (i) os << ' ';
    os << int(v[i]);
  }
  return os.str();
}

Perm make_tau(int k, int n) {
  check_n(n);
  if (k < 2 || k > n)
    throw std::invalid_argument("tau_k needs 2 <= k <= n, got k=" + std::to_string(k));
  Perm p;
  p.n = static_cast<uint8_t>(n);
  p.v[0] = static_cast<uint8_t>(k);
  for (int i = 1; i < k; ++i) p.v[i] = static_cast<uint8_t>(i);
  for (int i = k; i < n; ++i) p.v[i] = static_cast<uint8_t>(i + 1);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.n != b.n) throw std::invalid_argument("compose: size mismatch");
  Perm c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i) c.v[i] = a.v[b.v[i] - 1];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q;
  q.n = p.n;
  for (int i = 0; i < p.n; ++i) q.v[p.v[i] - 1] = static_cast<uint8_t>(i + 1);
  return q;
}

Perm apply_tau(const Perm& p, int k) {
  if (k < 2 || k > p.n) throw std::invalid_argument("apply_tau: bad k");
  Perm q;
  q.n = p.n;
  q.v[0] = p.v[k - 1];
  for (int i = 1; i < k; ++i) q.v[i] = p.v[i - 1];
  for (int i = k; i < p.n; ++i) q.v[i] = p.v[i];
  return q;
}

Perm apply_tau_inv(const Perm& p, int k) {
  if (k < 2 || k > p.n) throw std::invalid_argument("apply_tau_inv: bad k");
  Perm q;
  q.n = p.n;
  for (int i = 0; i + 1 < k; ++i) q.v[i] = p.v[i + 1];
  q.v[k - 1] = p.v[0];
  for (int i = k; i < p.n; ++i) q.v[i] = p.v[i];
  return q;
}

Perm ratio(int l, int k, int n) {
  return apply_tau_inv(make_tau(l, n), k);
}

int inversions(const Perm& p) {
  int cnt = 0;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (p.v[j] < p.v[i]) ++cnt;
  return cnt;
}

bool is_even(const Perm& p) { return inversions(p) % 2 == 0; }

uint64_t order(const Perm& p) {
  // lcm of cycle lengths
  uint64_t result = 1;
  uint16_t done = 0;
  for (int i = 0; i < p.n; ++i) {
    if ((done >> i) & 1) continue;
    uint64_t len = 0;
    int j = i;
    do {
      done |= static_cast<uint16_t>(1u << j);
      j = p.v[j] - 1;
      ++len;
    } while (j != i);
    result = std::lcm(result, len);
  }
  return result;
}

uint64_t kendall_distance(const Perm& a, const Perm& b) {
  return static_cast<uint64_t>(inversions(compose(inverse(a), b)));
}

Perm swap_adjacent(const Perm& p, int i) {
  if (i < 1 || i >= p.n) throw std::invalid_argument("swap_adjacent: bad position");
  Perm q = p;
  std::swap(q.v[i - 1], q.v[i]);
  return q;
}

uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

uint64_t half_factorial(int n) {
  if (n < 2) return 1;
  return factorial(n) / 2;
}

void lehmer_code(const Perm& p, std::array<uint8_t, kMaxN>& code) {
  for (int i = 0; i < p.n; ++i) {
    uint8_t c = 0;
    for (int j = i + 1; j < p.n; ++j)
      if (p.v[j] < p.v[i]) ++c;
    code[i] = c;
  }
}

uint64_t rank_sn(const Perm& p) {
  std::array<uint8_t, kMaxN> code;
  lehmer_code(p, code);
  uint64_t r = 0;
  uint64_t base = 1;
  // Horner evaluation from the right: digit i has weight (n-1-i)!.
  for (int i = p.n - 1; i >= 0; --i) {
    r += code[i] * base;
    base *= static_cast<uint64_t>(p.n - i);
  }
  return r;
}

Perm unrank_sn(uint64_t r, int n) {
  check_n(n);
  if (r >= factorial(n)) throw std::invalid_argument("unrank_sn: rank out of range");
  std::array<uint8_t, kMaxN> code{};
  for (int i = 0; i < n; ++i) {
    uint64_t w = factorial(n - 1 - i);
    code[i] = static_cast<uint8_t>(r / w);
    r %= w;
  }
  // code[i] is the index of v[i] among the values not yet used, in
  // increasing order.
  std::array<uint8_t, kMaxN> avail;
  for (int i = 0; i < n; ++i) avail[i] = static_cast<uint8_t>(i + 1);
  int left = n;
  Perm p;
  p.n = static_cast<uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    int idx = code[i];
    p.v[i] = avail[idx];
    for (int j = idx; j + 1 < left; ++j) avail[j] = avail[j + 1];
    --left;
  }
  return p;
}

uint64_t rank_even(const Perm& p) {
  if (!is_even(p)) throw std::invalid_argument("rank_even: permutation is odd");
  return rank_sn(p) / 2;
}

Perm unrank_even(uint64_t r, int n) {
  check_n(n);
  if (r >= half_factorial(n)) throw std::invalid_argument("unrank_even: rank out of range");
  Perm p = unrank_sn(2 * r, n);
  if (!is_even(p)) {
    // The lex-adjacent partner 2r+1 differs exactly by swapping the last
    // two entries and has opposite parity.
    std::swap(p.v[p.n - 2], p.v[p.n - 1]);
  }
  return p;
}

}  // namespace rankgray
