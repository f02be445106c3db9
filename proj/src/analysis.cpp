#include "rankgray/analysis.hpp"

#include <stdexcept>
#include <string>

#include "rankgray/perm.hpp"

namespace rankgray {

bool rankin_excludes(uint64_t group_size, uint64_t order_a, uint64_t order_ab_inv) {
  if (group_size == 0 || order_a == 0 || order_ab_inv == 0)
    throw std::invalid_argument("rankin_excludes: orders must be positive");
  if (group_size % order_a != 0)
    throw std::invalid_argument("rankin_excludes: order_a must divide group_size");
  return (order_ab_inv % 2 == 1) && ((group_size / order_a) % 2 == 0);
}

uint64_t upper_bound(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("upper_bound: n must be in 1..20");
  return half_factorial(n);
}

GenSequence m6_cycle() {
  // One period of the cycle, as generator digits. Its displacement g
  // satisfies g^3 = id, so three traversals close up.
  static const char* const kPeriod =
      "6455353355553555355533555535555355535555335553555533"
      "64555335355335533535553555535553555335555355535555335";

  GenSequence seq;
  seq.n = 6;
  seq.start = Perm::identity(6);
  Perm shift = Perm::identity(6);
  for (const char* p = kPeriod; *p; ++p) {
    int g = *p - '0';
    if (g < 3 || g > 6) throw std::logic_error("m6_cycle: bad generator digit");
    shift = apply_tau(shift, g);
  }
  size_t period_len = std::string(kPeriod).size();
  if (period_len != 105) throw std::logic_error("m6_cycle: period length is off");
  if (shift == Perm::identity(6))
    throw std::logic_error("m6_cycle: period must displace, not close");
  if (!(compose(shift, compose(shift, shift)) == Perm::identity(6)))
    throw std::logic_error("m6_cycle: period displacement must have order 3");

  seq.gens.reserve(3 * period_len);
  for (int rep = 0; rep < 3; ++rep)
    for (const char* p = kPeriod; *p; ++p)
      seq.gens.push_back(static_cast<uint8_t>(*p - '0'));
  return seq;
}

}  // namespace rankgray
