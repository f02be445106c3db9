#pragma once

#include <cstdint>

#include "rankgray/cover.hpp"

namespace rankgray {

// Parity obstruction for Hamiltonian cycles on a two-generator Cayley
// digraph of a group G with generators a, b: if ord(a b^-1) is odd and
// |G| / ord(a) is even, no Hamiltonian cycle exists. order_a must
// divide group_size.
bool rankin_excludes(uint64_t group_size, uint64_t order_a, uint64_t order_ab_inv);

// Ceiling for snake length on n symbols: the even permutations form a
// maximum independent set of the flip graph, so no snake can beat n!/2.
uint64_t upper_bound(int n);

// A 315-step closed snake through S_6 built from a 105-step pattern
// traversed three times; the pattern's displacement has order 3.
GenSequence m6_cycle();

}  // namespace rankgray
