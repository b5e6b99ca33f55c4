#pragma once

#include <cstdint>

namespace asmo {

using Int128 = __int128;

// Ramanujan tau(n): coefficient of q^n in q * prod_{k>=1} (1 - q^k)^24.
//
// Backed by a process-wide table that grows on demand; safe to call from
// several threads.
Int128 ramanujan_tau(std::uint64_t n);

// Makes tau(1..n) available without further recomputation.
void reserve_ramanujan_tau(std::uint64_t n);

// tau(p) / p^{11/2}; lies in [-2, 2] for primes p by Deligne's bound.
double normalized_tau(std::uint64_t p);

}  // namespace asmo
