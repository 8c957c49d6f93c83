#pragma once

// Naive reference implementations used only by tests. Everything here
// works on materialized element sets with no canonicalization tricks, so
// it is slow but hard to get wrong.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Elem = std::pair<std::uint64_t, std::uint64_t>;
using ElemSet = std::vector<Elem>;  // sorted

// All cyclic order-m subgroups of Z_m x Z_m, deduplicated by element set.
std::vector<ElemSet> naive_subgroups(std::uint64_t m);

ElemSet swap_set(const ElemSet& s);

std::uint64_t naive_orbit_count(std::uint64_t m);

std::uint64_t naive_fixed_count(std::uint64_t m);

// Lexicographically least generator of the subgroup given as a set.
Elem naive_min_generator(std::uint64_t m, const ElemSet& s);

std::uint64_t naive_phi(std::uint64_t m);

}  // namespace oracle
