#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "redcyc/gl2.hpp"
#include "redcyc/numtheory.hpp"

// Brute-force verification oracles. Two layers:
//
//   * the diagonal model: cyclic subgroups of order m in Z_m x Z_m
//     (exponent coordinates of diagonal matrices), with swap-orbit counting
//     and a Burnside-style count over the two monomial cosets;
//
//   * the full matrix census: enumerate every cyclic subgroup of order m
//     in GL(2,q) and partition into conjugacy classes by orbit BFS.

namespace redcyc::census {

// ---------------------------------------------------------------------------
// Diagonal model on Z_m x Z_m.

// Canonical identity of a cyclic order-m subgroup of Z_m x Z_m: its
// lexicographically least generator pair.
struct DiagPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    friend auto operator<=>(const DiagPair&, const DiagPair&) = default;
};

// Orbit of the coordinate swap acting on subgroups: one or two members.
struct DiagOrbit {
    std::uint32_t size = 1;
    DiagPair members[2];
};

struct DiagModel {
    std::uint64_t count = 0;             // number of swap orbits
    std::uint64_t total_subgroups = 0;   // |{cyclic order-m subgroups}|
    std::uint64_t fixed_subgroups = 0;   // swap-fixed among them
    std::vector<DiagOrbit> orbits;       // sorted by first member
};

// Lexicographically least generator pair of <(a, b)>; throws InvalidInput
// unless the pair generates a subgroup of order exactly m.
DiagPair canonical_pair(std::uint64_t m, std::uint64_t a, std::uint64_t b);

// Canonical pair of the swapped subgroup <(b, a)>.
DiagPair swap_pair(std::uint64_t m, const DiagPair& s);

// All cyclic order-m subgroups as canonical pairs, ascending.
std::vector<DiagPair> diag_subgroups(std::uint64_t m);

// The m element pairs of <(a, b)>, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> diag_elements(std::uint64_t m,
                                                                   const DiagPair& s);

// Swap-orbit census with orbit descriptors.
DiagModel diagonal_model_classes(std::uint64_t m);

// Orbit count only (no descriptors); same enumeration.
std::uint64_t diagonal_model_count(std::uint64_t m);

// Number of cyclic order-m subgroups of Z_m x Z_m, by enumeration.
std::uint64_t diag_subgroup_total(std::uint64_t m);

// (|subgroups| + |swap-fixed subgroups|) / 2, both counted by direct
// enumeration. Independent of the closed-form involution count.
std::uint64_t burnside_count(std::uint64_t m);

struct FixedSubgroup {
    DiagPair subgroup;
    std::uint64_t l = 1;  // the unit with subgroup = <(1, l)>, l^2 = 1 (mod m)
};

// Swap-fixed subgroups with their exponents, ascending by l. Throws
// InternalError if a fixed subgroup is not of the form <(1, l)> with
// l^2 = 1 (mod m) or if two fixed subgroups share an l.
std::vector<FixedSubgroup> fix_swap_subgroups(std::uint64_t m);

// ---------------------------------------------------------------------------
// Full census over GL(2,q).

enum class SubgroupKind { scalar, split_reducible, irreducible };

struct ClassInfo {
    gl2::SubgroupKey representative;  // member with smallest min_generator
    std::uint64_t class_size = 1;
    SubgroupKind kind = SubgroupKind::scalar;
    std::vector<gl2::SubgroupKey> members;
};

struct CensusReport {
    std::uint64_t q = 0;
    std::uint64_t m = 1;
    std::uint64_t total_subgroups = 0;
    std::uint64_t reducible_classes = 0;
    std::uint64_t irreducible_classes = 0;
    std::vector<ClassInfo> classes;
    std::optional<std::uint64_t> formula_n;  // present iff m | q-1
    std::optional<bool> match;
};

inline constexpr std::uint64_t kEnumerationCap = 10'000'000;  // bound on q^4

// Every cyclic subgroup of order exactly m, found by scanning all
// invertible matrices; sorted by min_generator. Throws
// UnsupportedCharacteristic if p | m, ResourceLimit if q^4 exceeds cap.
std::vector<gl2::SubgroupKey> enumerate_cyclic_subgroups(const ff::FieldSpec& F, std::uint64_t m,
                                                         std::uint64_t cap = kEnumerationCap);

// Partition into conjugacy classes by orbit BFS over a generating set.
// Input subgroups must be pairwise distinct and closed under conjugation.
std::vector<ClassInfo> conjugacy_classes(const ff::FieldSpec& F,
                                         const std::vector<gl2::SubgroupKey>& subgroups);

// Census for a single (q, m); fills formula_n and match when m | q-1.
CensusReport census_for(const ff::FieldSpec& F, std::uint64_t m,
                        std::uint64_t cap = kEnumerationCap);

// True iff irreducible order-m subgroups exist exactly when m | q^2-1 and
// m does not divide q-1, and in that case they form a single class.
bool irreducible_class_check(const ff::FieldSpec& F, std::uint64_t m,
                             std::uint64_t cap = kEnumerationCap);

// One report for every m | q^2-1 (each such m is coprime to p), ascending.
std::vector<CensusReport> verify_field(const ff::FieldSpec& F,
                                       std::uint64_t cap = kEnumerationCap);

// Full per-row success: the formula matches where applicable and the
// irreducible classes are exactly as predicted.
bool report_ok(const CensusReport& rep);

}  // namespace redcyc::census
