#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "redcyc/census.hpp"
#include "redcyc/ff.hpp"
#include "redcyc/gl2.hpp"
#include "redcyc/numtheory.hpp"

// Canonical representatives of the conjugacy classes of reducible cyclic
// order-m subgroups, one per swap orbit of the diagonal model, classified
// as Type I (scalar), Type II (swap-fixed, dia(l, l^k) with k^2 = 1 and
// k != 1) or Type III (everything else, normalized only by the diagonal
// subgroup within the monomial group).

namespace redcyc::reps {

enum class RepType { I = 0, II = 1, III = 2 };

enum class NormalizerType { full_monomial, diagonal_only };

struct RepEntry {
    std::uint64_t m = 1;
    // The subgroup is <dia(l^a, l^b)> for l = element_of_order(F, m).
    census::DiagPair exponents;
    gl2::Mat2 generator;
    RepType type = RepType::I;
    // For Type III classes containing a member <(1, k)>: the residues of k
    // modulo each prime power of m, ascending by prime. Absent when no
    // member of the orbit has a generator with a full-order first entry.
    std::optional<std::vector<std::uint64_t>> type_iii_exponents;
    // For Type II: the unit k with the subgroup equal to <dia(l, l^k)>.
    std::optional<std::uint64_t> involution_exponent;
};

// One entry per conjugacy class, sorted by (type, exponents). Throws
// NoSuchElement unless m | q-1.
std::vector<RepEntry> representatives(const ff::FieldSpec& F, std::uint64_t m);

// Recompute the per-prime exponent decomposition for a Type III entry;
// absent when the orbit has no member of the form <(1, k)>.
std::optional<std::vector<std::uint64_t>> type_iii_template_form(const RepEntry& entry,
                                                                 const nt::FactoredInt& m);

// full_monomial iff the subgroup is fixed by the swap in the diagonal
// model (Types I and II); diagonal_only otherwise.
NormalizerType normalizer_type(std::uint64_t m, const census::DiagPair& exponents);

// True iff representatives(F, m) biject with the reducible conjugacy
// classes found by the matrix census.
bool cross_validate(const ff::FieldSpec& F, std::uint64_t m,
                    std::uint64_t cap = census::kEnumerationCap);

}  // namespace redcyc::reps
