#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "redcyc/ff.hpp"

// The group GL(2,q): matrix arithmetic, element orders, conjugation,
// monomial / diagonal predicates, the split-reducibility test, and the
// canonical identity of a cyclic subgroup (its full sorted element set).

namespace redcyc::gl2 {

using ff::FieldElement;
using ff::FieldSpec;

// Row-major [[a,b],[c,d]]. Comparison is lexicographic on (a,b,c,d), which
// matches the order of the encoded form below.
struct Mat2 {
    FieldElement a, b, c, d;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

// Canonical encoding: the four element codes in row-major order.
using Mat2Code = std::array<std::uint32_t, 4>;

Mat2 identity(const FieldSpec& F);
Mat2 diag(const FieldSpec& F, const FieldElement& x, const FieldElement& y);
// The coordinate swap [[0,1],[1,0]].
Mat2 swap_matrix(const FieldSpec& F);

Mat2 mul(const FieldSpec& F, const Mat2& g, const Mat2& h);
FieldElement det(const FieldSpec& F, const Mat2& g);
// Throws InvalidInput on a singular matrix.
Mat2 inv(const FieldSpec& F, const Mat2& g);
// g h g^-1
Mat2 conjugate(const FieldSpec& F, const Mat2& g, const Mat2& h);
Mat2 mat_pow(const FieldSpec& F, const Mat2& h, std::uint64_t e);

// Least n >= 1 with h^n = I. Every order divides lcm(q^2-1, p(q-1)).
std::uint64_t mat_order(const FieldSpec& F, const Mat2& h);

bool is_diagonal(const Mat2& h);
bool is_monomial(const FieldSpec& F, const Mat2& h);
bool is_scalar(const Mat2& h);

// True iff h is diagonalizable over F_q, i.e. <h> conjugates into the
// diagonal subgroup. Requires gcd(mat_order(h), p) = 1; otherwise throws
// UnsupportedCharacteristic.
bool is_split_reducible(const FieldSpec& F, const Mat2& h);

Mat2Code encode(const FieldSpec& F, const Mat2& h);
Mat2 decode(const FieldSpec& F, const Mat2Code& code);

// "[[a,b],[c,d]]" with elements printed as residues (k=1) or tuples (k>1).
std::string to_string(const FieldSpec& F, const Mat2& h);

// Canonical identity of a cyclic subgroup: the ascending list of encoded
// elements. Two keys are equal iff the element lists are equal.
struct SubgroupKey {
    std::vector<Mat2Code> elements;
    Mat2 min_generator;  // lexicographically smallest generator
    std::uint64_t order = 1;
    friend bool operator==(const SubgroupKey& x, const SubgroupKey& y) {
        return x.elements == y.elements;
    }
};

SubgroupKey cyclic_subgroup(const FieldSpec& F, const Mat2& h);

inline std::uint64_t gl2_order(std::uint64_t q) { return (q * q - 1) * (q * q - q); }

inline constexpr std::uint64_t kGeneratingSetVerifyCap = 10'000'000;

// A small generating set of GL(2,q): {dia(primitive,1), [[-1,1],[-1,0]]},
// verified by a one-time closure computation whenever |GL(2,q)| is within
// the cap. If the candidate fails verification it is augmented by the swap
// and, as a last resort, replaced by all of GL(2,q).
std::vector<Mat2> generating_set(const FieldSpec& F,
                                 std::uint64_t verify_cap = kGeneratingSetVerifyCap);

}  // namespace redcyc::gl2
