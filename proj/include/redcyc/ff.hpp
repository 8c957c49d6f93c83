#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "redcyc/numtheory.hpp"

// Exact arithmetic in GF(p^k), built deterministically: the modulus is the
// lexicographically smallest monic irreducible polynomial of degree k over
// Z_p (coefficient tuples compared from the constant term upward) and the
// primitive element is the smallest element, in the same order, of
// multiplicative order q-1.

namespace redcyc::ff {

// Element of GF(p^k) as its coefficient vector, constant term first,
// length exactly k, each residue in [0, p). Comparison is lexicographic on
// the coefficients, which is the canonical element order everywhere.
struct FieldElement {
    std::vector<std::uint32_t> coeffs;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint64_t kFieldCap = std::uint64_t{1} << 20;

class FieldSpec {
  public:
    // Throws InvalidInput if p is not prime, ResourceLimit if p^k > cap.
    static FieldSpec make(std::uint64_t p, std::uint32_t k, std::uint64_t cap = kFieldCap);

    // Accepts "p^k" or a bare prime power q.
    static FieldSpec from_designation(const std::string& s, std::uint64_t cap = kFieldCap);

    std::uint64_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    // Monic modulus polynomial, constant term first, length k+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldElement& primitive() const { return primitive_; }
    const nt::FactoredInt& unit_group_order() const { return qm1_; }

    FieldElement zero() const;
    FieldElement one() const;
    // Embedding of an integer residue via the prime subfield.
    FieldElement from_residue(std::uint64_t r) const;

    bool is_zero(const FieldElement& x) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    // Throws DivisionByZero for x = 0.
    FieldElement inv(const FieldElement& x) const;
    FieldElement pow(const FieldElement& x, std::uint64_t e) const;

    // Bijection [0, q) <-> elements preserving the canonical element order.
    std::uint64_t encode(const FieldElement& x) const;
    FieldElement decode(std::uint64_t code) const;

    // Least n >= 1 with x^n = 1; throws InvalidInput for x = 0.
    std::uint64_t element_order(const FieldElement& x) const;

    // primitive^((q-1)/m); throws NoSuchElement unless m | q-1.
    FieldElement element_of_order(std::uint64_t m) const;

    // Integer residue for k = 1, "(c0,c1,...)" otherwise.
    std::string to_string(const FieldElement& x) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    FieldSpec() = default;

    std::uint64_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldElement primitive_;
    nt::FactoredInt qm1_;
};

}  // namespace redcyc::ff
