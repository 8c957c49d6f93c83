#pragma once

#include <cstdint>
#include <vector>

// Exact integer arithmetic for the class-counting formula
//
//   N(m) = (rho(m) + delta(m)) / 2
//
// where rho(m) = prod (p^b + p^(b-1)) over the prime powers p^b of m and
// delta(m) counts the subgroups of Z_m x Z_m of order m that are fixed by
// the coordinate swap, equivalently 1 + #{involutions in Aut(Z_m)}.

namespace redcyc::nt {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer together with its ascending prime factorization.
// Invariants: product of prime^exponent equals value; primes strictly
// ascending; exponents >= 1; value == 1 iff factors is empty.
struct FactoredInt {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;
    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

struct CountReport {
    std::uint64_t m = 1;
    std::uint64_t rho = 1;
    std::uint64_t delta = 1;
    std::uint64_t n_classes = 1;
    std::uint64_t involutions = 0;
};

inline constexpr std::uint64_t kFactorizeCap = 0x7fffffffffffffffULL;  // 2^63 - 1

// Deterministic trial division. Throws InvalidInput for n = 0 and
// ResourceLimit above the cap.
FactoredInt factorize(std::uint64_t n, std::uint64_t cap = kFactorizeCap);

std::uint64_t euler_phi(const FactoredInt& n);

// Number of cyclic subgroups of order m in Z_m x Z_m.
std::uint64_t rho(const FactoredInt& m);

// Number of those subgroups fixed by the coordinate swap: with r odd prime
// divisors and b the exponent of 2 in m, 2^r for b <= 1, 2^(r+1) for b = 2,
// 2^(r+2) for b >= 3.
std::uint64_t delta(const FactoredInt& m);

// Number of elements of order exactly 2 in Aut(Z_m) = (Z/m)^*; closed form,
// equal to delta(m) - 1.
std::uint64_t involution_count(const FactoredInt& m);

// All k in [1, m] with gcd(k, m) = 1 and k^2 = 1 (mod m), ascending.
// Direct enumeration; the independent oracle for involution_count.
std::vector<std::uint64_t> unit_involutions(std::uint64_t m);

// Full report with n_classes = (rho + delta) / 2.
CountReport count_reducible_classes(const FactoredInt& m);

// True iff m = 2^t * 3^s with t <= 3 and s <= 1; equivalently every unit
// mod m squares to 1, so the swap-fixed-subgroup -> exponent map is onto
// Aut(Z_m).
bool fix_bijectivity_predicate(const FactoredInt& m);

}  // namespace redcyc::nt
