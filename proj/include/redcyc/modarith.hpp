#pragma once

#include <cstdint>
#include <numeric>
#include <utility>

#include "redcyc/errors.hpp"

// Small modular-arithmetic helpers used throughout the library.

namespace redcyc {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// x with a*x = 1 (mod m); requires gcd(a, m) = 1.
inline std::uint64_t modinv(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m);
    std::int64_t new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw InvalidInput("modinv: argument is not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// Solve x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; result in [0, m1*m2).
inline std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1,
                              std::uint64_t r2, std::uint64_t m2) {
    std::uint64_t d = (r2 + m2 - r1 % m2) % m2;
    std::uint64_t t = mulmod(d, modinv(m1 % m2, m2), m2);
    return r1 + m1 * t;
}

}  // namespace redcyc
