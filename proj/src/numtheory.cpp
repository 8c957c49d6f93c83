#include "redcyc/numtheory.hpp"

#include <numeric>
#include <string>

#include "redcyc/errors.hpp"
#include "redcyc/modarith.hpp"

namespace redcyc::nt {

FactoredInt factorize(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw InvalidInput("factorize: n must be positive");
    if (n > cap) throw ResourceLimit("factorize: " + std::to_string(n) + " exceeds cap");
    FactoredInt out;
    out.value = n;
    std::uint64_t rest = n;
    auto strip = [&](std::uint64_t d) {
        if (rest % d != 0) return;
        std::uint32_t e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        out.factors.push_back({d, e});
    };
    strip(2);
    for (std::uint64_t d = 3; d * d <= rest; d += 2) strip(d);
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

std::uint64_t euler_phi(const FactoredInt& n) {
    std::uint64_t phi = 1;
    for (const auto& f : n.factors) {
        std::uint64_t pe1 = 1;
        for (std::uint32_t i = 1; i < f.exponent; ++i) pe1 *= f.prime;
        phi *= pe1 * (f.prime - 1);
    }
    return phi;
}

std::uint64_t rho(const FactoredInt& m) {
    std::uint64_t r = 1;
    for (const auto& f : m.factors) {
        std::uint64_t pe1 = 1;
        for (std::uint32_t i = 1; i < f.exponent; ++i) pe1 *= f.prime;
        r *= pe1 * (f.prime + 1);  // p^b + p^(b-1)
    }
    return r;
}

namespace {

// The case split shared by delta and the involution count: with r odd prime
// divisors and beta0 the exponent of 2, both are determined by
// r + (0, 1 or 2 depending on beta0).
std::uint32_t case_split_exponent(const FactoredInt& m) {
    std::uint32_t beta0 = 0;
    std::uint32_t r = 0;
    for (const auto& f : m.factors) {
        if (f.prime == 2)
            beta0 = f.exponent;
        else
            ++r;
    }
    if (beta0 <= 1) return r;
    if (beta0 == 2) return r + 1;
    return r + 2;
}

}  // namespace

std::uint64_t delta(const FactoredInt& m) { return std::uint64_t{1} << case_split_exponent(m); }

std::uint64_t involution_count(const FactoredInt& m) {
    return (std::uint64_t{1} << case_split_exponent(m)) - 1;
}

std::vector<std::uint64_t> unit_involutions(std::uint64_t m) {
    if (m == 0) throw InvalidInput("unit_involutions: m must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        if (mulmod(k % m, k % m, m) == 1 % m) out.push_back(k);
    }
    return out;
}

CountReport count_reducible_classes(const FactoredInt& m) {
    CountReport rep;
    rep.m = m.value;
    rep.rho = rho(m);
    rep.delta = delta(m);
    rep.involutions = involution_count(m);
    if ((rep.rho + rep.delta) % 2 != 0)
        throw InternalError("count_reducible_classes: rho + delta is odd");
    rep.n_classes = (rep.rho + rep.delta) / 2;
    return rep;
}

bool fix_bijectivity_predicate(const FactoredInt& m) {
    for (const auto& f : m.factors) {
        if (f.prime == 2 && f.exponent <= 3) continue;
        if (f.prime == 3 && f.exponent <= 1) continue;
        return false;
    }
    return true;
}

}  // namespace redcyc::nt
