#include "redcyc/ff.hpp"

#include <algorithm>
#include <charconv>

#include "redcyc/errors.hpp"
#include "redcyc/modarith.hpp"

namespace redcyc::ff {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over Z_p, constant term first. Only what the
// irreducibility search needs.
using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
void poly_reduce(Poly& a, const Poly& f, std::uint64_t p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::uint64_t sub = mulmod(lead, f[i], p);
                std::uint64_t& c = a[shift + i];
                c = (c + p - sub) % p;
            }
        }
        a.pop_back();
    }
    poly_trim(a);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    poly_reduce(c, f, p);
    return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    poly_reduce(base, f, p);
    while (e != 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b after making b monic
        std::uint64_t li = modinv(b.back(), p);
        Poly bm = b;
        for (auto& c : bm) c = mulmod(c, li, p);
        poly_reduce(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

// Monic f of degree k over Z_p, k >= 2.
bool is_irreducible(const Poly& f, std::uint64_t p, std::uint32_t k) {
    const Poly x{0, 1};
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= p;
    if (poly_powmod(x, pk, f, p) != x) return false;
    for (std::uint32_t l = 2; l <= k; ++l) {
        if (k % l != 0 || !is_prime(l)) continue;
        std::uint64_t pe = 1;
        for (std::uint32_t i = 0; i < k / l; ++i) pe *= p;
        Poly u = poly_powmod(x, pe, f, p);
        // u - x
        if (u.size() < 2) u.resize(2, 0);
        u[1] = (u[1] + p - 1) % p;
        poly_trim(u);
        Poly g = poly_gcd(u, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::make(std::uint64_t p, std::uint32_t k, std::uint64_t cap) {
    if (!is_prime(p)) throw InvalidInput("make_field: p must be prime");
    if (k == 0) throw InvalidInput("make_field: k must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > cap / p) throw ResourceLimit("make_field: p^k exceeds cap");
        q *= p;
    }

    FieldSpec F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = q;
    F.qm1_ = nt::factorize(q - 1);

    if (k == 1) {
        F.modulus_ = {0, 1};  // the degree-1 polynomial x
    } else {
        // Scan monic degree-k polynomials in canonical coefficient order.
        std::vector<std::uint32_t> digits(k, 0);
        bool found = false;
        for (std::uint64_t n = 0; n < q; ++n) {
            std::uint64_t v = n;
            for (std::uint32_t i = 0; i < k; ++i) {
                digits[k - 1 - i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            Poly f(k + 1, 0);
            for (std::uint32_t i = 0; i < k; ++i) f[i] = digits[i];
            f[k] = 1;
            if (is_irreducible(f, p, k)) {
                F.modulus_.assign(f.begin(), f.end());
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("make_field: no irreducible polynomial found");
    }

    // Smallest element of multiplicative order q-1 in canonical order.
    for (std::uint64_t code = 1; code < q; ++code) {
        FieldElement x = F.decode(code);
        if (F.element_order(x) == q - 1) {
            F.primitive_ = x;
            break;
        }
    }
    if (F.primitive_.coeffs.empty()) throw InternalError("make_field: no primitive element");
    return F;
}

FieldSpec FieldSpec::from_designation(const std::string& s, std::uint64_t cap) {
    auto parse_u64 = [](std::string_view sv) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (ec != std::errc() || ptr != sv.data() + sv.size())
            throw InvalidInput("field designation: cannot parse \"" + std::string(sv) + "\"");
        return v;
    };
    auto caret = s.find('^');
    if (caret != std::string::npos) {
        std::uint64_t p = parse_u64(std::string_view(s).substr(0, caret));
        std::uint64_t k = parse_u64(std::string_view(s).substr(caret + 1));
        if (k == 0 || k > 64) throw InvalidInput("field designation: bad exponent");
        return make(p, static_cast<std::uint32_t>(k), cap);
    }
    std::uint64_t q = parse_u64(s);
    if (q < 2) throw InvalidInput("field designation: q must be at least 2");
    nt::FactoredInt f = nt::factorize(q);
    if (f.factors.size() != 1)
        throw InvalidInput("field designation: " + s + " is not a prime power");
    return make(f.factors[0].prime, f.factors[0].exponent, cap);
}

FieldElement FieldSpec::zero() const { return FieldElement{std::vector<std::uint32_t>(k_, 0)}; }

FieldElement FieldSpec::one() const { return from_residue(1); }

FieldElement FieldSpec::from_residue(std::uint64_t r) const {
    FieldElement x = zero();
    x.coeffs[0] = static_cast<std::uint32_t>(r % p_);
    return x;
}

bool FieldSpec::is_zero(const FieldElement& x) const {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p_;
    return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (std::uint32_t i = 0; i < k_; ++i)
        r.coeffs[i] = static_cast<std::uint32_t>((r.coeffs[i] + p_ - b.coeffs[i]) % p_);
    return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    // Schoolbook product then reduction by the monic modulus.
    std::vector<std::uint64_t> c(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            c[i + j] = (c[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p_;
    }
    for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
        std::uint64_t lead = c[d];
        if (lead != 0) {
            c[d] = 0;
            for (std::uint32_t i = 0; i < k_; ++i) {
                std::uint64_t sub_ = mulmod(lead, modulus_[i], p_);
                c[d - k_ + i] = (c[d - k_ + i] + p_ - sub_) % p_;
            }
        }
        if (d == k_) break;
    }
    FieldElement r = zero();
    for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(c[i]);
    return r;
}

FieldElement FieldSpec::inv(const FieldElement& x) const {
    if (is_zero(x)) throw DivisionByZero("inv: zero has no inverse");
    return pow(x, q_ - 2);
}

FieldElement FieldSpec::pow(const FieldElement& x, std::uint64_t e) const {
    FieldElement r = one();
    FieldElement base = x;
    while (e != 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::encode(const FieldElement& x) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < k_; ++i) code = code * p_ + x.coeffs[i];
    return code;
}

FieldElement FieldSpec::decode(std::uint64_t code) const {
    FieldElement x = zero();
    for (std::uint32_t i = 0; i < k_; ++i) {
        x.coeffs[k_ - 1 - i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return x;
}

std::uint64_t FieldSpec::element_order(const FieldElement& x) const {
    if (is_zero(x)) throw InvalidInput("element_order: zero has no multiplicative order");
    std::uint64_t n = q_ - 1;
    if (n == 0) return 1;
    const FieldElement id = one();
    for (const auto& f : qm1_.factors) {
        while (n % f.prime == 0 && pow(x, n / f.prime) == id) n /= f.prime;
    }
    return n;
}

FieldElement FieldSpec::element_of_order(std::uint64_t m) const {
    if (m == 0 || (q_ - 1) % m != 0)
        throw NoSuchElement("element_of_order: m does not divide q-1");
    return pow(primitive_, (q_ - 1) / m);
}

std::string FieldSpec::to_string(const FieldElement& x) const {
    if (k_ == 1) return std::to_string(x.coeffs[0]);
    std::string s = "(";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) s += ',';
        s += std::to_string(x.coeffs[i]);
    }
    s += ')';
    return s;
}

}  // namespace redcyc::ff
