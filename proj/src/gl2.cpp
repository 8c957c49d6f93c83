#include "redcyc/gl2.hpp"

#include <numeric>
#include <queue>

#include "redcyc/errors.hpp"
#include "redcyc/numtheory.hpp"

namespace redcyc::gl2 {

Mat2 identity(const FieldSpec& F) { return Mat2{F.one(), F.zero(), F.zero(), F.one()}; }

Mat2 diag(const FieldSpec& F, const FieldElement& x, const FieldElement& y) {
    return Mat2{x, F.zero(), F.zero(), y};
}

Mat2 swap_matrix(const FieldSpec& F) { return Mat2{F.zero(), F.one(), F.one(), F.zero()}; }

Mat2 mul(const FieldSpec& F, const Mat2& g, const Mat2& h) {
    return Mat2{F.add(F.mul(g.a, h.a), F.mul(g.b, h.c)),
                F.add(F.mul(g.a, h.b), F.mul(g.b, h.d)),
                F.add(F.mul(g.c, h.a), F.mul(g.d, h.c)),
                F.add(F.mul(g.c, h.b), F.mul(g.d, h.d))};
}

FieldElement det(const FieldSpec& F, const Mat2& g) {
    return F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c));
}

Mat2 inv(const FieldSpec& F, const Mat2& g) {
    FieldElement d = det(F, g);
    if (F.is_zero(d)) throw InvalidInput("inv: matrix is singular");
    FieldElement di = F.inv(d);
    return Mat2{F.mul(di, g.d), F.mul(di, F.neg(g.b)), F.mul(di, F.neg(g.c)), F.mul(di, g.a)};
}

Mat2 conjugate(const FieldSpec& F, const Mat2& g, const Mat2& h) {
    return mul(F, mul(F, g, h), inv(F, g));
}

Mat2 mat_pow(const FieldSpec& F, const Mat2& h, std::uint64_t e) {
    Mat2 r = identity(F);
    Mat2 base = h;
    while (e != 0) {
        if (e & 1) r = mul(F, r, base);
        base = mul(F, base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t mat_order(const FieldSpec& F, const Mat2& h) {
    if (F.is_zero(det(F, h))) throw InvalidInput("mat_order: matrix is singular");
    const std::uint64_t q = F.q();
    std::uint64_t exponent = std::lcm(q * q - 1, F.p() * (q - 1));
    const Mat2 id = identity(F);
    if (mat_pow(F, h, exponent) != id) throw InternalError("mat_order: exponent bound violated");
    std::uint64_t n = exponent;
    for (const auto& f : nt::factorize(exponent).factors) {
        while (n % f.prime == 0 && mat_pow(F, h, n / f.prime) == id) n /= f.prime;
    }
    return n;
}

bool is_diagonal(const Mat2& h) {
    auto zero = [](const FieldElement& x) {
        for (auto c : x.coeffs)
            if (c != 0) return false;
        return true;
    };
    return zero(h.b) && zero(h.c);
}

bool is_monomial(const FieldSpec& F, const Mat2& h) {
    bool az = F.is_zero(h.a), bz = F.is_zero(h.b), cz = F.is_zero(h.c), dz = F.is_zero(h.d);
    return (bz && cz && !az && !dz) || (az && dz && !bz && !cz);
}

bool is_scalar(const Mat2& h) { return is_diagonal(h) && h.a == h.d; }

bool is_split_reducible(const FieldSpec& F, const Mat2& h) {
    std::uint64_t n = mat_order(F, h);
    if (n % F.p() == 0)
        throw UnsupportedCharacteristic("is_split_reducible: order divisible by characteristic");
    // Roots of the characteristic polynomial x^2 - tr x + det in F_q.
    FieldElement tr = F.add(h.a, h.d);
    FieldElement dt = det(F, h);
    std::vector<FieldElement> roots;
    for (std::uint64_t code = 0; code < F.q(); ++code) {
        FieldElement x = F.decode(code);
        FieldElement v = F.add(F.sub(F.mul(x, x), F.mul(tr, x)), dt);
        if (F.is_zero(v)) roots.push_back(x);
    }
    if (roots.empty()) return false;
    if (roots.size() == 2) return true;
    // Repeated eigenvalue: diagonalizable iff h is that scalar. A
    // non-scalar here would contradict semisimplicity of h.
    if (h == diag(F, roots[0], roots[0])) return true;
    throw InternalError("is_split_reducible: non-scalar matrix with repeated eigenvalue");
}

Mat2Code encode(const FieldSpec& F, const Mat2& h) {
    return Mat2Code{static_cast<std::uint32_t>(F.encode(h.a)),
                    static_cast<std::uint32_t>(F.encode(h.b)),
                    static_cast<std::uint32_t>(F.encode(h.c)),
                    static_cast<std::uint32_t>(F.encode(h.d))};
}

Mat2 decode(const FieldSpec& F, const Mat2Code& code) {
    return Mat2{F.decode(code[0]), F.decode(code[1]), F.decode(code[2]), F.decode(code[3])};
}

std::string to_string(const FieldSpec& F, const Mat2& h) {
    return "[[" + F.to_string(h.a) + "," + F.to_string(h.b) + "],[" + F.to_string(h.c) + "," +
           F.to_string(h.d) + "]]";
}

SubgroupKey cyclic_subgroup(const FieldSpec& F, const Mat2& h) {
    if (F.is_zero(det(F, h))) throw InvalidInput("cyclic_subgroup: matrix is singular");
    SubgroupKey key;
    const Mat2 id = identity(F);
    std::vector<Mat2> powers;
    Mat2 cur = h;
    while (true) {
        powers.push_back(cur);
        if (cur == id) break;
        cur = mul(F, cur, h);
    }
    const std::uint64_t n = powers.size();
    key.order = n;
    key.elements.reserve(n);
    bool have_gen = false;
    for (std::uint64_t j = 1; j <= n; ++j) {
        const Mat2& g = powers[j - 1];
        key.elements.push_back(encode(F, g));
        if (std::gcd(j, n) == 1 && (!have_gen || g < key.min_generator)) {
            key.min_generator = g;
            have_gen = true;
        }
    }
    std::sort(key.elements.begin(), key.elements.end());
    return key;
}

namespace {

// Size of the closure of `gens` under multiplication, tracked by packed
// matrix codes; only valid when q^4 fits comfortably in memory.
std::uint64_t closure_size(const FieldSpec& F, const std::vector<Mat2>& gens) {
    const std::uint64_t q = F.q();
    const std::uint64_t space = q * q * q * q;
    auto pack = [&](const Mat2Code& c) {
        return ((c[0] * q + c[1]) * q + c[2]) * q + c[3];
    };
    std::vector<bool> seen(space, false);
    std::queue<Mat2> todo;
    Mat2 id = identity(F);
    seen[pack(encode(F, id))] = true;
    todo.push(id);
    std::uint64_t count = 1;
    while (!todo.empty()) {
        Mat2 cur = todo.front();
        todo.pop();
        for (const Mat2& g : gens) {
            Mat2 next = mul(F, cur, g);
            std::uint64_t idx = pack(encode(F, next));
            if (!seen[idx]) {
                seen[idx] = true;
                ++count;
                todo.push(next);
            }
        }
    }
    return count;
}

}  // namespace

std::vector<Mat2> generating_set(const FieldSpec& F, std::uint64_t verify_cap) {
    const FieldElement minus_one = F.neg(F.one());
    std::vector<Mat2> candidate{diag(F, F.primitive(), F.one()),
                                Mat2{minus_one, F.one(), minus_one, F.zero()}};
    const std::uint64_t target = gl2_order(F.q());
    if (target > verify_cap) return candidate;  // too large to verify

    if (closure_size(F, candidate) == target) return candidate;
    candidate.push_back(swap_matrix(F));
    if (closure_size(F, candidate) == target) return candidate;

    // Last resort: every invertible matrix.
    std::vector<Mat2> all;
    all.reserve(target);
    const std::uint64_t q = F.q();
    std::vector<FieldElement> elems;
    elems.reserve(q);
    for (std::uint64_t c = 0; c < q; ++c) elems.push_back(F.decode(c));
    for (std::uint64_t ia = 0; ia < q; ++ia)
        for (std::uint64_t ib = 0; ib < q; ++ib)
            for (std::uint64_t ic = 0; ic < q; ++ic)
                for (std::uint64_t id = 0; id < q; ++id) {
                    Mat2 g{elems[ia], elems[ib], elems[ic], elems[id]};
                    if (!F.is_zero(det(F, g))) all.push_back(g);
                }
    return all;
}

}  // namespace redcyc::gl2
