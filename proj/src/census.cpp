#include "redcyc/census.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "redcyc/errors.hpp"
#include "redcyc/modarith.hpp"

namespace redcyc::census {

namespace {

// ---------------------------------------------------------------------------
// Diagonal model internals.
//
// A cyclic order-m subgroup of Z_m x Z_m is a unit-scaling class of
// generator pairs, and it factors over the prime powers P || m. Per prime
// power every subgroup contains exactly one generator from the two affine
// charts (1, y), y in [0, P), and (x, 1), x a multiple of p. The walker
// enumerates the chart product; the coordinate swap maps chart items to
// chart items, so orbit counting never leaves index space.

struct Chart {
    std::uint64_t P = 1;
    std::uint64_t p = 1;
    std::uint32_t count = 0;
    std::vector<std::uint32_t> swap_idx;  // item index of the swapped subgroup
};

Chart build_chart(std::uint64_t prime, std::uint32_t exponent) {
    Chart ch;
    ch.p = prime;
    for (std::uint32_t i = 0; i < exponent; ++i) ch.P *= prime;
    ch.count = static_cast<std::uint32_t>(ch.P + ch.P / prime);
    ch.swap_idx.resize(ch.count);
    for (std::uint64_t y = 0; y < ch.P; ++y) {
        // <(1,y)> swapped is <(y,1)>: back into chart A when y is a unit.
        if (y % prime != 0)
            ch.swap_idx[y] = static_cast<std::uint32_t>(modinv(y, ch.P));
        else
            ch.swap_idx[y] = static_cast<std::uint32_t>(ch.P + y / prime);
    }
    for (std::uint64_t x = 0; x < ch.P; x += prime)
        ch.swap_idx[ch.P + x / prime] = static_cast<std::uint32_t>(x);
    return ch;
}

std::pair<std::uint64_t, std::uint64_t> chart_pair(const Chart& ch, std::uint32_t i) {
    if (i < ch.P) return {1, i};
    return {(std::uint64_t{i} - ch.P) * ch.p, 1};
}

// visit(charts, idx, rel) where rel orders the subgroup against its swap
// image in chart-index space: -1 below, 0 fixed, +1 above.
template <class Visit>
void walk_subgroups(const nt::FactoredInt& mf, Visit&& visit) {
    std::vector<Chart> charts;
    charts.reserve(mf.factors.size());
    for (const auto& f : mf.factors) charts.push_back(build_chart(f.prime, f.exponent));
    std::vector<std::uint32_t> idx(charts.size(), 0);
    if (charts.empty()) {  // m = 1: the trivial subgroup only
        visit(charts, idx, 0);
        return;
    }
    while (true) {
        int rel = 0;
        for (std::size_t i = 0; i < charts.size(); ++i) {
            std::uint32_t s = idx[i], t = charts[i].swap_idx[s];
            if (s != t) {
                rel = s < t ? -1 : 1;
                break;
            }
        }
        visit(charts, idx, rel);
        std::size_t i = charts.size();
        for (;;) {
            if (i == 0) return;
            --i;
            if (++idx[i] < charts[i].count) break;
            idx[i] = 0;
        }
    }
}

DiagPair raw_pair(const std::vector<Chart>& charts, const std::vector<std::uint32_t>& idx) {
    std::uint64_t a = 0, b = 0, M = 1;
    for (std::size_t i = 0; i < charts.size(); ++i) {
        auto [xa, xb] = chart_pair(charts[i], idx[i]);
        a = crt_pair(a, M, xa % charts[i].P, charts[i].P);
        b = crt_pair(b, M, xb % charts[i].P, charts[i].P);
        M *= charts[i].P;
    }
    return {a, b};
}

DiagPair canonical_pair_impl(const nt::FactoredInt& mf, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t m = mf.value;
    if (m == 1) return {0, 0};
    a %= m;
    b %= m;
    const std::uint64_t oa = m / std::gcd(a, m);
    const std::uint64_t ob = m / std::gcd(b, m);
    if (std::lcm(oa, ob) != m)
        throw InvalidInput("canonical_pair: pair does not generate a subgroup of order m");

    // Least first coordinate over unit scalings is gcd(a, m); the second
    // coordinate then ranges over a CRT class intersected with units at
    // the primes where a vanishes.
    const std::uint64_t g = std::gcd(a, m);
    std::uint64_t L = 1, Z = 0, Q = 1;
    for (const auto& f : mf.factors) {
        std::uint64_t P = 1;
        for (std::uint32_t i = 0; i < f.exponent; ++i) P *= f.prime;
        const std::uint64_t aP = a % P, bP = b % P;
        const std::uint64_t gP = std::gcd(aP, P);
        if (gP == P) {
            Q *= P;  // free unit scaling at this prime; bP is a unit
            continue;
        }
        const std::uint64_t Pg = P / gP;
        const std::uint64_t rhs = (g % P) / gP;
        const std::uint64_t u0 = mulmod(rhs % Pg, modinv((aP / gP) % Pg, Pg), Pg);
        const std::uint64_t z0 = mulmod(u0, bP, P);
        const std::uint64_t d = std::gcd(z0 % gP, gP);
        const std::uint64_t M = Pg * d;
        Z = crt_pair(Z, L, z0 % M, M);
        L *= M;
    }
    std::uint64_t z = Z;
    while (std::gcd(z, Q) != 1) z += L;
    return {g % m, z};
}

}  // namespace

DiagPair canonical_pair(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
    if (m == 0) throw InvalidInput("canonical_pair: m must be positive");
    return canonical_pair_impl(nt::factorize(m), a, b);
}

DiagPair swap_pair(std::uint64_t m, const DiagPair& s) { return canonical_pair(m, s.b, s.a); }

std::vector<DiagPair> diag_subgroups(std::uint64_t m) {
    if (m == 0) throw InvalidInput("diag_subgroups: m must be positive");
    const nt::FactoredInt mf = nt::factorize(m);
    std::vector<DiagPair> out;
    walk_subgroups(mf, [&](const auto& charts, const auto& idx, int) {
        DiagPair raw = raw_pair(charts, idx);
        out.push_back(canonical_pair_impl(mf, raw.a, raw.b));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> diag_elements(std::uint64_t m,
                                                                   const DiagPair& s) {
    if (m == 0) throw InvalidInput("diag_elements: m must be positive");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(m);
    for (std::uint64_t t = 0; t < m; ++t)
        out.emplace_back(mulmod(t, s.a % m, m), mulmod(t, s.b % m, m));
    std::sort(out.begin(), out.end());
    return out;
}

DiagModel diagonal_model_classes(std::uint64_t m) {
    if (m == 0) throw InvalidInput("diagonal_model_classes: m must be positive");
    const nt::FactoredInt mf = nt::factorize(m);
    DiagModel model;
    walk_subgroups(mf, [&](const auto& charts, const auto& idx, int rel) {
        ++model.total_subgroups;
        if (rel == 0) ++model.fixed_subgroups;
        if (rel > 0) return;  // the partner below already counted this orbit
        DiagPair raw = raw_pair(charts, idx);
        DiagOrbit orbit;
        orbit.members[0] = canonical_pair_impl(mf, raw.a, raw.b);
        if (rel < 0) {
            orbit.size = 2;
            orbit.members[1] = canonical_pair_impl(mf, raw.b, raw.a);
            if (orbit.members[1] < orbit.members[0]) std::swap(orbit.members[0], orbit.members[1]);
        }
        model.orbits.push_back(orbit);
    });
    model.count = model.orbits.size();
    std::sort(model.orbits.begin(), model.orbits.end(),
              [](const DiagOrbit& x, const DiagOrbit& y) { return x.members[0] < y.members[0]; });
    return model;
}

std::uint64_t diagonal_model_count(std::uint64_t m) {
    if (m == 0) throw InvalidInput("diagonal_model_count: m must be positive");
    std::uint64_t count = 0;
    walk_subgroups(nt::factorize(m),
                   [&](const auto&, const auto&, int rel) { count += rel <= 0 ? 1 : 0; });
    return count;
}

std::uint64_t diag_subgroup_total(std::uint64_t m) {
    if (m == 0) throw InvalidInput("diag_subgroup_total: m must be positive");
    std::uint64_t total = 0;
    walk_subgroups(nt::factorize(m), [&](const auto&, const auto&, int) { ++total; });
    return total;
}

std::uint64_t burnside_count(std::uint64_t m) {
    if (m == 0) throw InvalidInput("burnside_count: m must be positive");
    std::uint64_t total = 0, fixed = 0;
    walk_subgroups(nt::factorize(m), [&](const auto&, const auto&, int rel) {
        ++total;
        fixed += rel == 0 ? 1 : 0;
    });
    if ((total + fixed) % 2 != 0) throw InternalError("burnside_count: odd fixed-point sum");
    return (total + fixed) / 2;
}

std::vector<FixedSubgroup> fix_swap_subgroups(std::uint64_t m) {
    if (m == 0) throw InvalidInput("fix_swap_subgroups: m must be positive");
    const nt::FactoredInt mf = nt::factorize(m);
    std::vector<FixedSubgroup> out;
    walk_subgroups(mf, [&](const auto& charts, const auto& idx, int rel) {
        if (rel != 0) return;
        DiagPair raw = raw_pair(charts, idx);
        DiagPair c = canonical_pair_impl(mf, raw.a, raw.b);
        if (m == 1) {
            out.push_back({c, 1});
            return;
        }
        if (c.a != 1 || std::gcd(c.b, m) != 1 || mulmod(c.b, c.b, m) != 1)
            throw InternalError("fix_swap_subgroups: fixed subgroup is not <(1,l)> with l^2 = 1");
        out.push_back({c, c.b});
    });
    std::sort(out.begin(), out.end(),
              [](const FixedSubgroup& x, const FixedSubgroup& y) { return x.l < y.l; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].l == out[i - 1].l)
            throw InternalError("fix_swap_subgroups: two fixed subgroups share an exponent");
    return out;
}

// ---------------------------------------------------------------------------
// Full matrix census.

namespace {

using gl2::Mat2;
using gl2::Mat2Code;
using gl2::SubgroupKey;

struct ElementsHash {
    std::size_t operator()(const std::vector<Mat2Code>& v) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (const auto& c : v)
            for (std::uint32_t x : c) {
                h ^= x;
                h *= 1099511628211ULL;
            }
        return static_cast<std::size_t>(h);
    }
};

void check_enumeration_cap(const ff::FieldSpec& F, std::uint64_t cap) {
    const unsigned __int128 q = F.q();
    if (q * q * q * q > cap) throw ResourceLimit("census: q^4 exceeds the enumeration cap");
}

// Matrices bucketed by exact order, restricted to the wanted orders. Every
// order of interest divides q^2-1; matrices whose order is divisible by p
// fail the q^2-1 power test and are skipped.
std::unordered_map<std::uint64_t, std::vector<Mat2Code>> scan_orders(
    const ff::FieldSpec& F, const std::vector<std::uint64_t>& wanted_orders) {
    const std::uint64_t q = F.q();
    const std::uint64_t e = q * q - 1;
    const nt::FactoredInt ef = nt::factorize(e);
    std::unordered_set<std::uint64_t> wanted(wanted_orders.begin(), wanted_orders.end());

    std::vector<ff::FieldElement> elems;
    elems.reserve(q);
    for (std::uint64_t c = 0; c < q; ++c) elems.push_back(F.decode(c));

    std::unordered_map<std::uint64_t, std::vector<Mat2Code>> buckets;
    const Mat2 id = gl2::identity(F);
    for (std::uint64_t ia = 0; ia < q; ++ia)
        for (std::uint64_t ib = 0; ib < q; ++ib)
            for (std::uint64_t ic = 0; ic < q; ++ic)
                for (std::uint64_t iv = 0; iv < q; ++iv) {
                    Mat2 g{elems[ia], elems[ib], elems[ic], elems[iv]};
                    if (F.is_zero(gl2::det(F, g))) continue;
                    if (gl2::mat_pow(F, g, e) != id) continue;  // order divisible by p
                    std::uint64_t n = e;
                    for (const auto& f : ef.factors)
                        while (n % f.prime == 0 && gl2::mat_pow(F, g, n / f.prime) == id)
                            n /= f.prime;
                    if (wanted.contains(n)) buckets[n].push_back(gl2::encode(F, g));
                }
    return buckets;
}

std::vector<SubgroupKey> build_subgroups(const ff::FieldSpec& F,
                                         const std::vector<Mat2Code>& generators) {
    const std::uint64_t q = F.q();
    auto pack = [&](const Mat2Code& c) {
        return ((std::uint64_t{c[0]} * q + c[1]) * q + c[2]) * q + c[3];
    };
    std::unordered_set<std::uint64_t> covered;
    std::vector<SubgroupKey> out;
    for (const Mat2Code& code : generators) {
        if (covered.contains(pack(code))) continue;
        SubgroupKey key = gl2::cyclic_subgroup(F, gl2::decode(F, code));
        for (const Mat2Code& c : key.elements) covered.insert(pack(c));
        out.push_back(std::move(key));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupKey& x, const SubgroupKey& y) {
        return x.min_generator < y.min_generator;
    });
    return out;
}

SubgroupKind classify(const ff::FieldSpec& F, const SubgroupKey& key) {
    bool scalar = true;
    for (const Mat2Code& c : key.elements)
        if (c[1] != 0 || c[2] != 0 || c[0] != c[3]) {
            scalar = false;
            break;
        }
    if (scalar) return SubgroupKind::scalar;
    return gl2::is_split_reducible(F, key.min_generator) ? SubgroupKind::split_reducible
                                                         : SubgroupKind::irreducible;
}

CensusReport report_from_subgroups(const ff::FieldSpec& F, std::uint64_t m,
                                   const std::vector<SubgroupKey>& subgroups) {
    CensusReport rep;
    rep.q = F.q();
    rep.m = m;
    rep.total_subgroups = subgroups.size();
    rep.classes = conjugacy_classes(F, subgroups);
    for (const ClassInfo& cls : rep.classes)
        (cls.kind == SubgroupKind::irreducible ? rep.irreducible_classes : rep.reducible_classes)++;
    if ((F.q() - 1) % m == 0) {
        rep.formula_n = nt::count_reducible_classes(nt::factorize(m)).n_classes;
        rep.match = rep.reducible_classes == *rep.formula_n;
    }
    return rep;
}

}  // namespace

std::vector<SubgroupKey> enumerate_cyclic_subgroups(const ff::FieldSpec& F, std::uint64_t m,
                                                    std::uint64_t cap) {
    if (m == 0) throw InvalidInput("enumerate_cyclic_subgroups: m must be positive");
    if (m % F.p() == 0)
        throw UnsupportedCharacteristic(
            "enumerate_cyclic_subgroups: m divisible by the characteristic");
    check_enumeration_cap(F, cap);
    if ((F.q() * F.q() - 1) % m != 0) return {};  // element orders divide q^2-1
    auto buckets = scan_orders(F, {m});
    return build_subgroups(F, buckets[m]);
}

std::vector<ClassInfo> conjugacy_classes(const ff::FieldSpec& F,
                                         const std::vector<SubgroupKey>& subgroups) {
    std::unordered_map<std::vector<Mat2Code>, std::uint32_t, ElementsHash> index;
    index.reserve(subgroups.size() * 2);
    for (std::uint32_t i = 0; i < subgroups.size(); ++i) {
        if (!index.emplace(subgroups[i].elements, i).second)
            throw InvalidInput("conjugacy_classes: subgroups are not pairwise distinct");
    }
    const std::vector<Mat2> gens = gl2::generating_set(F);

    std::vector<bool> visited(subgroups.size(), false);
    std::vector<ClassInfo> classes;
    for (std::uint32_t start = 0; start < subgroups.size(); ++start) {
        if (visited[start]) continue;
        std::vector<std::uint32_t> members{start};
        visited[start] = true;
        std::queue<std::uint32_t> todo;
        todo.push(start);
        while (!todo.empty()) {
            std::uint32_t cur = todo.front();
            todo.pop();
            std::vector<Mat2> mats;
            mats.reserve(subgroups[cur].elements.size());
            for (const Mat2Code& c : subgroups[cur].elements) mats.push_back(gl2::decode(F, c));
            for (const Mat2& g : gens) {
                std::vector<Mat2Code> image;
                image.reserve(mats.size());
                for (const Mat2& h : mats) image.push_back(gl2::encode(F, gl2::conjugate(F, g, h)));
                std::sort(image.begin(), image.end());
                auto it = index.find(image);
                if (it == index.end())
                    throw InternalError("conjugacy_classes: orbit leaves the input set");
                if (!visited[it->second]) {
                    visited[it->second] = true;
                    members.push_back(it->second);
                    todo.push(it->second);
                }
            }
        }
        std::sort(members.begin(), members.end(), [&](std::uint32_t x, std::uint32_t y) {
            return subgroups[x].min_generator < subgroups[y].min_generator;
        });
        ClassInfo cls;
        cls.class_size = members.size();
        cls.kind = classify(F, subgroups[members[0]]);
        for (std::uint32_t i : members) {
            if (classify(F, subgroups[i]) != cls.kind)
                throw InternalError("conjugacy_classes: mixed kinds within one class");
            cls.members.push_back(subgroups[i]);
        }
        cls.representative = cls.members.front();
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const ClassInfo& x, const ClassInfo& y) {
        return x.representative.min_generator < y.representative.min_generator;
    });
    return classes;
}

CensusReport census_for(const ff::FieldSpec& F, std::uint64_t m, std::uint64_t cap) {
    return report_from_subgroups(F, m, enumerate_cyclic_subgroups(F, m, cap));
}

bool irreducible_class_check(const ff::FieldSpec& F, std::uint64_t m, std::uint64_t cap) {
    CensusReport rep = census_for(F, m, cap);
    const bool expect = (F.q() * F.q() - 1) % m == 0 && (F.q() - 1) % m != 0;
    std::uint64_t irreducible_subgroups = 0;
    for (const ClassInfo& cls : rep.classes)
        if (cls.kind == SubgroupKind::irreducible) irreducible_subgroups += cls.class_size;
    if (expect) return rep.irreducible_classes == 1 && irreducible_subgroups > 0;
    return rep.irreducible_classes == 0 && irreducible_subgroups == 0;
}

std::vector<CensusReport> verify_field(const ff::FieldSpec& F, std::uint64_t cap) {
    check_enumeration_cap(F, cap);
    const std::uint64_t e = F.q() * F.q() - 1;
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t m = 1; m <= e; ++m)
        if (e % m == 0) divisors.push_back(m);
    auto buckets = scan_orders(F, divisors);
    std::vector<CensusReport> reports;
    reports.reserve(divisors.size());
    for (std::uint64_t m : divisors)
        reports.push_back(report_from_subgroups(F, m, build_subgroups(F, buckets[m])));
    return reports;
}

bool report_ok(const CensusReport& rep) {
    if (rep.formula_n.has_value())
        return rep.match.value_or(false) && rep.irreducible_classes == 0;
    return rep.reducible_classes == 0 && rep.irreducible_classes == 1;
}

}  // namespace redcyc::census
