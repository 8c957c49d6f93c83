#include "redcyc/reps.hpp"

#include <algorithm>
#include <unordered_map>

#include "redcyc/errors.hpp"

namespace redcyc::reps {

namespace {

using census::DiagPair;

std::optional<std::vector<std::uint64_t>> template_exponents(const nt::FactoredInt& mf,
                                                             const DiagPair& self,
                                                             const DiagPair& partner) {
    // A member <(1, k)> exists iff some member's canonical pair has first
    // coordinate 1; prefer the entry's own member.
    std::optional<std::uint64_t> k;
    if (self.a == 1 % mf.value)
        k = self.b;
    else if (partner.a == 1 % mf.value)
        k = partner.b;
    if (!k) return std::nullopt;
    std::vector<std::uint64_t> out;
    out.reserve(mf.factors.size());
    for (const auto& f : mf.factors) {
        std::uint64_t P = 1;
        for (std::uint32_t i = 0; i < f.exponent; ++i) P *= f.prime;
        out.push_back(*k % P);
    }
    return out;
}

}  // namespace

std::vector<RepEntry> representatives(const ff::FieldSpec& F, std::uint64_t m) {
    if (m == 0) throw InvalidInput("representatives: m must be positive");
    if ((F.q() - 1) % m != 0) throw NoSuchElement("representatives: m does not divide q-1");
    const nt::FactoredInt mf = nt::factorize(m);
    const ff::FieldElement lambda = F.element_of_order(m);
    const DiagPair scalar_pair{1 % m, 1 % m};

    std::vector<RepEntry> entries;
    for (const DiagPair& s : census::diag_subgroups(m)) {
        DiagPair t = census::swap_pair(m, s);
        if (t < s) continue;  // orbit already handled from its lower member
        DiagPair rep = s;
        if (s != t) {
            // Orbit representative: the member whose sorted element set is
            // smaller. For m = 2 the split class is reported from (1, 0),
            // i.e. generated by dia(-1, 1).
            if (m == 2)
                rep = DiagPair{1, 0};
            else if (census::diag_elements(m, t) < census::diag_elements(m, s))
                rep = t;
        }
        RepEntry e;
        e.m = m;
        e.exponents = rep;
        e.generator = gl2::diag(F, F.pow(lambda, rep.a), F.pow(lambda, rep.b));
        if (s == t) {
            if (rep == scalar_pair) {
                e.type = RepType::I;
            } else {
                e.type = RepType::II;
                if (rep.a != 1)
                    throw InternalError("representatives: fixed subgroup is not <(1,l)>");
                e.involution_exponent = rep.b;
            }
        } else {
            e.type = RepType::III;
            e.type_iii_exponents = template_exponents(mf, rep, rep == s ? t : s);
        }
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const RepEntry& x, const RepEntry& y) {
        if (x.type != y.type) return x.type < y.type;
        return x.exponents < y.exponents;
    });
    return entries;
}

std::optional<std::vector<std::uint64_t>> type_iii_template_form(const RepEntry& entry,
                                                                 const nt::FactoredInt& m) {
    if (entry.type != RepType::III)
        throw InvalidInput("type_iii_template_form: entry is not Type III");
    DiagPair partner = census::swap_pair(m.value, entry.exponents);
    return template_exponents(m, entry.exponents, partner);
}

NormalizerType normalizer_type(std::uint64_t m, const census::DiagPair& exponents) {
    DiagPair c = census::canonical_pair(m, exponents.a, exponents.b);
    return census::swap_pair(m, c) == c ? NormalizerType::full_monomial
                                        : NormalizerType::diagonal_only;
}

bool cross_validate(const ff::FieldSpec& F, std::uint64_t m, std::uint64_t cap) {
    const std::vector<RepEntry> entries = representatives(F, m);
    const auto subgroups = census::enumerate_cyclic_subgroups(F, m, cap);
    const auto classes = census::conjugacy_classes(F, subgroups);

    // Map every subgroup to its class.
    struct KeyHash {
        std::size_t operator()(const std::vector<gl2::Mat2Code>& v) const {
            std::uint64_t h = 1469598103934665603ULL;
            for (const auto& c : v)
                for (std::uint32_t x : c) {
                    h ^= x;
                    h *= 1099511628211ULL;
                }
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_map<std::vector<gl2::Mat2Code>, std::size_t, KeyHash> class_of;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& member : classes[i].members) class_of.emplace(member.elements, i);

    std::vector<std::uint64_t> hits(classes.size(), 0);
    for (const RepEntry& e : entries) {
        gl2::SubgroupKey key = gl2::cyclic_subgroup(F, e.generator);
        auto it = class_of.find(key.elements);
        if (it == class_of.end()) return false;
        ++hits[it->second];
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const bool reducible = classes[i].kind != census::SubgroupKind::irreducible;
        if (hits[i] != (reducible ? 1u : 0u)) return false;
    }
    std::uint64_t reducible_classes = 0;
    for (const auto& cls : classes)
        if (cls.kind != census::SubgroupKind::irreducible) ++reducible_classes;
    return entries.size() == reducible_classes;
}

}  // namespace redcyc::reps
