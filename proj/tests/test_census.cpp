#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "redcyc/census.hpp"
#include "redcyc/errors.hpp"
#include "redcyc/numtheory.hpp"

using namespace redcyc;
using census::DiagPair;

TEST_CASE("canonical_pair is the least generator over unit scalings") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
        for (std::uint64_t a = 0; a < m; ++a)
            for (std::uint64_t b = 0; b < m; ++b) {
                std::uint64_t oa = m / std::gcd(a, m);
                std::uint64_t ob = m / std::gcd(b, m);
                if (std::lcm(oa, ob) != m) continue;
                DiagPair best{m, m};
                for (std::uint64_t u = 1; u <= m; ++u) {
                    if (std::gcd(u, m) != 1) continue;
                    DiagPair cand{u * a % m, u * b % m};
                    if (cand < best) best = cand;
                }
                if (m == 1) best = {0, 0};
                CHECK(census::canonical_pair(m, a, b) == best);
            }
    }
    CHECK_THROWS_AS(census::canonical_pair(12, 2, 2), InvalidInput);
}

TEST_CASE("diag_subgroups matches the naive element-set census") {
    for (std::uint64_t m : {1,  2,  3,  4,  5,  6,  8,  9,  12, 15,  16,  18,  20, 24,
                            27, 30, 32, 36, 40, 45, 48, 60, 64, 72, 96, 100, 120, 210}) {
        auto fast = census::diag_subgroups(m);
        auto naive = oracle::naive_subgroups(m);
        REQUIRE(fast.size() == naive.size());
        CHECK(std::adjacent_find(fast.begin(), fast.end()) == fast.end());
        std::vector<DiagPair> from_naive;
        for (const auto& s : naive) {
            auto g = oracle::naive_min_generator(m, s);
            from_naive.push_back(DiagPair{g.first, g.second});
        }
        std::sort(from_naive.begin(), from_naive.end());
        CHECK(fast == from_naive);
        for (const auto& p : fast) {
            auto elems = census::diag_elements(m, p);
            CHECK(elems.size() == m);
            CHECK(std::binary_search(naive.begin(), naive.end(), elems));
        }
    }
}

TEST_CASE("diagonal model orbit counts match the naive orbit census") {
    for (std::uint64_t m = 1; m <= 100; ++m) {
        auto naive = oracle::naive_subgroups(m);
        std::uint64_t naive_fixed = 0;
        std::set<oracle::ElemSet> unvisited(naive.begin(), naive.end());
        std::uint64_t naive_orbits = 0;
        for (const auto& s : naive)
            if (oracle::swap_set(s) == s) ++naive_fixed;
        while (!unvisited.empty()) {
            oracle::ElemSet s = *unvisited.begin();
            unvisited.erase(unvisited.begin());
            unvisited.erase(oracle::swap_set(s));
            ++naive_orbits;
        }

        auto model = census::diagonal_model_classes(m);
        CHECK(model.count == naive_orbits);
        CHECK(model.fixed_subgroups == naive_fixed);
        CHECK(model.total_subgroups == naive.size());
        CHECK(model.count == census::diagonal_model_count(m));
        CHECK(model.orbits.size() == model.count);
        std::uint64_t members = 0, fixed = 0;
        for (const auto& orbit : model.orbits) {
            members += orbit.size;
            if (orbit.size == 1) ++fixed;
        }
        CHECK(members == model.total_subgroups);
        CHECK(fixed == model.fixed_subgroups);
    }
}

TEST_CASE("diagonal model examples") {
    CHECK(census::diagonal_model_classes(1).count == 1);
    CHECK(census::diagonal_model_classes(6).count == 7);
    CHECK(census::diagonal_model_classes(4).count == 4);
    auto model = census::diagonal_model_classes(6);
    std::vector<DiagPair> fixed;
    for (const auto& orbit : model.orbits)
        if (orbit.size == 1) fixed.push_back(orbit.members[0]);
    CHECK(fixed == std::vector<DiagPair>{{1, 1}, {1, 5}});
}

TEST_CASE("burnside_count") {
    CHECK(census::burnside_count(1) == 1);
    CHECK(census::burnside_count(2) == 2);
    CHECK(census::burnside_count(12) == 14);
    for (std::uint64_t m = 1; m <= 100; ++m)
        CHECK(census::burnside_count(m) == census::diagonal_model_count(m));
}

TEST_CASE("rho counts the enumerated subgroups up to 10^4") {
    for (std::uint64_t m = 1; m <= 10000; ++m)
        CHECK(census::diag_subgroup_total(m) == nt::rho(nt::factorize(m)));
}

TEST_CASE("fix_swap_subgroups") {
    auto f12 = census::fix_swap_subgroups(12);
    REQUIRE(f12.size() == 4);
    std::vector<std::uint64_t> ls;
    for (const auto& f : f12) ls.push_back(f.l);
    CHECK(ls == std::vector<std::uint64_t>{1, 5, 7, 11});

    auto f2 = census::fix_swap_subgroups(2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].l == 1);
    CHECK(f2[0].subgroup == DiagPair{1, 1});

    auto f3 = census::fix_swap_subgroups(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].l == 1);
    CHECK(f3[1].l == 2);

    for (std::uint64_t m = 1; m <= 2000; ++m) {
        auto fs = census::fix_swap_subgroups(m);
        CHECK(fs.size() == nt::delta(nt::factorize(m)));
        CHECK(fs.size() == nt::unit_involutions(m).size());
    }
}

TEST_CASE("fix bijectivity at the level of set sizes") {
    for (std::uint64_t m = 1; m <= 1000; ++m) {
        bool bij = census::fix_swap_subgroups(m).size() == oracle::naive_phi(m);
        CHECK(nt::fix_bijectivity_predicate(nt::factorize(m)) == bij);
    }
}

// ---------------------------------------------------------------------------
// Matrix census.

TEST_CASE("enumerate_cyclic_subgroups basics") {
    ff::FieldSpec f3 = ff::FieldSpec::make(3, 1);
    auto trivial = census::enumerate_cyclic_subgroups(f3, 1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].order == 1);

    CHECK_THROWS_AS(census::enumerate_cyclic_subgroups(f3, 3), UnsupportedCharacteristic);
    CHECK_THROWS_AS(census::enumerate_cyclic_subgroups(f3, 2, 10), ResourceLimit);
}

TEST_CASE("q=5, m=8: irreducible subgroups only, single class") {
    ff::FieldSpec f5 = ff::FieldSpec::make(5, 1);
    auto subs = census::enumerate_cyclic_subgroups(f5, 8);
    CHECK(!subs.empty());
    auto classes = census::conjugacy_classes(f5, subs);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].kind == census::SubgroupKind::irreducible);
    CHECK(classes[0].class_size == subs.size());
    CHECK(census::irreducible_class_check(f5, 8));
}

TEST_CASE("q=7, m=3: three reducible classes, no irreducible ones") {
    ff::FieldSpec f7 = ff::FieldSpec::make(7, 1);
    auto rep = census::census_for(f7, 3);
    CHECK(rep.reducible_classes == 3);
    CHECK(rep.irreducible_classes == 0);
    CHECK(rep.formula_n == 3);
    CHECK(rep.match == true);
    CHECK(census::irreducible_class_check(f7, 3));
}

TEST_CASE("q=3, m=8 irreducible single class") {
    ff::FieldSpec f3 = ff::FieldSpec::make(3, 1);
    CHECK(census::irreducible_class_check(f3, 8));
}

TEST_CASE("scalar subgroups form singleton classes") {
    ff::FieldSpec f7 = ff::FieldSpec::make(7, 1);
    for (std::uint64_t m : {1, 2, 3, 6}) {
        auto rep = census::census_for(f7, m);
        for (const auto& cls : rep.classes)
            if (cls.kind == census::SubgroupKind::scalar) CHECK(cls.class_size == 1);
    }
}

TEST_CASE("q=7, m=6 census, cross-checked against class-size accounting") {
    ff::FieldSpec f7 = ff::FieldSpec::make(7, 1);
    auto rep = census::census_for(f7, 6);
    CHECK(rep.reducible_classes == 7);
    CHECK(rep.irreducible_classes == 0);

    // Independent accounting: the scalar class is a singleton, the one
    // swap-fixed non-scalar class has size |GL|/|M| and the other five
    // have size |GL|/|D|, with |GL| = 2016, |M| = 72, |D| = 36.
    std::uint64_t predicted = 1 + 1 * (2016 / 72) + 5 * (2016 / 36);
    CHECK(predicted == 309);
    CHECK(rep.total_subgroups == predicted);
    std::uint64_t by_class = 0;
    for (const auto& cls : rep.classes) by_class += cls.class_size;
    CHECK(by_class == rep.total_subgroups);
}

TEST_CASE("verify_field q=7") {
    ff::FieldSpec f7 = ff::FieldSpec::make(7, 1);
    auto reports = census::verify_field(f7);
    std::vector<std::uint64_t> expected_m;
    for (std::uint64_t m = 1; m <= 48; ++m)
        if (48 % m == 0) expected_m.push_back(m);
    REQUIRE(reports.size() == expected_m.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].m == expected_m[i]);
        CHECK(census::report_ok(reports[i]));
        std::uint64_t by_class = 0;
        for (const auto& cls : reports[i].classes) by_class += cls.class_size;
        CHECK(by_class == reports[i].total_subgroups);
        if (6 % reports[i].m == 0) {
            CHECK(reports[i].formula_n.has_value());
            CHECK(reports[i].match == true);
        } else {
            CHECK_FALSE(reports[i].formula_n.has_value());
            CHECK(reports[i].irreducible_classes == 1);
        }
    }
}

TEST_CASE("verify_field q=4 (characteristic 2)") {
    ff::FieldSpec f4 = ff::FieldSpec::make(2, 2);
    auto reports = census::verify_field(f4);
    for (const auto& rep : reports) {
        CHECK(census::report_ok(rep));
        if (rep.m == 3) CHECK(rep.formula_n == 3);
    }
}

TEST_CASE("BFS classes equal exhaustive-conjugation classes for small q") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
        ff::FieldSpec F = ff::FieldSpec::from_designation(std::to_string(q));
        std::vector<gl2::Mat2> gl;
        for (std::uint64_t c = 0; c < q * q * q * q; ++c) {
            gl2::Mat2 g = gl2::decode(
                F, {static_cast<std::uint32_t>(c / (q * q * q)),
                    static_cast<std::uint32_t>(c / (q * q) % q),
                    static_cast<std::uint32_t>(c / q % q), static_cast<std::uint32_t>(c % q)});
            if (!F.is_zero(gl2::det(F, g))) gl.push_back(g);
        }
        for (std::uint64_t m = 1; m <= q * q - 1; ++m) {
            if ((q * q - 1) % m != 0 || m % F.p() == 0) continue;
            auto subs = census::enumerate_cyclic_subgroups(F, m);
            auto classes = census::conjugacy_classes(F, subs);

            std::map<std::vector<gl2::Mat2Code>, std::size_t> index;
            for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i].elements] = i;
            // One full orbit per class: conjugate a representative by every
            // group element.
            std::vector<bool> visited(subs.size(), false);
            std::vector<std::set<std::size_t>> exhaustive;
            for (std::size_t i = 0; i < subs.size(); ++i) {
                if (visited[i]) continue;
                std::vector<gl2::Mat2> mats;
                for (const auto& code : subs[i].elements) mats.push_back(gl2::decode(F, code));
                std::set<std::size_t> orbit;
                for (const auto& g : gl) {
                    std::vector<gl2::Mat2Code> image;
                    for (const auto& h : mats)
                        image.push_back(gl2::encode(F, gl2::conjugate(F, g, h)));
                    std::sort(image.begin(), image.end());
                    orbit.insert(index.at(image));
                }
                for (std::size_t j : orbit) visited[j] = true;
                exhaustive.push_back(std::move(orbit));
            }
            REQUIRE(classes.size() == exhaustive.size());
            std::set<std::set<std::size_t>> bfs_classes;
            for (const auto& cls : classes) {
                std::set<std::size_t> members;
                for (const auto& member : cls.members) members.insert(index.at(member.elements));
                bfs_classes.insert(std::move(members));
            }
            CHECK(bfs_classes == std::set<std::set<std::size_t>>(exhaustive.begin(),
                                                                 exhaustive.end()));
        }
    }
}

TEST_CASE("four independent counts agree for all tested fields") {
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
        ff::FieldSpec F = ff::FieldSpec::from_designation(std::to_string(q));
        for (std::uint64_t m = 1; m < q; ++m) {
            if ((q - 1) % m != 0) continue;
            auto rep = census::census_for(F, m);
            std::uint64_t formula = nt::count_reducible_classes(nt::factorize(m)).n_classes;
            CHECK(rep.reducible_classes == formula);
            CHECK(census::diagonal_model_count(m) == formula);
            CHECK(census::burnside_count(m) == formula);
        }
    }
}
