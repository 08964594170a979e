#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coxcoh/coxeter.hpp"

using namespace coxcoh;

TEST_CASE("basic group structure") {
    auto id = SignedPerm::identity(3);
    CHECK(id * id == id);
    auto s0 = generator(GroupType::B, 0, 3);
    auto s1 = generator(GroupType::B, 1, 3);
    CHECK(s0 * s0 == id);
    CHECK(s1 * s1 == id);
    CHECK((s0 * s1).inverse() == s1 * s0);
    // braid relation (s0 s1)^4 = 1 in B_n
    auto p = s0 * s1;
    CHECK(p * p * p * p == id);

    auto t0 = generator(GroupType::D, 0, 3);
    CHECK(t0.in_D());
    CHECK(!s0.in_D());
    CHECK(t0 * t0 == id);
    // t0 and t1 commute in D_n
    auto t1 = generator(GroupType::D, 1, 3);
    CHECK(t0 * t1 == t1 * t0);
}

TEST_CASE("group orders") {
    CHECK(group_cache(GroupType::B, 2).elements.size() == 8);
    CHECK(group_cache(GroupType::B, 3).elements.size() == 48);
    CHECK(group_cache(GroupType::D, 3).elements.size() == 24);
    CHECK(group_cache(GroupType::D, 4).elements.size() == 192);
}

TEST_CASE("lengths") {
    CHECK(length(SignedPerm::identity(2), GroupType::B) == 0);
    CHECK(length(generator(GroupType::B, 1, 2), GroupType::B) == 1);
    // longest element of B_2 has length 4 (8-element dihedral group)
    int maxlen = 0;
    for (const auto& [w, l] : group_cache(GroupType::B, 2).length)
        maxlen = std::max(maxlen, l);
    CHECK(maxlen == 4);
}

TEST_CASE("length changes by one under a generator") {
    const auto& gc = group_cache(GroupType::B, 3);
    for (const auto& w : gc.elements)
        for (int i = 0; i < 3; ++i) {
            int d = length(w * generator(GroupType::B, i, 3), GroupType::B) -
                    length(w, GroupType::B);
            CHECK(std::abs(d) == 1);
        }
}

TEST_CASE("parabolic subgroups") {
    CHECK(parabolic(0, GroupType::B, 2).size() == 1);
    CHECK(parabolic(0b11, GroupType::B, 2).size() == 8);
    CHECK(parabolic(0b010, GroupType::B, 3).size() == 2);
    CHECK(parabolic(0b011, GroupType::B, 3).size() == 8);   // B_2 inside B_3
    CHECK(parabolic(0b011, GroupType::D, 3).size() == 4);   // t_0 t_1 commute
}

TEST_CASE("min coset reps") {
    // T' = T
    CHECK(min_coset_reps(0b11, 0b11, GroupType::B, 2).size() == 1);
    CHECK(min_coset_reps(0b11, 0b11, GroupType::B, 2)[0] == SignedPerm::identity(2));
    // B_2 mod <s_1>: 4 cosets
    CHECK(min_coset_reps(0b11, 0b10, GroupType::B, 2).size() == 4);
    // trivial T': every element is its own coset
    CHECK(min_coset_reps(0b11, 0, GroupType::B, 2).size() == 8);
}

TEST_CASE("min coset reps partition the group") {
    GenSet T = 0b111, Tp = 0b011;
    auto reps = min_coset_reps(T, Tp, GroupType::B, 3);
    auto wtp = parabolic(Tp, GroupType::B, 3);
    CHECK(reps.size() * wtp.size() == 48);
    std::set<SignedPerm> all;
    for (const auto& r : reps)
        for (const auto& u : wtp) all.insert(r * u);
    CHECK(all.size() == 48);
    // each rep is shortest in its coset
    for (const auto& r : reps)
        for (const auto& u : wtp)
            CHECK(length(r * u, GroupType::B) >= length(r, GroupType::B));
}

TEST_CASE("conjugate genset") {
    auto id = SignedPerm::identity(3);
    CHECK(conjugate_genset(id, 0b101, GroupType::B, 3) == GenSet(0b101));
    // s_0 conjugation in D_n swaps t_0 and t_1: need the ambient B element; here use
    // the D_3 check through an element of D itself: t_0 t_1 t_0 = t_1 fails, so use
    // the published fact indirectly: conjugating {t_0} by the D-element t_2...t_2
    // keeps simplicity. Direct check of the s_0 statement:
    SignedPerm s0;
    s0.img = {-1, 2, 3};
    auto c = conjugate_genset(s0, 0b001, GroupType::D, 3);
    CHECK(c == GenSet(0b010));  // {t_0} -> {t_1}
    auto c2 = conjugate_genset(s0, 0b010, GroupType::D, 3);
    CHECK(c2 == GenSet(0b001));
    auto c3 = conjugate_genset(s0, 0b100, GroupType::D, 3);
    CHECK(c3 == GenSet(0b100));
    // B_3: s_1^{-1} s_0 s_1 is not a standard generator
    auto bad = conjugate_genset(generator(GroupType::B, 1, 3), 0b001, GroupType::B, 3);
    CHECK(!bad.has_value());
}

TEST_CASE("D parity is multiplicative") {
    std::mt19937 rng(7);
    const auto& gc = group_cache(GroupType::B, 3);
    for (int t = 0; t < 50; ++t) {
        const auto& a = gc.elements[rng() % gc.elements.size()];
        const auto& b = gc.elements[rng() % gc.elements.size()];
        CHECK((a * b).in_D() == (a.in_D() == b.in_D()));
    }
}

TEST_CASE("rep choice cannot affect mod-2 counts") {
    // permuting candidate order must give the same (length, lex)-minimal reps
    auto reps = min_coset_reps(0b111, 0b101, GroupType::B, 3);
    auto reps2 = min_coset_reps(0b111, 0b101, GroupType::B, 3);
    CHECK(reps == reps2);
    CHECK(reps.size() == 48 / parabolic(0b101, GroupType::B, 3).size());
}
