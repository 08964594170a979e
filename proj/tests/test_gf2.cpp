#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxcoh/gf2.hpp"

using namespace coxcoh;

TEST_CASE("rank basics") {
    BitMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i);
    CHECK(id.rank() == 3);

    BitMatrix z(4, 7);
    CHECK(z.rank() == 0);

    BitMatrix rep(2, 2);
    rep.set(0, 0);
    rep.set(1, 0);
    CHECK(rep.rank() == 1);
}

TEST_CASE("solve basics") {
    BitMatrix id(2, 2);
    id.set(0, 0);
    id.set(1, 1);
    auto x = id.solve({1, 0});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<uint8_t>{1, 0});

    BitMatrix z(2, 2);
    CHECK(!z.solve({1, 0}).has_value());

    // columns (1,1) and (0,1); rhs (1,0)  =>  x = (1,1)
    BitMatrix m(2, 2);
    m.set(0, 0);
    m.set(1, 0);
    m.set(1, 1);
    auto y = m.solve({1, 0});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<uint8_t>{1, 1});
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 8; ++trial) {
        int r = 1 + (int)(rng() % 200), c = 1 + (int)(rng() % 200);
        BitMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 2) m.set(i, j);
        CHECK(m.rank() + m.nullity() == c);
    }
}

TEST_CASE("triplet roundtrip") {
    BitMatrix m(3, 5);
    m.set(0, 4);
    m.set(2, 1);
    auto t = m.to_triplets();
    CHECK(t.substr(0, 4) == "3 5\n");
    auto m2 = BitMatrix::from_triplets(t);
    CHECK(m2.rows() == 3);
    CHECK(m2.cols() == 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) CHECK(m.get(i, j) == m2.get(i, j));
}

TEST_CASE("poly arithmetic") {
    auto x = Gf2Poly::var(2, 0), y = Gf2Poly::var(2, 1);
    CHECK((x * x).str({"x", "y"}) == "x^2");
    auto s = x + y;
    CHECK(s * s == x * x + y * y);  // Frobenius
    auto u = Gf2Poly::one(2);
    CHECK(x * (x + u) * u == x * x + x);
    CHECK((x + x).is_zero());
}

TEST_CASE("total steenrod") {
    auto x = Gf2Poly::var(2, 0), y = Gf2Poly::var(2, 1);
    CHECK(total_steenrod(x) == x + x * x);
    CHECK(total_steenrod(x * y) == x * y + x * x * y + x * y * y + x * x * y * y);
    CHECK(total_steenrod(Gf2Poly::one(2)) == Gf2Poly::one(2));
}

TEST_CASE("total steenrod is multiplicative") {
    std::mt19937 rng(99);
    auto rand_poly = [&](int nv) {
        Gf2Poly p(nv);
        int k = 1 + rng() % 4;
        for (int t = 0; t < k; ++t) {
            std::vector<int> e(nv);
            for (int i = 0; i < nv; ++i) e[i] = rng() % 3;
            p.toggle(e);
        }
        return p;
    };
    for (int t = 0; t < 20; ++t) {
        auto p = rand_poly(3), q = rand_poly(3);
        CHECK(total_steenrod(p * q) == total_steenrod(p) * total_steenrod(q));
    }
}

TEST_CASE("sq components") {
    auto x = Gf2Poly::var(1, 0);
    auto p = x * x * x;
    CHECK(sq_component(p, 0) == p);
    CHECK(sq_component(p, 3) == p * p);
}

TEST_CASE("binom2 via Lucas") {
    CHECK(binom2(1, 1) == 0);  // C(2,1)
    CHECK(binom2(2, 1) == 1);  // C(3,1)
    CHECK(binom2(2, 2) == 0);  // C(4,2)
}
