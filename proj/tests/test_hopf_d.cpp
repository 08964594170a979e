#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxcoh/foxneuwirth.hpp"
#include "coxcoh/hopf_d.hpp"

using namespace coxcoh;

static GatheredBlockB G(int k, long m, int t = 1) { return GatheredBlockB::gamma(k, m, t); }
static GatheredBlockB D(long n, int t = 1) { return GatheredBlockB::delta(n, t); }

static ElementD cm(std::vector<GatheredBlockB> blocks, Charge c) {
    return ElementD::monomial(ChargedMonomial{*normalize_blocks(std::move(blocks)), c});
}

TEST_CASE("classification") {
    CHECK(classify(HopfMonomialB{{G(1, 1)}}) == MonClass::Split);
    CHECK(classify(*normalize_blocks({D(1), GatheredBlockB::unit(2)})) == MonClass::Zero);
    CHECK(classify(*normalize_blocks({G(1, 1), GatheredBlockB::unit(1)})) == MonClass::Neutral);
    CHECK(classify(HopfMonomialB{{D(2)}}) == MonClass::Neutral);
    CHECK(classify(*normalize_blocks({D(2), D(1, 2)})) == MonClass::Zero);
    CHECK(classify(*normalize_blocks({D(2, 2), D(1)})) == MonClass::Neutral);
}

TEST_CASE("restriction map") {
    auto g = ElementB::monomial(HopfMonomialB{{G(1, 1)}});
    CHECK(rho(g) == gamma_sign(1, 1, false) + gamma_sign(1, 1, true));
    CHECK(delta0(1, 2).is_zero());
    auto n31 = rho(odot(ElementB::monomial(HopfMonomialB{{G(1, 1)}}),
                        ElementB::monomial(HopfMonomialB{{GatheredBlockB::unit(1)}})));
    REQUIRE(n31.mons.size() == 1);
    CHECK(n31.mons.begin()->charge == Charge::Neutral);
    // the empty unit restricts to the invariant sum of the two unit classes
    CHECK(rho(ElementB::unit()) == one_plus() + one_minus());
}

TEST_CASE("involution and transfer") {
    CHECK(iota_d(gamma_sign(2, 1, false)) == gamma_sign(2, 1, true));
    CHECK(iota_d(iota_d(gamma_sign(1, 2, true))) == gamma_sign(1, 2, true));
    CHECK(iota_d(delta0(2, 1)) == delta0(2, 1));
    CHECK(tr_d(gamma_sign(1, 1, false)) == ElementB::monomial(HopfMonomialB{{G(1, 1)}}));
    CHECK(tr_d(delta0(2, 0)).is_zero());
    // even covering index: transfer of any restriction vanishes
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& m : basis_b(n, d))
                CHECK(tr_d(rho(ElementB::monomial(m))).is_zero());
}

TEST_CASE("transfer product") {
    CHECK(odot_d(gamma_sign(1, 1, false), gamma_sign(1, 2, false)) ==
          gamma_sign(1, 3, false));
    CHECK(odot_d(gamma_sign(1, 1, false), gamma_sign(1, 1, true)).is_zero());
    // merge coefficient: binom(2,1) is even, binom(3,1) is odd
    CHECK(odot_d(gamma_sign(2, 1, false), gamma_sign(2, 1, true)).is_zero());
    CHECK(odot_d(gamma_sign(2, 1, false), gamma_sign(2, 2, true)) ==
          gamma_sign(2, 3, true));
    CHECK(odot_d(one_minus(), one_minus()) == one_plus());
    CHECK(odot_d(delta0(2, 0), delta0(2, 0)).is_zero());
    CHECK(odot_d(delta0(2, 1), one_minus()) == delta0(2, 1));
    // 1- absorption computes the involution
    for (auto x : {gamma_sign(1, 2, false), delta0(3, 1), gamma_sign(2, 1, true)})
        CHECK(odot_d(one_minus(), x) == iota_d(x));
    // signed times invariant stays invariant
    auto m = odot_d(gamma_sign(1, 1, false), delta0(2, 0));
    REQUIRE(m.mons.size() == 1);
    CHECK(m.mons.begin()->charge == Charge::Neutral);
    CHECK(odot_d(gamma_sign(1, 1, false), delta0(2, 0)) ==
          odot_d(gamma_sign(1, 1, true), delta0(2, 0)));
}

TEST_CASE("transfer against restriction") {
    // b odot rho(y) = rho(tr(b) odot y)
    std::vector<ChargedMonomial> charged;
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& c : basis_d(n, d))
                if (c.charge != Charge::Neutral) charged.push_back(c);
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto& b = charged[rng() % charged.size()];
        auto bb = basis_b(1 + rng() % 3, rng() % 4);
        if (bb.empty()) continue;
        auto y = ElementB::monomial(bb[rng() % bb.size()]);
        CHECK(odot_d(ElementD::monomial(b), rho(y)) ==
              rho(odot(tr_d(ElementD::monomial(b)), y)));
    }
    // the transfer of a signed power class picks up lower columns
    CHECK(tr_d(gamma_sign(1, 1, false)) == ElementB::monomial(HopfMonomialB{{G(1, 1)}}));
    CHECK(tr_d(cm({G(1, 1, 3)}, Charge::Plus)) ==
          ElementB::monomial(HopfMonomialB{{G(1, 1, 3)}}) +
              ElementB::monomial(HopfMonomialB{{GatheredBlockB{2, {1, 1}}}}));
    for (auto x : {gamma_sign(2, 1, true), delta0(3, 1), one_minus()})
        CHECK(rho(tr_d(x)) == x + iota_d(x));
}

TEST_CASE("cup product relations") {
    CHECK(cup_d(gamma_sign(1, 1, false), gamma_sign(1, 1, true)) == delta0(2, 0));
    CHECK(cup_d(gamma_sign(2, 1, false), gamma_sign(2, 1, true)).is_zero());
    CHECK(cup_d(gamma_sign(1, 1, false), gamma_sign(1, 1, false)) ==
          cm({G(1, 1, 2)}, Charge::Plus));
    // m = 2 case of the gamma_1 mixed relation
    CHECK(cup_d(gamma_sign(1, 2, false), gamma_sign(1, 2, true)) ==
          cm({G(1, 1, 2), D(2)}, Charge::Neutral));
    // cross-component products vanish
    CHECK(cup_d(gamma_sign(1, 1, false), delta0(3, 0)).is_zero());
    CHECK(cup_d(one_plus(), one_minus()).is_zero());
    CHECK(cup_d(one_minus(), one_minus()) == one_minus());
    // one-column-delta times gamma: charge passes through
    CHECK(cup_d(delta0(2, 0), gamma_sign(1, 1, true)) ==
          cm({GatheredBlockB{2, {1, 1}}}, Charge::Minus));
    // two-column invariant times full gamma: splits into two charged columns
    CHECK(cup_d(delta0(2, 2), gamma_sign(1, 2, false)) ==
          cm({GatheredBlockB{2, {1, 1}}, G(1, 1)}, Charge::Plus));
    CHECK(cup_d(delta0(2, 4), gamma_sign(2, 1, false) + gamma_sign(1, 3, false)) ==
          cm({GatheredBlockB{2, {1, 1}}, G(1, 2)}, Charge::Plus));
}

TEST_CASE("cup with units and neutral lifts") {
    auto x = cm({G(1, 1), GatheredBlockB::unit(1)}, Charge::Neutral);
    CHECK(cup_d(rho(ElementB::monomial(HopfMonomialB{{GatheredBlockB::unit(3)}})), x) == x);
    // restriction is a ring homomorphism for cup
    for (int n = 2; n <= 4; ++n)
        for (int d1 = 0; d1 <= 2; ++d1)
            for (int d2 = 0; d2 <= 2; ++d2)
                for (const auto& a : basis_b(n, d1))
                    for (const auto& b : basis_b(n, d2)) {
                        auto lhs = cup_d(rho(ElementB::monomial(a)), rho(ElementB::monomial(b)));
                        auto rhs = rho(cup(ElementB::monomial(a), ElementB::monomial(b)));
                        REQUIRE(lhs == rhs);
                    }
}

TEST_CASE("coproduct formulas") {
    auto c = coproduct_d(gamma_sign(1, 1, false));
    TensorD want;
    auto gp = *gamma_sign(1, 1, false).mons.begin();
    auto gm = *gamma_sign(1, 1, true).mons.begin();
    auto op = *one_plus().mons.begin();
    auto om = *one_minus().mons.begin();
    want.toggle(op, gp);
    want.toggle(gp, op);
    want.toggle(om, gm);
    want.toggle(gm, om);
    CHECK(c == want);

    auto c2 = coproduct_d(delta0(2, 1));
    REQUIRE(c2.terms.size() == 6);
    for (const auto& [a, b] : c2.terms) {
        CHECK(a.component() + b.component() == 3);
        if (a.component() > 0) CHECK(a.charge != Charge::Minus);
        if (b.component() > 0) CHECK(b.charge != Charge::Minus);
    }
    CHECK(coproduct_d(rho(ElementB::monomial(HopfMonomialB{{GatheredBlockB::unit(2)}})))
              .terms.size() == 5);
    // conjugation acts on a single tensor factor of the coproduct
    auto iota_left = [](const TensorD& t) {
        TensorD r;
        for (const auto& [a, b] : t.terms)
            r.toggle(*iota_d(ElementD::monomial(a)).mons.begin(), b);
        return r;
    };
    for (auto x : {gamma_sign(1, 2, false), gamma_sign(2, 1, true),
                   cm({G(1, 1, 2)}, Charge::Minus), delta0(2, 2)}) {
        auto dx = coproduct_d(x);
        CHECK(coproduct_d(iota_d(x)) == iota_left(dx));
        CHECK(tensor_iota_d(dx) == dx);
    }
}

static std::vector<ChargedMonomial> dpool(int nmax, int dmax) {
    std::vector<ChargedMonomial> p;
    for (int n = 1; n <= nmax; ++n)
        for (int d = 0; d <= dmax; ++d)
            for (const auto& c : basis_d(n, d)) p.push_back(c);
    return p;
}

TEST_CASE("cup bialgebra and distributivity") {
    auto p = dpool(3, 3);
    std::mt19937 rng(23);
    for (int t = 0; t < 12; ++t) {
        auto x = ElementD::monomial(p[rng() % p.size()]);
        auto y = ElementD::monomial(p[rng() % p.size()]);
        auto z = ElementD::monomial(p[rng() % p.size()]);
        CHECK(cup_d(x, y) == cup_d(y, x));
        CHECK(cup_d(cup_d(x, y), z) == cup_d(x, cup_d(y, z)));
        CHECK(coproduct_d(cup_d(x, y)) == tensor_cup_d(coproduct_d(x), coproduct_d(y)));
        CHECK(iota_d(cup_d(x, y)) == cup_d(iota_d(x), iota_d(y)));
        // Hopf distributivity
        ElementD dist;
        for (const auto& [a, b] : coproduct_d(x).terms)
            dist = dist + odot_d(cup_d(ElementD::monomial(a), y),
                                 cup_d(ElementD::monomial(b), z));
        CHECK(cup_d(x, odot_d(y, z)) == dist);
    }
}

TEST_CASE("transfer coproduct fails as a bialgebra but obeys the peeling law") {
    // witness: gamma^+_{1,1} odot the invariant column of width 2
    auto b = gamma_sign(1, 1, false);
    auto w = delta0(2, 0);
    auto lhs = coproduct_d(odot_d(b, w));
    auto naive = tensor_odot_d(coproduct_d(b), coproduct_d(w));
    CHECK(lhs != naive);
    // peeling law with the truncated block coproduct reproduces the answer
    auto law = tensor_odot_d(block_coproduct_prime(G(1, 1)), coproduct_d(w));
    CHECK(lhs == law);
    // the law holds on transfer products of charged columns generally; a minus
    // column against x is the plus column against iota(x)
    auto p = dpool(3, 3);
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        const auto& bm = p[rng() % p.size()];
        if (bm.charge == Charge::Neutral || bm.base.blocks.size() != 1) continue;
        auto xe = ElementD::monomial(p[rng() % p.size()]);
        auto prod = odot_d(ElementD::monomial(bm), xe);
        auto dx = bm.charge == Charge::Minus ? coproduct_d(iota_d(xe)) : coproduct_d(xe);
        CHECK(coproduct_d(prod) ==
              tensor_odot_d(block_coproduct_prime(bm.base.blocks[0]), dx));
    }
}

TEST_CASE("basis") {
    auto b21 = basis_d(2, 1);
    REQUIRE(b21.size() == 2);
    CHECK(b21[0].charge != b21[1].charge);
    auto b31 = basis_d(3, 1);
    REQUIRE(b31.size() == 1);
    CHECK(b31[0].charge == Charge::Neutral);
    auto b32 = basis_d(3, 2);
    REQUIRE(b32.size() == 2);
    for (const auto& m : b32) CHECK(m.charge == Charge::Neutral);
    CHECK(basis_d(0, 0).size() == 1);
}

TEST_CASE("basis size matches cohomology rank") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d)
            CHECK((int)basis_d(n, d).size() == betti(Complex::Dprime, n, d));
    CHECK((int)basis_d(4, 2).size() == betti(Complex::Dprime, 4, 2));
}

// quotient of a type-B cochain to the two-coset complex
static FnCochain rho_chain(const FnCochain& x, int n) {
    auto r = FnCochain::zero(Complex::Dprime, n);
    for (const auto& c : x.support) {
        r = r + FnCochain::basis(Complex::Dprime, FnCell{0, c.t});
        r = r + FnCochain::basis(Complex::Dprime, FnCell{1, c.t});
    }
    return r;
}

TEST_CASE("chain level oracle") {
    // gamma^+ odot unit = the invariant class of the unit-padded gamma monomial
    auto lhs = odot_chain(phi(gplus_cochain(1, 1)),
                          rho_chain(FnCochain::basis(Complex::B, FnCell{0, FnTuple{{0}}}), 1));
    auto rhs = rho_chain(odot_chain(gamma_cochain(1, 1),
                                    FnCochain::basis(Complex::B, FnCell{0, FnTuple{{0}}})),
                         3);
    CHECK(same_class(lhs, rhs));
    // gamma^+ odot gamma^+ = 0 in cohomology (binomial coefficient is even)
    auto sq = odot_chain(phi(gplus_cochain(1, 1)), phi(gplus_cochain(1, 1)));
    CHECK(same_class(sq, FnCochain::zero(Complex::Dprime, 4)));
    // the coproduct of the charged gamma generator has no middle terms
    auto terms = delta_chain(Complex::Dprime, 2, FnCell{0, FnTuple{{0, 1}}});
    for (const auto& [a, b] : terms) {
        long ca = (long)a.support.begin()->t.a.size();
        CHECK((ca == 0 || ca == 2));
    }
    // iota at chain level flips the coset bit of the charged generator
    CHECK(iota_prime(phi(gplus_cochain(1, 1))) == phi(gminus_cochain(1, 1)));
}

TEST_CASE("poincare series") {
    auto p2 = poincare_d(2, 3);
    CHECK(p2 == std::vector<int>{1, 2, 3, 4});
    auto p3 = poincare_d(3, 2);
    CHECK(p3 == std::vector<int>{1, 1, 2});
}

TEST_CASE("printing") {
    CHECK(one_plus().mons.begin()->str() == "e+");
    CHECK(delta0(2, 1).mons.begin()->str() == "(d2 o u1)^0");
    CHECK(gamma_sign(1, 2, true).mons.begin()->str() == "(g1_2)^-");
}
