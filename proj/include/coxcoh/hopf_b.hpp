#pragma once
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxcoh/gf2.hpp"

namespace coxcoh {

// One skyline column delta_M^{t0} * prod_k gamma_{k,M/2^k}^{tk}.
// profile = (t_0, t_1, ..., t_nb) with trailing zeros trimmed; empty = unit 1_M.
struct GatheredBlockB {
    long width = 1;
    std::vector<int> profile;

    static GatheredBlockB unit(long m) { return GatheredBlockB{m, {}}; }
    static GatheredBlockB delta(long n, int t = 1);
    static GatheredBlockB gamma(int k, long m, int t = 1);

    int nb() const;  // largest k with t_k != 0 (0 for unit and pure-delta)
    long degree() const;
    bool is_unit() const { return profile.empty(); }
    bool is_pure_delta() const;  // only t_0 != 0
    void trim();
    bool valid() const;
    auto operator<=>(const GatheredBlockB&) const = default;
};

// canonical column order: decreasing width, then lex profile
bool block_canon_less(const GatheredBlockB& a, const GatheredBlockB& b);

struct HopfMonomialB {
    std::vector<GatheredBlockB> blocks;  // canonical order, distinct profiles

    long component() const;
    long degree() const;
    auto operator<=>(const HopfMonomialB&) const = default;
    std::string str() const;
};

struct ElementB {
    std::set<HopfMonomialB> mons;

    static ElementB zero() { return {}; }
    static ElementB monomial(HopfMonomialB m);
    static ElementB unit() { return monomial(HopfMonomialB{}); }  // 1_0
    bool is_zero() const { return mons.empty(); }
    ElementB operator+(const ElementB& o) const;
    bool operator==(const ElementB& o) const = default;
    void toggle(const HopfMonomialB& m);
    std::string str() const;
};

// GF(2) span of monomial pairs (the image of the coproduct).
struct TensorB {
    std::set<std::pair<HopfMonomialB, HopfMonomialB>> terms;

    TensorB operator+(const TensorB& o) const;
    bool operator==(const TensorB& o) const = default;
    void toggle(const HopfMonomialB& a, const HopfMonomialB& b);
};

// Transfer merge of two equal-profile blocks; coefficient binom(m+m', m) mod 2
// measured in 2^{nb}-wide units.
ElementB merge_blocks(const GatheredBlockB& a, const GatheredBlockB& b);

// Canonical form of a block list: merge equal profiles, sort; null when the
// binomial coefficient vanishes.
std::optional<HopfMonomialB> normalize_blocks(std::vector<GatheredBlockB> blocks);

ElementB odot(const ElementB& x, const ElementB& y);
TensorB coproduct(const ElementB& x);
ElementB cup(const ElementB& x, const ElementB& y);

TensorB tensor_odot(const TensorB& x, const TensorB& y);
TensorB tensor_cup(const TensorB& x, const TensorB& y);
TensorB tensor_swap(const TensorB& x);

std::vector<HopfMonomialB> basis_b(int n, int d);
std::vector<int> poincare_b(int n, int dmax);

std::string render_ascii(const HopfMonomialB& m);
std::string render_svg(const HopfMonomialB& m);

}  // namespace coxcoh
