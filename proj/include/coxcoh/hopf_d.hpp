#pragma once
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxcoh/hopf_b.hpp"

namespace coxcoh {

// charge of a monomial over the index-2 subgroup family:
// Neutral = iota-invariant restriction class, Plus/Minus = the two halves of a
// full-width gamma monomial (empty base: the two unit classes e+/e-)
enum class Charge { Neutral, Plus, Minus };

struct ChargedMonomial {
    HopfMonomialB base;
    Charge charge = Charge::Plus;

    long component() const { return base.component(); }
    long degree() const { return base.degree(); }
    auto operator<=>(const ChargedMonomial&) const = default;
    std::string str() const;
};

struct ElementD {
    std::set<ChargedMonomial> mons;

    static ElementD zero() { return {}; }
    static ElementD monomial(ChargedMonomial m);
    bool is_zero() const { return mons.empty(); }
    ElementD operator+(const ElementD& o) const;
    bool operator==(const ElementD& o) const = default;
    void toggle(const ChargedMonomial& m);
    std::string str() const;
};

struct TensorD {
    std::set<std::pair<ChargedMonomial, ChargedMonomial>> terms;

    TensorD operator+(const TensorD& o) const;
    bool operator==(const TensorD& o) const = default;
    void toggle(const ChargedMonomial& a, const ChargedMonomial& b);
};

// how a distinct-profile monomial restricts: to zero, to a single invariant
// class, or to a plus/minus pair
enum class MonClass { Zero, Neutral, Split };
MonClass classify(const HopfMonomialB& m);

ElementD one_plus();
ElementD one_minus();
ElementD delta0(int n, int m);                    // restriction of d_n o u_m
ElementD gamma_sign(int k, int m, bool minus);

ElementD rho(const ElementB& x);                  // restriction along the index-2 inclusion
ElementD iota_d(const ElementD& x);               // conjugation involution
ElementB tr_d(const ElementD& x);                 // transfer back

ElementD odot_d(const ElementD& x, const ElementD& y);
ElementD cup_d(const ElementD& x, const ElementD& y);
TensorD coproduct_d(const ElementD& x);

// the (p, n-p) piece of the coproduct of one monomial
TensorD coproduct_component(const ChargedMonomial& m, long p);

// coproduct of one charged column, and its left-positive truncation used by
// the peeling law for transfer products
TensorD block_coproduct(const GatheredBlockB& b, bool minus);
TensorD block_coproduct_prime(const GatheredBlockB& b);

TensorD tensor_odot_d(const TensorD& x, const TensorD& y);
TensorD tensor_cup_d(const TensorD& x, const TensorD& y);
TensorD tensor_swap_d(const TensorD& x);
TensorD tensor_iota_d(const TensorD& x);

std::vector<ChargedMonomial> basis_d(int n, int d);
std::vector<int> poincare_d(int n, int dmax);

}  // namespace coxcoh
