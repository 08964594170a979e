#pragma once
#include <set>
#include <utility>
#include <vector>

#include "coxcoh/coxeter.hpp"
#include "coxcoh/gf2.hpp"

namespace coxcoh {

enum class Complex { B, D, Dprime };

// Basis cochain [a_0:...:a_{n-1}]; degree = sum of entries.
// Flag correspondence: Gamma_r = { i : a_i >= r }.
struct FnTuple {
    std::vector<int> a;
    int degree() const;
    auto operator<=>(const FnTuple&) const = default;
};

// Dprime basis carries an s_0-coset bit; eps = 0 for B and D.
struct FnCell {
    int eps = 0;
    FnTuple t;
    auto operator<=>(const FnCell&) const = default;
};

struct FnCochain {
    int n = 0;
    Complex variant = Complex::B;
    std::set<FnCell> support;

    static FnCochain zero(Complex v, int n) { return FnCochain{n, v, {}}; }
    static FnCochain basis(Complex v, FnCell c);
    void toggle(const FnCell& c);
    FnCochain operator+(const FnCochain& o) const;
    bool operator==(const FnCochain& o) const = default;
    int degree() const;  // -1 when empty
};

struct KBlock {
    int start, end;  // inclusive indices
    int k;
    auto operator<=>(const KBlock&) const = default;
};

// All n-tuples of nonnegative integers summing to d, lex order.
std::vector<FnTuple> cells(Complex v, int n, int d);
// Basis dimension of FN^d (doubled for Dprime).
int cell_space_dim(Complex v, int n, int d);
int cell_index(Complex v, int n, const FnCell& c);

// Degree d -> d+1 map; entry (row = cell of degree d, col = cell of degree d+1).
const BitMatrix& coboundary(Complex v, int n, int d);

int betti(Complex v, int n, int d);

std::vector<KBlock> principal_kblocks(const FnTuple& a, int k);

// Chain-level coproduct of a single basis cell; component splits at admissible
// positions, endpoints giving unit factors.
std::vector<std::pair<FnCochain, FnCochain>> delta_chain(Complex v, int n,
                                                         const FnCell& c);

// Chain-level transfer product (B and Dprime), extended bilinearly.
FnCochain odot_chain(const FnCochain& x, const FnCochain& y);

// Cochain homotopy equivalence FN_D -> FN'_D and the two involutions.
FnCochain phi(const FnCochain& x);
FnCochain iota_fn(const FnCochain& x);     // FN_D: swap a_0, a_1
FnCochain iota_prime(const FnCochain& x);  // FN'_D: flip the coset bit

// gamma_{k,m} and delta_n cochains in FN_B; g^{+/-}_{k,m} in FN'_D.
FnCochain gamma_cochain(int k, int m);
FnCochain delta_cochain(int n);
FnCochain gplus_cochain(int k, int m);
FnCochain gminus_cochain(int k, int m);

// Coboundary applied to a homogeneous cochain.
FnCochain coboundary_of(const FnCochain& x);

bool is_cocycle(const FnCochain& x);
bool same_class(const FnCochain& x, const FnCochain& y);

}  // namespace coxcoh
