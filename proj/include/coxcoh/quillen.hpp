#pragma once
#include <optional>
#include <string>
#include <vector>

#include "coxcoh/gf2.hpp"
#include "coxcoh/hopf_b.hpp"
#include "coxcoh/hopf_d.hpp"

namespace coxcoh {

// Maximal elementary abelian 2-subgroup of the signed permutation group, up to
// conjugacy: a partition of n into powers of two. Each part 2^k contributes a
// variable block (x, y_1..y_k): x dual to the central sign flip, y_i dual to
// the translation generators of the regular V_k.
struct SiteB {
    std::vector<long> parts;  // powers of two, weakly decreasing

    long n() const;
    int nvars() const;
    int part_offset(size_t i) const;  // first variable of part i
    std::string label() const;        // "B:(4,2,1)"
    std::vector<std::string> var_names() const;
};
std::vector<SiteB> sites_b(int n);

// Site of the even-sign subgroup: a partition whose multiplicity of 1 is not
// 2. The parts of size 1 couple into a single even-sign cluster and lose one
// variable; when no part has size 1 or 2 a conjugate twisted copy is a
// separate conjugacy class.
struct SiteD {
    std::vector<long> parts;  // weakly decreasing, size-1 parts last
    bool twist = false;

    long n() const;
    int m1() const;  // multiplicity of part 1
    int nvars() const;
    std::string label() const;  // "D:(4,2)" or "D:(4,4):t"
    std::vector<std::string> var_names() const;
};
std::vector<SiteD> sites_d(int n);

// Dickson invariant of degree 2^k - 2^j for GL(V_k) acting on F2[y_1..y_k];
// the y block sits at [off, off+k) of an nvars-wide ring.
Gf2Poly dickson(int k, int j, int nvars, int off);

// Product of x + y over all 2^k elements y of the span of y_1..y_k, with x at
// off and the y block right after it. Euler class of the regular character sum.
Gf2Poly euler_span(int k, int nvars, int off);

// Sum over even subsets S of {1..m} of prod_{i not in S}(x_i + y_i) prod_{i
// in S} x_i; the pair (x_i, y_i) sits at off + 2(i-1).
Gf2Poly half_euler(int m, int nvars, int off);

// Image of the i-th elementary symmetric polynomial in u_1..u_m composed with
// the shear e -> e + e_1 e_{i-1} (top: e_1 e_{m-1}), pushed to the even-sign
// cluster by u_m = u_1 + ... + u_{m-1}. Written in the m-1 free variables at
// [off, off+m-1).
Gf2Poly esym_bar(int m, int i, int nvars, int off);

Gf2Poly restrict_b(const HopfMonomialB& m, const SiteB& s);
Gf2Poly restrict_d(const ChargedMonomial& m, const SiteD& s);

// Value on an even-sign site of the restriction of a full sign-family class,
// read off by coupling the size-1 parts of the matching site above it.
Gf2Poly transport_b(const HopfMonomialB& m, const SiteD& s);

// Restriction of a homogeneous element to the whole family, site order as in
// sites_b / sites_d. Components other than n are dropped.
std::vector<Gf2Poly> quillen_map_b(const ElementB& x, int n);
std::vector<Gf2Poly> quillen_map_d(const ElementD& x, int n);

// Expands a family of site values in the degree-d monomial basis; empty when
// the family is not the restriction of any class.
std::optional<ElementB> quillen_solve_b(int n, int d, const std::vector<Gf2Poly>& vals);
std::optional<ElementD> quillen_solve_d(int n, int d, const std::vector<Gf2Poly>& vals);

// Rank of the family map on the degree-d basis; equality with the basis size
// is the injectivity of detection in that bidegree.
int quillen_rank_b(int n, int d);
int quillen_rank_d(int n, int d);

}  // namespace coxcoh
