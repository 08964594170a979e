#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace coxcoh {

enum class GroupType { B, D };

// Signed permutation of {1..n}: img[i-1] = w(i), nonzero, |img| a permutation.
// w(-i) = -w(i).
struct SignedPerm {
    std::vector<int> img;

    static SignedPerm identity(int n);
    int n() const { return (int)img.size(); }
    int apply(int i) const;  // i in {-n..-1, 1..n}
    SignedPerm operator*(const SignedPerm& o) const;  // (a*b)(i) = a(b(i))
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img == o.img; }
    bool operator<(const SignedPerm& o) const { return img < o.img; }
    bool in_D() const;  // even number of negative images
};

// Generator subset of {0..n-1} as a bitmask. Index i names s_i (B) or t_i (D).
using GenSet = uint32_t;

// Standard generator: B s_0 negates 1, s_i swaps (i,i+1);
// D t_0 maps 1 -> -2, 2 -> -1, t_i = s_i for i >= 1.
SignedPerm generator(GroupType type, int i, int n);

// Full group of the given rank, BFS order from the identity; lengths attached.
struct GroupCache {
    std::vector<SignedPerm> elements;          // BFS order
    std::map<SignedPerm, int> length;
    const SignedPerm& longest() const { return elements.back(); }
};
const GroupCache& group_cache(GroupType type, int n);

int length(const SignedPerm& w, GroupType type);

std::vector<SignedPerm> parabolic(GenSet gamma, GroupType type, int n);

// Minimal (length, lex image) representatives of the left cosets W_{T'} w in W_T.
// Requires T' subset of T.
std::vector<SignedPerm> min_coset_reps(GenSet T, GenSet Tprime, GroupType type, int n);

// beta^{-1} Gamma beta if every conjugate is a standard generator, else nullopt.
std::optional<GenSet> conjugate_genset(const SignedPerm& beta, GenSet gamma,
                                       GroupType type, int n);

}  // namespace coxcoh
