#pragma once
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coxcoh {

// Dense bit-packed matrix over GF(2). Immutable after assembly.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c);
    bool get(int r, int c) const;

    int rank() const;
    int nullity() const { return cols_ - rank(); }

    // Solves M x = rhs. Returns any solution, free variables set to 0.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& rhs) const;

    // Plain-text sparse triplet format: header "rows cols", then one "row col" per line.
    std::string to_triplets() const;
    static BitMatrix from_triplets(const std::string& text);

private:
    int rows_, cols_;
    std::vector<std::vector<uint64_t>> w_;  // rows_ x ceil(cols_/64) words
};

// Polynomial over GF(2) in nvars degree-1 variables.
// Terms are exponent vectors; coefficient is presence in the set.
class Gf2Poly {
public:
    Gf2Poly() : nvars_(0) {}
    explicit Gf2Poly(int nvars) : nvars_(nvars) {}

    static Gf2Poly zero(int nvars) { return Gf2Poly(nvars); }
    static Gf2Poly one(int nvars);
    static Gf2Poly var(int nvars, int i);  // the i-th variable

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::set<std::vector<int>>& terms() const { return terms_; }

    void toggle(const std::vector<int>& exps);  // add one monomial mod 2

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    bool operator==(const Gf2Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Gf2Poly& o) const { return !(*this == o); }
    bool operator<(const Gf2Poly& o) const { return terms_ < o.terms_; }

    Gf2Poly pow(int e) const;

    // -1 for the zero polynomial; requires homogeneity otherwise returns max degree.
    int degree() const;
    bool is_homogeneous() const;

    // Keeps only terms of total degree d.
    Gf2Poly component(int d) const;

    // Substitutes variable i by images[i]; images share a common variable count.
    Gf2Poly substitute(const std::vector<Gf2Poly>& images) const;

    // Tensor with a polynomial in disjoint trailing variables.
    Gf2Poly tensor(const Gf2Poly& o) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::set<std::vector<int>> terms_;
};

// The ring endomorphism with v -> v + v^2 on each variable (inhomogeneous output).
Gf2Poly total_steenrod(const Gf2Poly& p);
// Degree-(deg p + i) part of total_steenrod(p), for homogeneous p.
Gf2Poly sq_component(const Gf2Poly& p, int i);

// binom(a+b, a) mod 2 by Lucas: 1 iff a and b share no binary digit.
inline int binom2(long a, long b) { return (a & b) == 0 ? 1 : 0; }

}  // namespace coxcoh
