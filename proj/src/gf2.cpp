#include "coxcoh/gf2.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxcoh {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    w_.assign(rows, std::vector<uint64_t>((cols + 63) / 64, 0));
}

void BitMatrix::set(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    w_[r][c / 64] ^= (uint64_t(1) << (c % 64));
}

bool BitMatrix::get(int r, int c) const {
    return (w_[r][c / 64] >> (c % 64)) & 1;
}

int BitMatrix::rank() const {
    auto m = w_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if ((m[r][c / 64] >> (c % 64)) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && ((m[r][c / 64] >> (c % 64)) & 1))
                for (size_t k = 0; k < m[r].size(); ++k) m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<uint8_t>> BitMatrix::solve(const std::vector<uint8_t>& rhs) const {
    if ((int)rhs.size() != rows_) throw std::invalid_argument("solve: rhs length != rows");
    auto m = w_;
    std::vector<uint8_t> b(rhs);
    std::vector<int> pivcol;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if ((m[r][c / 64] >> (c % 64)) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        std::swap(b[rank], b[piv]);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && ((m[r][c / 64] >> (c % 64)) & 1)) {
                for (size_t k = 0; k < m[r].size(); ++k) m[r][k] ^= m[rank][k];
                b[r] ^= b[rank];
            }
        pivcol.push_back(c);
        ++rank;
    }
    for (int r = rank; r < rows_; ++r)
        if (b[r]) return std::nullopt;
    std::vector<uint8_t> x(cols_, 0);
    for (int r = 0; r < rank; ++r) x[pivcol[r]] = b[r];
    return x;
}

std::string BitMatrix::to_triplets() const {
    std::ostringstream os;
    os << rows_ << " " << cols_ << "\n";
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) os << r << " " << c << "\n";
    return os.str();
}

BitMatrix BitMatrix::from_triplets(const std::string& text) {
    std::istringstream is(text);
    int rows, cols;
    if (!(is >> rows >> cols)) throw std::invalid_argument("triplets: missing header");
    BitMatrix m(rows, cols);
    int r, c;
    while (is >> r >> c) m.set(r, c);
    return m;
}

Gf2Poly Gf2Poly::one(int nvars) {
    Gf2Poly p(nvars);
    p.terms_.insert(std::vector<int>(nvars, 0));
    return p;
}

Gf2Poly Gf2Poly::var(int nvars, int i) {
    Gf2Poly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms_.insert(e);
    return p;
}

void Gf2Poly::toggle(const std::vector<int>& exps) {
    assert((int)exps.size() == nvars_);
    auto it = terms_.find(exps);
    if (it != terms_.end()) terms_.erase(it); else terms_.insert(exps);
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly add: variable mismatch");
    Gf2Poly r(nvars_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                  o.terms_.end(),
                                  std::inserter(r.terms_, r.terms_.begin()));
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly mul: variable mismatch");
    Gf2Poly r(nvars_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
            r.toggle(e);
        }
    return r;
}

Gf2Poly Gf2Poly::pow(int e) const {
    Gf2Poly r = Gf2Poly::one(nvars_);
    Gf2Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int Gf2Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, std::accumulate(t.begin(), t.end(), 0));
    return d;
}

bool Gf2Poly::is_homogeneous() const {
    int d = -2;
    for (const auto& t : terms_) {
        int s = std::accumulate(t.begin(), t.end(), 0);
        if (d == -2) d = s; else if (d != s) return false;
    }
    return true;
}

Gf2Poly Gf2Poly::component(int d) const {
    Gf2Poly r(nvars_);
    for (const auto& t : terms_)
        if (std::accumulate(t.begin(), t.end(), 0) == d) r.terms_.insert(t);
    return r;
}

Gf2Poly Gf2Poly::substitute(const std::vector<Gf2Poly>& images) const {
    if ((int)images.size() != nvars_) throw std::invalid_argument("substitute: image count");
    int out = nvars_ ? images[0].nvars() : 0;
    Gf2Poly r(out);
    for (const auto& t : terms_) {
        Gf2Poly m = Gf2Poly::one(out);
        for (int i = 0; i < nvars_; ++i)
            if (t[i] > 0) m = m * images[i].pow(t[i]);
        r = r + m;
    }
    return r;
}

Gf2Poly Gf2Poly::tensor(const Gf2Poly& o) const {
    Gf2Poly r(nvars_ + o.nvars_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<int> e(a);
            e.insert(e.end(), b.begin(), b.end());
            r.terms_.insert(e);
        }
    return r;
}

std::string Gf2Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        for (int i = 0; i < nvars_; ++i) {
            if (t[i] == 0) continue;
            if (any) os << "*";
            any = true;
            os << names[i];
            if (t[i] > 1) os << "^" << t[i];
        }
        if (!any) os << "1";
    }
    return os.str();
}

Gf2Poly total_steenrod(const Gf2Poly& p) {
    // (v + v^2)^e = sum over submasks j of e of v^{e+j}, by Lucas.
    Gf2Poly r(p.nvars());
    int n = p.nvars();
    for (const auto& t : p.terms()) {
        std::vector<std::vector<int>> exps = {std::vector<int>(n, 0)};
        for (int i = 0; i < n; ++i) {
            std::vector<std::vector<int>> next;
            int e = t[i];
            // enumerate submasks j of e
            int j = e;
            while (true) {
                for (auto v : exps) { v[i] = e + j; next.push_back(v); }
                if (j == 0) break;
                j = (j - 1) & e;
            }
            exps.swap(next);
        }
        for (const auto& e : exps) r.toggle(e);
    }
    return r;
}

Gf2Poly sq_component(const Gf2Poly& p, int i) {
    return total_steenrod(p).component(p.degree() + i);
}

}  // namespace coxcoh
