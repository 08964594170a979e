#include "coxcoh/quillen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxcoh {

namespace {

int ilog2(long p) {
    int k = 0;
    while ((1L << k) < p) ++k;
    if ((1L << k) != p) throw std::invalid_argument("part is not a power of two");
    return k;
}

// linear form dual to the vector with bit pattern v, y block at off
Gf2Poly linear_form(unsigned v, int k, int nvars, int off) {
    Gf2Poly l(nvars);
    for (int b = 0; b < k; ++b)
        if (v >> b & 1) l = l + Gf2Poly::var(nvars, off + b);
    return l;
}

// weakly decreasing lists of powers of two summing to n
void gen_partitions(long n, long maxp, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    long p = 1;
    while (p * 2 <= std::min(n, maxp)) p *= 2;
    for (; p >= 1; p /= 2) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::string parts_label(const std::vector<long>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

void enum_monos(int v, int d, int i, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (i == v) {
        if (d == 0) out.push_back(cur);
        return;
    }
    if (i == v - 1) {
        cur[i] = d;
        out.push_back(cur);
        cur[i] = 0;
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[i] = e;
        enum_monos(v, d - e, i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<std::vector<int>> degree_monos(int v, int d) {
    std::vector<std::vector<int>> out;
    if (v == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(v, 0);
    enum_monos(v, d, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

ChargedMonomial charge_flip(ChargedMonomial m) {
    if (m.charge == Charge::Plus)
        m.charge = Charge::Minus;
    else if (m.charge == Charge::Minus)
        m.charge = Charge::Plus;
    return m;
}

}  // namespace

// ---------- sites ----------

long SiteB::n() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

int SiteB::nvars() const {
    int v = 0;
    for (long p : parts) v += ilog2(p) + 1;
    return v;
}

int SiteB::part_offset(size_t i) const {
    int v = 0;
    for (size_t j = 0; j < i; ++j) v += ilog2(parts[j]) + 1;
    return v;
}

std::string SiteB::label() const { return "B:" + parts_label(parts); }

std::vector<std::string> SiteB::var_names() const {
    std::vector<std::string> names;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::string t = std::to_string(i + 1);
        names.push_back("x" + t);
        for (int j = 1; j <= ilog2(parts[i]); ++j)
            names.push_back("y" + t + "_" + std::to_string(j));
    }
    return names;
}

std::vector<SiteB> sites_b(int n) {
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    gen_partitions(n, n > 0 ? n : 1, cur, parts);
    std::vector<SiteB> out;
    for (auto& p : parts) out.push_back(SiteB{std::move(p)});
    return out;
}

long SiteD::n() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

int SiteD::m1() const {
    return (int)std::count(parts.begin(), parts.end(), 1L);
}

int SiteD::nvars() const {
    int v = 0;
    for (long p : parts)
        if (p >= 2) v += ilog2(p) + 1;
    int m = m1();
    return v + (m > 0 ? m - 1 : 0);
}

std::string SiteD::label() const {
    return "D:" + parts_label(parts) + (twist ? ":t" : "");
}

std::vector<std::string> SiteD::var_names() const {
    std::vector<std::string> names;
    size_t big = 0;
    for (long p : parts)
        if (p >= 2) ++big;
    for (size_t i = 0; i < big; ++i) {
        std::string t = std::to_string(i + 1);
        names.push_back("x" + t);
        for (int j = 1; j <= ilog2(parts[i]); ++j)
            names.push_back("y" + t + "_" + std::to_string(j));
    }
    for (int j = 1; j < m1(); ++j) names.push_back("u" + std::to_string(j));
    return names;
}

std::vector<SiteD> sites_d(int n) {
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    gen_partitions(n, n > 0 ? n : 1, cur, parts);
    std::vector<SiteD> out;
    for (auto& p : parts) {
        int m1 = (int)std::count(p.begin(), p.end(), 1L);
        if (m1 == 2) continue;  // the two odd coordinates are conjugate into one
        int m2 = (int)std::count(p.begin(), p.end(), 2L);
        bool split_class = n >= 1 && m1 == 0 && m2 == 0;
        out.push_back(SiteD{p, false});
        if (split_class) out.push_back(SiteD{std::move(p), true});
    }
    return out;
}

// ---------- invariant classes ----------

Gf2Poly dickson(int k, int j, int nvars, int off) {
    if (j < 0 || j >= k) throw std::invalid_argument("dickson index");
    // prod over V_k of (t + v), coefficients tracked by t-degree
    std::vector<Gf2Poly> c{Gf2Poly::one(nvars)};
    for (unsigned v = 0; v < (1u << k); ++v) {
        std::vector<Gf2Poly> nx(c.size() + 1, Gf2Poly::zero(nvars));
        Gf2Poly l = linear_form(v, k, nvars, off);
        for (size_t i = 0; i < c.size(); ++i) {
            nx[i + 1] = nx[i + 1] + c[i];
            nx[i] = nx[i] + c[i] * l;
        }
        c = std::move(nx);
    }
    return c[(size_t)1 << j];
}

Gf2Poly euler_span(int k, int nvars, int off) {
    Gf2Poly r = Gf2Poly::one(nvars);
    Gf2Poly x = Gf2Poly::var(nvars, off);
    for (unsigned v = 0; v < (1u << k); ++v)
        r = r * (x + linear_form(v, k, nvars, off + 1));
    return r;
}

Gf2Poly half_euler(int m, int nvars, int off) {
    Gf2Poly r = Gf2Poly::zero(nvars);
    for (unsigned S = 0; S < (1u << m); ++S) {
        if (__builtin_popcount(S) % 2) continue;
        Gf2Poly t = Gf2Poly::one(nvars);
        for (int i = 0; i < m; ++i) {
            Gf2Poly xi = Gf2Poly::var(nvars, off + 2 * i);
            if (S >> i & 1)
                t = t * xi;
            else
                t = t * (xi + Gf2Poly::var(nvars, off + 2 * i + 1));
        }
        r = r + t;
    }
    return r;
}

Gf2Poly esym_bar(int m, int i, int nvars, int off) {
    if (m < 1 || i < 1 || i > m) throw std::invalid_argument("esym_bar index");
    // elementary symmetric polynomials in m local variables
    std::vector<Gf2Poly> e(m + 1, Gf2Poly::zero(m));
    e[0] = Gf2Poly::one(m);
    for (int v = 0; v < m; ++v)
        for (int j = std::min(v + 1, m); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * Gf2Poly::var(m, v);
    Gf2Poly bar(m);
    if (i == m)
        bar = e[1] * e[m - 1];
    else if (i >= 2)
        bar = e[i] + e[1] * e[i - 1];
    // u_m = u_1 + ... + u_{m-1}, then place the free block at off
    std::vector<Gf2Poly> images;
    Gf2Poly last = Gf2Poly::zero(nvars);
    for (int j = 0; j + 1 < m; ++j) {
        images.push_back(Gf2Poly::var(nvars, off + j));
        last = last + Gf2Poly::var(nvars, off + j);
    }
    images.push_back(last);
    return bar.substitute(images);
}

// ---------- restriction to one site ----------

namespace {

Gf2Poly restrict_b_part(const HopfMonomialB& m, long p) {
    int K = ilog2(p), V = K + 1;
    if (m.blocks.size() != 1) return Gf2Poly::zero(V);  // proper transfers die
    const auto& b = m.blocks[0];
    if (b.is_unit()) return Gf2Poly::one(V);
    Gf2Poly r = Gf2Poly::one(V);
    if (b.profile[0]) r = r * euler_span(K, V, 0).pow(b.profile[0]);
    for (int k = 1; k < (int)b.profile.size(); ++k)
        if (b.profile[k]) r = r * dickson(K, K - k, V, 1).pow(b.profile[k]);
    return r;
}

}  // namespace

Gf2Poly restrict_b(const HopfMonomialB& m, const SiteB& s) {
    if (m.component() != s.n()) throw std::invalid_argument("component/site mismatch");
    if (s.parts.empty()) return Gf2Poly::one(0);
    if (s.parts.size() == 1) return restrict_b_part(m, s.parts[0]);
    static std::map<std::pair<std::string, std::string>, Gf2Poly> memo;
    auto key = std::make_pair(s.label(), m.str());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SiteB rest{{s.parts.begin() + 1, s.parts.end()}};
    Gf2Poly out = Gf2Poly::zero(s.nvars());
    for (const auto& [a, b] : coproduct(ElementB::monomial(m)).terms)
        if (a.component() == s.parts[0])
            out = out + restrict_b_part(a, s.parts[0]).tensor(restrict_b(b, rest));
    memo.emplace(key, out);
    return out;
}

namespace {

// single part of size 2^K >= 2 on an untwisted site
Gf2Poly restrict_d_part(const ChargedMonomial& m, long p) {
    int K = ilog2(p), V = K + 1;
    if (m.charge == Charge::Neutral) return restrict_b_part(m.base, p);
    if (m.base.blocks.size() != 1) return Gf2Poly::zero(V);
    const auto& b = m.base.blocks[0];
    Gf2Poly r = Gf2Poly::one(V);
    if (b.profile[0]) r = r * euler_span(K, V, 0).pow(b.profile[0]);
    for (int k = 1; k < (int)b.profile.size(); ++k) {
        if (!b.profile[k]) continue;
        Gf2Poly g(V);
        if (K == 1)
            g = m.charge == Charge::Plus
                    ? Gf2Poly::var(V, 0) + Gf2Poly::var(V, 1)
                    : Gf2Poly::var(V, 0);
        else if (m.charge == Charge::Plus)
            g = dickson(K, K - k, V, 1);
        if (g.is_zero()) return Gf2Poly::zero(V);
        r = r * g.pow(b.profile[k]);
    }
    return r;
}

}  // namespace

Gf2Poly transport_b(const HopfMonomialB& m, const SiteD& s) {
    SiteB bs{s.parts};
    Gf2Poly p = restrict_b(m, bs);
    int m1 = s.m1();
    if (m1 == 0) return p;
    int V = s.nvars(), BV = bs.nvars();
    std::vector<Gf2Poly> images;
    for (int i = 0; i + 1 < BV; ++i) images.push_back(Gf2Poly::var(V, i));
    Gf2Poly last = Gf2Poly::zero(V);
    for (int j = BV - m1; j + 1 < BV; ++j) last = last + Gf2Poly::var(V, j);
    images.push_back(last);
    return p.substitute(images);
}

Gf2Poly restrict_d(const ChargedMonomial& m, const SiteD& s) {
    if (m.component() != s.n()) throw std::invalid_argument("component/site mismatch");
    if (s.n() == 0) return Gf2Poly::one(0);
    if (s.twist) return restrict_d(charge_flip(m), SiteD{s.parts, false});
    int V = s.nvars();
    if (m.charge == Charge::Neutral) return transport_b(m.base, s);
    if (m.base.blocks.empty())
        throw std::invalid_argument("unit component is not detected on sites");
    if (s.parts[0] == 1) return Gf2Poly::zero(V);  // even-sign cluster only
    if (s.parts.size() == 1) return restrict_d_part(m, s.parts[0]);
    static std::map<std::pair<std::string, std::string>, Gf2Poly> memo;
    auto key = std::make_pair(s.label(), m.str());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long p = s.parts[0];
    SiteD rest{{s.parts.begin() + 1, s.parts.end()}, false};
    Gf2Poly out = Gf2Poly::zero(V);
    for (const auto& [a, b] : coproduct_component(m, p).terms)
        if (a.component() == p)
            out = out + restrict_d_part(a, p).tensor(restrict_d(b, rest));
    memo.emplace(key, out);
    return out;
}

// ---------- the family map and its inverse ----------

namespace {

template <typename Site>
struct Layout {
    std::vector<Site> sites;
    std::vector<std::vector<std::vector<int>>> monos;  // sorted, per site
    std::vector<int> off;
    int rows = 0;
};

template <typename Site>
Layout<Site> make_layout(std::vector<Site> sites, int d) {
    Layout<Site> L;
    L.sites = std::move(sites);
    for (const auto& s : L.sites) {
        L.off.push_back(L.rows);
        L.monos.push_back(degree_monos(s.nvars(), d));
        L.rows += (int)L.monos.back().size();
    }
    return L;
}

template <typename Site>
std::vector<uint8_t> flatten(const Layout<Site>& L, const std::vector<Gf2Poly>& vals,
                             int d) {
    if (vals.size() != L.sites.size())
        throw std::invalid_argument("family has the wrong number of sites");
    std::vector<uint8_t> rhs(L.rows, 0);
    for (size_t i = 0; i < vals.size(); ++i) {
        if (vals[i].nvars() != L.sites[i].nvars())
            throw std::invalid_argument("site value in the wrong ring");
        for (const auto& t : vals[i].terms()) {
            auto it = std::lower_bound(L.monos[i].begin(), L.monos[i].end(), t);
            if (it == L.monos[i].end() || *it != t)
                throw std::logic_error("site value is not homogeneous of the right degree");
            rhs[L.off[i] + (it - L.monos[i].begin())] ^= 1;
        }
    }
    (void)d;
    return rhs;
}

struct TableB {
    Layout<SiteB> L;
    std::vector<HopfMonomialB> cols;
    BitMatrix M{0, 0};
};

struct TableD {
    Layout<SiteD> L;
    std::vector<ChargedMonomial> cols;
    BitMatrix M{0, 0};
};

const TableB& table_b(int n, int d) {
    static std::map<std::pair<int, int>, TableB> cache;
    auto key = std::make_pair(n, d);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    TableB T;
    T.L = make_layout(sites_b(n), d);
    T.cols = basis_b(n, d);
    T.M = BitMatrix(T.L.rows, (int)T.cols.size());
    for (size_t c = 0; c < T.cols.size(); ++c) {
        std::vector<Gf2Poly> vals;
        for (const auto& s : T.L.sites) vals.push_back(restrict_b(T.cols[c], s));
        auto col = flatten(T.L, vals, d);
        for (int r = 0; r < T.L.rows; ++r)
            if (col[r]) T.M.set(r, (int)c);
    }
    return cache.emplace(key, std::move(T)).first->second;
}

const TableD& table_d(int n, int d) {
    static std::map<std::pair<int, int>, TableD> cache;
    auto key = std::make_pair(n, d);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    TableD T;
    T.L = make_layout(sites_d(n), d);
    T.cols = basis_d(n, d);
    BitMatrix M(T.L.rows, (int)T.cols.size());
    for (size_t c = 0; c < T.cols.size(); ++c) {
        std::vector<Gf2Poly> vals;
        for (const auto& s : T.L.sites) vals.push_back(restrict_d(T.cols[c], s));
        auto col = flatten(T.L, vals, d);
        for (int r = 0; r < T.L.rows; ++r)
            if (col[r]) M.set(r, (int)c);
    }
    T.M = std::move(M);
    return cache.emplace(key, std::move(T)).first->second;
}

}  // namespace

std::vector<Gf2Poly> quillen_map_b(const ElementB& x, int n) {
    auto sites = sites_b(n);
    std::vector<Gf2Poly> out;
    for (const auto& s : sites) {
        Gf2Poly v = Gf2Poly::zero(s.nvars());
        for (const auto& m : x.mons)
            if (m.component() == n) v = v + restrict_b(m, s);
        out.push_back(v);
    }
    return out;
}

std::vector<Gf2Poly> quillen_map_d(const ElementD& x, int n) {
    auto sites = sites_d(n);
    std::vector<Gf2Poly> out;
    for (const auto& s : sites) {
        Gf2Poly v = Gf2Poly::zero(s.nvars());
        for (const auto& m : x.mons)
            if (m.component() == n) v = v + restrict_d(m, s);
        out.push_back(v);
    }
    return out;
}

std::optional<ElementB> quillen_solve_b(int n, int d, const std::vector<Gf2Poly>& vals) {
    if (n < 1) throw std::invalid_argument("detection needs a positive component");
    const auto& T = table_b(n, d);
    auto sol = T.M.solve(flatten(T.L, vals, d));
    if (!sol) return std::nullopt;
    ElementB r;
    for (size_t c = 0; c < T.cols.size(); ++c)
        if ((*sol)[c]) r.toggle(T.cols[c]);
    return r;
}

std::optional<ElementD> quillen_solve_d(int n, int d, const std::vector<Gf2Poly>& vals) {
    if (n < 1) throw std::invalid_argument("detection needs a positive component");
    const auto& T = table_d(n, d);
    auto sol = T.M.solve(flatten(T.L, vals, d));
    if (!sol) return std::nullopt;
    ElementD r;
    for (size_t c = 0; c < T.cols.size(); ++c)
        if ((*sol)[c]) r.toggle(T.cols[c]);
    return r;
}

int quillen_rank_b(int n, int d) { return table_b(n, d).M.rank(); }
int quillen_rank_d(int n, int d) { return table_d(n, d).M.rank(); }

}  // namespace coxcoh
