#include "coxcoh/foxneuwirth.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace coxcoh {

int FnTuple::degree() const { return std::accumulate(a.begin(), a.end(), 0); }

FnCochain FnCochain::basis(Complex v, FnCell c) {
    FnCochain x{(int)c.t.a.size(), v, {}};
    x.support.insert(std::move(c));
    return x;
}

void FnCochain::toggle(const FnCell& c) {
    auto it = support.find(c);
    if (it != support.end()) support.erase(it); else support.insert(c);
}

FnCochain FnCochain::operator+(const FnCochain& o) const {
    if (n != o.n || variant != o.variant)
        throw std::invalid_argument("FnCochain add: shape mismatch");
    FnCochain r{n, variant, {}};
    std::set_symmetric_difference(support.begin(), support.end(), o.support.begin(),
                                  o.support.end(),
                                  std::inserter(r.support, r.support.begin()));
    return r;
}

int FnCochain::degree() const {
    return support.empty() ? -1 : support.begin()->t.degree();
}

std::vector<FnTuple> cells(Complex, int n, int d) {
    std::vector<FnTuple> out;
    if (n == 0) {
        if (d == 0) out.push_back(FnTuple{{}});
        return out;
    }
    std::vector<int> a(n, 0);
    // lex enumeration of compositions of d into n parts
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            a[pos] = rest;
            out.push_back(FnTuple{a});
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            a[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

int cell_space_dim(Complex v, int n, int d) {
    int c = (int)cells(v, n, d).size();
    return v == Complex::Dprime ? 2 * c : c;
}

int cell_index(Complex v, int n, const FnCell& c) {
    auto cs = cells(v, n, c.t.degree());
    auto it = std::lower_bound(cs.begin(), cs.end(), c.t);
    assert(it != cs.end() && *it == c.t);
    int idx = (int)(it - cs.begin());
    return v == Complex::Dprime ? 2 * idx + c.eps : idx;
}

static GroupType group_of(Complex v) {
    return v == Complex::D ? GroupType::D : GroupType::B;
}

static std::vector<GenSet> flag_of(const FnTuple& t) {
    int mx = 0;
    for (int x : t.a) mx = std::max(mx, x);
    std::vector<GenSet> flag(mx);
    for (int r = 1; r <= mx; ++r)
        for (int i = 0; i < (int)t.a.size(); ++i)
            if (t.a[i] >= r) flag[r - 1] |= (1u << i);
    return flag;
}

static FnTuple tuple_of(const std::vector<GenSet>& flag, int n) {
    FnTuple t;
    t.a.assign(n, 0);
    for (GenSet g : flag)
        for (int i = 0; i < n; ++i)
            if (g & (1u << i)) ++t.a[i];
    return t;
}

static const std::vector<SignedPerm>& coset_reps_cached(GenSet T, GenSet Tp,
                                                        GroupType type, int n) {
    static std::map<std::tuple<int, int, GenSet, GenSet>, std::vector<SignedPerm>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple((int)type, n, T, Tp);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, min_coset_reps(T, Tp, type, n)).first;
    return it->second;
}

// De Concini-Salvetti boundary of the higher cell (mod 2), as a set of lower
// cells with odd multiplicity. For Dprime, eps tracks the j_n(D_n)-coset of
// gamma*beta.
static std::set<FnCell> dcs_boundary(Complex v, int n, const FnCell& cell) {
    GroupType type = group_of(v);
    auto flag = flag_of(cell.t);
    std::map<FnCell, int> acc;
    int L = (int)flag.size();
    for (int i = 1; i <= L; ++i) {
        GenSet gi = flag[i - 1];
        GenSet ginext = (i < L) ? flag[i] : 0;
        for (int ti = 0; ti < n; ++ti) {
            if (!(gi & (1u << ti))) continue;
            GenSet tp = gi & ~(1u << ti);
            for (const auto& beta : coset_reps_cached(gi, tp, type, n)) {
                auto conj = conjugate_genset(beta, ginext, type, n);
                if (!conj || (*conj & ~tp) != 0) continue;
                std::vector<GenSet> nf(flag.begin(), flag.begin() + (i - 1));
                nf.push_back(tp);
                bool ok = true;
                for (int k = i; k < L; ++k) {
                    auto c = conjugate_genset(beta, flag[k], type, n);
                    assert(c.has_value());
                    nf.push_back(*c);
                    (void)ok;
                }
                FnCell out;
                out.t = tuple_of(nf, n);
                out.eps = (v == Complex::Dprime)
                              ? (cell.eps + (beta.in_D() ? 0 : 1)) % 2
                              : 0;
                acc[out] ^= 1;
            }
        }
    }
    std::set<FnCell> res;
    for (const auto& [c, m] : acc)
        if (m) res.insert(c);
    return res;
}

const BitMatrix& coboundary(Complex v, int n, int d) {
    static std::map<std::tuple<int, int, int>, BitMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple((int)v, n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int rows = cell_space_dim(v, n, d), cols = cell_space_dim(v, n, d + 1);
    BitMatrix m(rows, cols);
    auto higher = cells(v, n, d + 1);
    int nbits = (v == Complex::Dprime) ? 2 : 1;
    for (int hi = 0; hi < (int)higher.size(); ++hi)
        for (int e = 0; e < nbits; ++e) {
            FnCell hc{e, higher[hi]};
            int col = nbits * hi + e;
            for (const auto& lc : dcs_boundary(v, n, hc))
                m.set(cell_index(v, n, lc), col);
        }
    return cache.emplace(key, std::move(m)).first->second;
}

int betti(Complex v, int n, int d) {
    int dim = cell_space_dim(v, n, d);
    int rk = coboundary(v, n, d).rank();
    int rkprev = d > 0 ? coboundary(v, n, d - 1).rank() : 0;
    return dim - rk - rkprev;
}

std::vector<KBlock> principal_kblocks(const FnTuple& t, int k) {
    std::vector<KBlock> out;
    int n = (int)t.a.size();
    int i = 0;
    while (i < n) {
        if (t.a[i] > k) {
            int j = i;
            while (j + 1 < n && t.a[j + 1] > k) ++j;
            int prefmin = 0;  // min over empty prefix
            if (i > 0) prefmin = *std::min_element(t.a.begin(), t.a.begin() + i);
            if (prefmin == k) out.push_back(KBlock{i, j, k});
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out;
}

std::vector<std::pair<FnCochain, FnCochain>> delta_chain(Complex v, int n,
                                                         const FnCell& c) {
    if (v == Complex::D)
        throw std::invalid_argument("delta_chain: use B or Dprime");
    std::vector<std::pair<FnCochain, FnCochain>> out;
    const auto& a = c.t.a;
    for (int k = 0; k <= n; ++k) {
        bool ok = true;
        int mn = -1;
        for (int r = 0; r < k; ++r) mn = (mn < 0 || a[r] < mn) ? a[r] : mn;
        if (k >= 1 && k <= n - 1 && mn >= 0 && a[k] > mn) ok = false;
        if (!ok) continue;
        FnTuple pre{std::vector<int>(a.begin(), a.begin() + k)};
        FnTuple suf{std::vector<int>(a.begin() + k, a.end())};
        if (v == Complex::B) {
            out.emplace_back(FnCochain::basis(v, FnCell{0, pre}),
                             FnCochain::basis(v, FnCell{0, suf}));
        } else {
            // eps splits with matched parity
            for (int e1 = 0; e1 < 2; ++e1) {
                int e2 = (c.eps + e1) % 2;
                out.emplace_back(FnCochain::basis(v, FnCell{e1, pre}),
                                 FnCochain::basis(v, FnCell{e2, suf}));
            }
        }
    }
    return out;
}

// Tuple induced on an ordered subset of the points of c (agreement-depth minima).
static std::vector<int> restrict_tuple(const std::vector<int>& c,
                                       const std::vector<int>& pts) {
    std::vector<int> r;
    r.reserve(pts.size());
    if (pts.empty()) return r;
    int m = c[0];
    for (int j = 1; j <= pts[0]; ++j) m = std::min(m, c[j]);
    r.push_back(m);
    for (size_t l = 0; l + 1 < pts.size(); ++l) {
        int v = c[pts[l] + 1];
        for (int j = pts[l] + 2; j <= pts[l + 1]; ++j) v = std::min(v, c[j]);
        r.push_back(v);
    }
    return r;
}

static int shuffle_count(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& c) {
    int n = (int)a.size(), N = (int)c.size();
    int count = 0;
    std::vector<int> pick(n);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == n) {
            if (restrict_tuple(c, pick) != a) return;
            std::vector<int> comp;
            size_t pi = 0;
            for (int j = 0; j < N; ++j) {
                if (pi < pick.size() && pick[pi] == j) { ++pi; continue; }
                comp.push_back(j);
            }
            if (restrict_tuple(c, comp) == b) count ^= 1;
            return;
        }
        for (int j = from; j <= N - (n - pos); ++j) {
            pick[pos] = j;
            self(self, pos + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

FnCochain odot_chain(const FnCochain& x, const FnCochain& y) {
    if (x.variant != y.variant)
        throw std::invalid_argument("odot_chain: variant mismatch");
    if (x.variant == Complex::D)
        throw std::invalid_argument("odot_chain: use B or Dprime");
    int N = x.n + y.n;
    FnCochain r = FnCochain::zero(x.variant, N);
    if (x.support.empty() || y.support.empty()) return r;
    int d = x.degree() + y.degree();
    auto cand = cells(x.variant, N, d);
    for (const auto& ca : x.support)
        for (const auto& cb : y.support) {
            int eps = (ca.eps + cb.eps) % 2;
            for (const auto& c : cand)
                if (shuffle_count(ca.t.a, cb.t.a, c.a))
                    r.toggle(FnCell{x.variant == Complex::Dprime ? eps : 0, c});
        }
    return r;
}

FnCochain phi(const FnCochain& x) {
    if (x.variant != Complex::D) throw std::invalid_argument("phi: expects FN_D");
    if (x.n < 2) throw std::invalid_argument("phi: rank >= 2");
    FnCochain r = FnCochain::zero(Complex::Dprime, x.n);
    for (const auto& c : x.support) {
        auto a = c.t.a;
        if (a[0] < a[1]) {
            r.toggle(FnCell{0, FnTuple{a}});
        } else if (a[0] == a[1]) {
            r.toggle(FnCell{0, FnTuple{a}});
            r.toggle(FnCell{1, FnTuple{a}});
        } else {
            std::swap(a[0], a[1]);
            r.toggle(FnCell{1, FnTuple{a}});
        }
    }
    return r;
}

FnCochain iota_fn(const FnCochain& x) {
    if (x.variant != Complex::D) throw std::invalid_argument("iota_fn: expects FN_D");
    FnCochain r = FnCochain::zero(Complex::D, x.n);
    for (const auto& c : x.support) {
        auto a = c.t.a;
        if (x.n >= 2) std::swap(a[0], a[1]);
        r.toggle(FnCell{0, FnTuple{a}});
    }
    return r;
}

FnCochain iota_prime(const FnCochain& x) {
    if (x.variant != Complex::Dprime)
        throw std::invalid_argument("iota_prime: expects FN'_D");
    FnCochain r = FnCochain::zero(Complex::Dprime, x.n);
    for (const auto& c : x.support) r.toggle(FnCell{1 - c.eps, c.t});
    return r;
}

FnCochain gamma_cochain(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("gamma_cochain: k,m >= 1");
    std::vector<int> a;
    for (int rep = 0; rep < m; ++rep) {
        a.push_back(0);
        for (int j = 0; j < (1 << k) - 1; ++j) a.push_back(1);
    }
    return FnCochain::basis(Complex::B, FnCell{0, FnTuple{a}});
}

FnCochain delta_cochain(int n) {
    if (n < 1) throw std::invalid_argument("delta_cochain: n >= 1");
    return FnCochain::basis(Complex::B, FnCell{0, FnTuple{std::vector<int>(n, 1)}});
}

FnCochain gplus_cochain(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("gplus_cochain: k,m >= 1");
    std::vector<int> a;
    for (int rep = 0; rep < m; ++rep) {
        a.push_back(0);
        for (int j = 0; j < (1 << k) - 1; ++j) a.push_back(1);
    }
    return FnCochain::basis(Complex::D, FnCell{0, FnTuple{a}});
}

FnCochain gminus_cochain(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("gminus_cochain: k,m >= 1");
    std::vector<int> a{1, 0};
    for (int j = 0; j < (1 << k) - 2; ++j) a.push_back(1);
    for (int rep = 1; rep < m; ++rep) {
        a.push_back(0);
        for (int j = 0; j < (1 << k) - 1; ++j) a.push_back(1);
    }
    return FnCochain::basis(Complex::D, FnCell{0, FnTuple{a}});
}

static std::vector<uint8_t> to_vec(const FnCochain& x, int d) {
    std::vector<uint8_t> v(cell_space_dim(x.variant, x.n, d), 0);
    for (const auto& c : x.support) v[cell_index(x.variant, x.n, c)] ^= 1;
    return v;
}

FnCochain coboundary_of(const FnCochain& x) {
    FnCochain r = FnCochain::zero(x.variant, x.n);
    if (x.support.empty()) return r;
    int d = x.degree();
    const BitMatrix& m = coboundary(x.variant, x.n, d);
    auto v = to_vec(x, d);
    auto higher = cells(x.variant, x.n, d + 1);
    int nbits = (x.variant == Complex::Dprime) ? 2 : 1;
    for (int c = 0; c < m.cols(); ++c) {
        int s = 0;
        for (int r2 = 0; r2 < m.rows(); ++r2) s ^= (v[r2] & (m.get(r2, c) ? 1 : 0));
        if (s) r.toggle(FnCell{nbits == 2 ? c % 2 : 0, higher[c / nbits]});
    }
    return r;
}

bool is_cocycle(const FnCochain& x) {
    if (x.support.empty()) return true;
    int d = x.degree();
    const BitMatrix& m = coboundary(x.variant, x.n, d);  // rows deg d, cols deg d+1
    auto v = to_vec(x, d);
    for (int c = 0; c < m.cols(); ++c) {
        int s = 0;
        for (int r = 0; r < m.rows(); ++r) s ^= (v[r] & (m.get(r, c) ? 1 : 0));
        if (s) return false;
    }
    return true;
}

bool same_class(const FnCochain& x, const FnCochain& y) {
    FnCochain diff = x + y;
    if (diff.support.empty()) return true;
    int d = diff.degree();
    if (d == 0) return false;
    const BitMatrix& m = coboundary(diff.variant, diff.n, d - 1);
    // diff in the image: solve m^T u = diff
    BitMatrix mt(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) mt.set(c, r);
    return mt.solve(to_vec(diff, d)).has_value();
}

}  // namespace coxcoh
