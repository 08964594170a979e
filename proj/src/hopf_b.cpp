#include "coxcoh/hopf_b.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxcoh {

GatheredBlockB GatheredBlockB::delta(long n, int t) {
    GatheredBlockB b{n, {t}};
    b.trim();
    return b;
}

GatheredBlockB GatheredBlockB::gamma(int k, long m, int t) {
    GatheredBlockB b{m << k, std::vector<int>(k + 1, 0)};
    b.profile[k] = t;
    b.trim();
    return b;
}

int GatheredBlockB::nb() const {
    for (int k = (int)profile.size() - 1; k >= 1; --k)
        if (profile[k]) return k;
    return 0;
}

long GatheredBlockB::degree() const {
    long d = 0;
    for (size_t k = 0; k < profile.size(); ++k)
        d += (long)profile[k] * (k == 0 ? width : width - (width >> k));
    return d;
}

bool GatheredBlockB::is_pure_delta() const {
    return profile.size() == 1 && profile[0] > 0;
}

void GatheredBlockB::trim() {
    while (!profile.empty() && profile.back() == 0) profile.pop_back();
}

bool GatheredBlockB::valid() const {
    if (width < 1) return false;
    if (!profile.empty() && profile.back() == 0) return false;
    for (int t : profile)
        if (t < 0) return false;
    return width % (1L << nb()) == 0;
}

bool block_canon_less(const GatheredBlockB& a, const GatheredBlockB& b) {
    if (a.width != b.width) return a.width > b.width;
    return a.profile < b.profile;
}

long HopfMonomialB::component() const {
    long c = 0;
    for (const auto& b : blocks) c += b.width;
    return c;
}

long HopfMonomialB::degree() const {
    long d = 0;
    for (const auto& b : blocks) d += b.degree();
    return d;
}

static std::string block_str(const GatheredBlockB& b) {
    if (b.is_unit()) return "u" + std::to_string(b.width);
    std::string s;
    auto factor = [&](const std::string& f, int t) {
        if (!t) return;
        if (!s.empty()) s += "*";
        s += f;
        if (t > 1) s += "^" + std::to_string(t);
    };
    factor("d" + std::to_string(b.width), b.profile[0]);
    for (size_t k = 1; k < b.profile.size(); ++k)
        factor("g" + std::to_string(k) + "_" + std::to_string(b.width >> k),
               b.profile[k]);
    return s;
}

std::string HopfMonomialB::str() const {
    if (blocks.empty()) return "u0";
    std::string s;
    for (const auto& b : blocks) {
        if (!s.empty()) s += " o ";
        s += block_str(b);
    }
    return s;
}

ElementB ElementB::monomial(HopfMonomialB m) {
    ElementB e;
    e.mons.insert(std::move(m));
    return e;
}

ElementB ElementB::operator+(const ElementB& o) const {
    ElementB r = *this;
    for (const auto& m : o.mons) r.toggle(m);
    return r;
}

void ElementB::toggle(const HopfMonomialB& m) {
    auto it = mons.find(m);
    if (it == mons.end())
        mons.insert(m);
    else
        mons.erase(it);
}

std::string ElementB::str() const {
    if (mons.empty()) return "0";
    std::string s;
    for (const auto& m : mons) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    return s;
}

TensorB TensorB::operator+(const TensorB& o) const {
    TensorB r = *this;
    for (const auto& t : o.terms) r.toggle(t.first, t.second);
    return r;
}

void TensorB::toggle(const HopfMonomialB& a, const HopfMonomialB& b) {
    auto key = std::make_pair(a, b);
    auto it = terms.find(key);
    if (it == terms.end())
        terms.insert(key);
    else
        terms.erase(it);
}

ElementB merge_blocks(const GatheredBlockB& a, const GatheredBlockB& b) {
    if (a.profile != b.profile) throw std::invalid_argument("profile mismatch");
    int nb = a.nb();
    long m = a.width >> nb, mp = b.width >> nb;
    if (!binom2(m, mp)) return ElementB::zero();
    return ElementB::monomial(HopfMonomialB{{GatheredBlockB{a.width + b.width, a.profile}}});
}

std::optional<HopfMonomialB> normalize_blocks(std::vector<GatheredBlockB> blocks) {
    std::map<std::vector<int>, GatheredBlockB> byprof;
    for (auto& b : blocks) {
        b.trim();
        auto it = byprof.find(b.profile);
        if (it == byprof.end()) {
            byprof.emplace(b.profile, b);
        } else {
            auto merged = merge_blocks(it->second, b);
            if (merged.is_zero()) return std::nullopt;
            it->second = merged.mons.begin()->blocks[0];
        }
    }
    HopfMonomialB m;
    for (auto& [p, b] : byprof) m.blocks.push_back(b);
    std::sort(m.blocks.begin(), m.blocks.end(), block_canon_less);
    return m;
}

ElementB odot(const ElementB& x, const ElementB& y) {
    ElementB r;
    for (const auto& mx : x.mons)
        for (const auto& my : y.mons) {
            auto blocks = mx.blocks;
            blocks.insert(blocks.end(), my.blocks.begin(), my.blocks.end());
            if (auto m = normalize_blocks(std::move(blocks))) r.toggle(*m);
        }
    return r;
}

// width splits of one block, multiples of its scale; empty side omitted
static std::vector<std::pair<std::optional<GatheredBlockB>, std::optional<GatheredBlockB>>>
block_splits(const GatheredBlockB& b) {
    std::vector<std::pair<std::optional<GatheredBlockB>, std::optional<GatheredBlockB>>> out;
    long s = 1L << b.nb();
    for (long w = 0; w <= b.width; w += s) {
        std::optional<GatheredBlockB> l, r;
        if (w) l = GatheredBlockB{w, b.profile};
        if (w < b.width) r = GatheredBlockB{b.width - w, b.profile};
        out.emplace_back(l, r);
    }
    return out;
}

TensorB coproduct(const ElementB& x) {
    TensorB out;
    for (const auto& m : x.mons) {
        std::vector<std::vector<std::pair<std::optional<GatheredBlockB>, std::optional<GatheredBlockB>>>>
            per;
        for (const auto& b : m.blocks) per.push_back(block_splits(b));
        std::vector<GatheredBlockB> left, right;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == per.size()) {
                auto l = normalize_blocks(left);
                auto r = normalize_blocks(right);
                if (l && r) out.toggle(*l, *r);
                return;
            }
            for (const auto& [lb, rb] : per[i]) {
                if (lb) left.push_back(*lb);
                if (rb) right.push_back(*rb);
                rec(i + 1);
                if (lb) left.pop_back();
                if (rb) right.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

static std::vector<int> profile_sum(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) s[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) s[i] += b[i];
    return s;
}

static ElementB cup_mon(const HopfMonomialB& x, const HopfMonomialB& y);

static ElementB cup_mon_single(const HopfMonomialB& x, const GatheredBlockB& c) {
    long s = 1L << c.nb();
    std::vector<GatheredBlockB> stacked;
    for (const auto& b : x.blocks) {
        if (b.width % s) return ElementB::zero();
        GatheredBlockB nb{b.width, profile_sum(b.profile, c.profile)};
        nb.trim();
        stacked.push_back(nb);
    }
    auto m = normalize_blocks(std::move(stacked));
    if (!m) return ElementB::zero();
    return ElementB::monomial(*m);
}

static ElementB cup_mon(const HopfMonomialB& x, const HopfMonomialB& y) {
    if (x.component() != y.component()) return ElementB::zero();
    if (y.blocks.empty()) return ElementB::monomial(x);  // both in component 0
    if (y.blocks.size() == 1) return cup_mon_single(x, y.blocks[0]);
    GatheredBlockB c = y.blocks.front();
    HopfMonomialB yrest{{y.blocks.begin() + 1, y.blocks.end()}};
    ElementB r;
    for (const auto& [xl, xr] : coproduct(ElementB::monomial(x)).terms)
        r = r + odot(cup_mon(xl, HopfMonomialB{{c}}), cup_mon(xr, yrest));
    return r;
}

ElementB cup(const ElementB& x, const ElementB& y) {
    ElementB r;
    for (const auto& mx : x.mons)
        for (const auto& my : y.mons) r = r + cup_mon(mx, my);
    return r;
}

TensorB tensor_odot(const TensorB& x, const TensorB& y) {
    TensorB r;
    for (const auto& [xa, xb] : x.terms)
        for (const auto& [ya, yb] : y.terms) {
            auto l = odot(ElementB::monomial(xa), ElementB::monomial(ya));
            auto rr = odot(ElementB::monomial(xb), ElementB::monomial(yb));
            for (const auto& lm : l.mons)
                for (const auto& rm : rr.mons) r.toggle(lm, rm);
        }
    return r;
}

TensorB tensor_cup(const TensorB& x, const TensorB& y) {
    TensorB r;
    for (const auto& [xa, xb] : x.terms)
        for (const auto& [ya, yb] : y.terms) {
            auto l = cup(ElementB::monomial(xa), ElementB::monomial(ya));
            auto rr = cup(ElementB::monomial(xb), ElementB::monomial(yb));
            for (const auto& lm : l.mons)
                for (const auto& rm : rr.mons) r.toggle(lm, rm);
        }
    return r;
}

TensorB tensor_swap(const TensorB& x) {
    TensorB r;
    for (const auto& [a, b] : x.terms) r.toggle(b, a);
    return r;
}

// all blocks of width <= wmax and degree <= dmax
static std::vector<GatheredBlockB> block_universe(int wmax, int dmax) {
    std::vector<GatheredBlockB> out;
    for (long w = 1; w <= wmax; ++w) {
        out.push_back(GatheredBlockB::unit(w));
        int nbmax = 0;
        while (w % (1L << (nbmax + 1)) == 0) ++nbmax;
        std::vector<int> prof;
        std::function<void(int, long)> rec = [&](int k, long deg) {
            if (k >= 1 && prof.back() != 0) {
                GatheredBlockB b{w, prof};
                out.push_back(b);
            }
            if (k > nbmax) return;
            long unitdeg = k == 0 ? w : w - (w >> k);
            for (int t = 0;; ++t) {
                if (deg + (long)t * unitdeg > dmax) break;
                prof.push_back(t);
                rec(k + 1, deg + (long)t * unitdeg);
                prof.pop_back();
            }
        };
        rec(0, 0);
    }
    std::sort(out.begin(), out.end(), block_canon_less);
    return out;
}

std::vector<HopfMonomialB> basis_b(int n, int d) {
    auto univ = block_universe(n, d);
    std::vector<HopfMonomialB> out;
    std::vector<GatheredBlockB> cur;
    std::function<void(size_t, long, long)> rec = [&](size_t i, long w, long deg) {
        if (w == n && deg == d) {
            HopfMonomialB m{cur};
            std::sort(m.blocks.begin(), m.blocks.end(), block_canon_less);
            out.push_back(m);
        }
        for (size_t j = i; j < univ.size(); ++j) {
            const auto& b = univ[j];
            if (w + b.width > n || deg + b.degree() > d) continue;
            bool dup = false;
            for (const auto& c : cur)
                if (c.profile == b.profile) dup = true;
            if (dup) continue;
            cur.push_back(b);
            rec(j + 1, w + b.width, deg + b.degree());
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> poincare_b(int n, int dmax) {
    std::vector<int> out;
    for (int d = 0; d <= dmax; ++d) out.push_back((int)basis_b(n, d).size());
    return out;
}

std::string render_ascii(const HopfMonomialB& m) {
    std::string s;
    for (const auto& b : m.blocks) {
        s += "[w=" + std::to_string(b.width) + "]";
        if (b.is_unit()) {
            s += " ground";
        } else {
            if (b.profile[0])
                s += " d" + std::to_string(b.width) +
                     (b.profile[0] > 1 ? "^" + std::to_string(b.profile[0]) : "");
            for (size_t k = 1; k < b.profile.size(); ++k)
                if (b.profile[k])
                    s += " g" + std::to_string(k) + "_" + std::to_string(b.width >> k) +
                         (b.profile[k] > 1 ? "^" + std::to_string(b.profile[k]) : "");
        }
        s += "\n";
    }
    if (m.blocks.empty()) s = "[w=0] ground\n";
    return s;
}

static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string render_svg(const HopfMonomialB& m) {
    const double U = 40.0;  // px per unit
    double totalw = 0, maxh = 1;
    for (const auto& b : m.blocks) {
        totalw += (double)b.width;
        double h = 0;
        for (size_t k = 0; k < b.profile.size(); ++k)
            h += b.profile[k] * (k == 0 ? 1.0 : 1.0 - 1.0 / (1 << k));
        maxh = std::max(maxh, h);
    }
    double W = totalw * U + 20, H = maxh * U + 20, base = H - 10;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) +
                    "\" height=\"" + fmt(H) + "\">\n";
    s += "<line x1=\"10\" y1=\"" + fmt(base) + "\" x2=\"" + fmt(W - 10) + "\" y2=\"" +
         fmt(base) + "\" stroke=\"black\"/>\n";
    double x = 10;
    for (const auto& b : m.blocks) {
        double bw = b.width * U, y = base;
        for (size_t k = 0; k < b.profile.size(); ++k) {
            double bh = (k == 0 ? 1.0 : 1.0 - 1.0 / (1 << k)) * U;
            long parts = k == 0 ? b.width : b.width >> k;
            for (int t = 0; t < b.profile[k]; ++t) {
                y -= bh;
                s += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(bw) +
                     "\" height=\"" + fmt(bh) + "\" fill=\"none\" stroke=\"black\"/>\n";
                for (long p = 1; p < parts; ++p)
                    s += "<line x1=\"" + fmt(x + p * bw / parts) + "\" y1=\"" + fmt(y) +
                         "\" x2=\"" + fmt(x + p * bw / parts) + "\" y2=\"" + fmt(y + bh) +
                         "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
            }
        }
        if (b.is_unit())
            s += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(base - 4) + "\" x2=\"" +
                 fmt(x + bw) + "\" y2=\"" + fmt(base - 4) +
                 "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
        x += bw;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace coxcoh
