#include "coxcoh/steenrod.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "coxcoh/quillen.hpp"

namespace coxcoh {

namespace {

int block_height(const GatheredBlockB& b) {
    return std::accumulate(b.profile.begin(), b.profile.end(), 0);
}

bool has_delta(const GatheredBlockB& b) {
    return !b.profile.empty() && b.profile[0] > 0;
}

// tuples of width-m factors of the iterated coproduct, as a GF(2) set
using SplitSet = std::set<std::vector<HopfMonomialB>>;

SplitSet equal_splits(const HopfMonomialB& m, long w);

SplitSet equal_splits_memo(const HopfMonomialB& m, long w) {
    static std::map<std::pair<std::string, long>, SplitSet> memo;
    auto key = std::make_pair(m.str(), w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto r = equal_splits(m, w);
    memo[key] = r;
    return r;
}

SplitSet equal_splits(const HopfMonomialB& m, long w) {
    long n = m.component();
    if (n == 0) return {{}};
    auto t = coproduct(ElementB::monomial(m));
    SplitSet out;
    for (const auto& [a, b] : t.terms) {
        if (a.component() != w) continue;
        for (auto tail : equal_splits_memo(b, w)) {
            tail.insert(tail.begin(), a);
            if (auto it = out.find(tail); it != out.end())
                out.erase(it);
            else
                out.insert(std::move(tail));
        }
    }
    return out;
}

int effective_scale(const HopfMonomialB& m) {
    long n = m.component();
    if (n == 0) return 0;
    for (int l = 0; (1L << l) <= n; ++l) {
        long w = 1L << l;
        if (n % w != 0) continue;
        if (!equal_splits_memo(m, w).empty()) return l;
    }
    return 1 << 20;  // never visible at any admissible scale
}

}  // namespace

MonomialStats stats_b(const HopfMonomialB& m) {
    MonomialStats s{0, 0, true};
    int esc = 1 << 20;
    for (const auto& b : m.blocks) {
        if (b.is_unit()) s.full_width = false;
        s.height = std::max(s.height, block_height(b));
        esc = std::min(esc, effective_scale(HopfMonomialB{{b}}));
    }
    s.effective_scale = m.blocks.empty() ? 0 : esc;
    return s;
}

ElementB sq(int i, const ElementB& x) {
    if (i < 0) throw std::invalid_argument("sq index");
    ElementB r;
    std::map<std::pair<long, long>, ElementB> buckets;
    for (const auto& m : x.mons) {
        if (m.component() == 0) {
            if (i == 0) r.toggle(m);
        } else {
            buckets[{m.component(), m.degree()}].toggle(m);
        }
    }
    for (const auto& [nd, part] : buckets) {
        auto [n, d] = nd;
        if (i > d) continue;
        auto sb = sites_b(static_cast<int>(n));
        std::vector<Gf2Poly> vals;
        for (const auto& s : sb) {
            Gf2Poly v(s.nvars());
            for (const auto& m : part.mons) v = v + restrict_b(m, s);
            vals.push_back(total_steenrod(v).component(static_cast<int>(d) + i));
        }
        auto sol = quillen_solve_b(static_cast<int>(n), static_cast<int>(d) + i, vals);
        if (!sol) throw std::logic_error("square left the detected span");
        r = r + *sol;
    }
    return r;
}

ElementD sq(int i, const ElementD& x) {
    if (i < 0) throw std::invalid_argument("sq index");
    ElementD r;
    std::map<std::pair<long, long>, ElementD> buckets;
    for (const auto& m : x.mons) {
        if (m.component() == 0) {
            if (i == 0) r.toggle(m);
        } else {
            buckets[{m.component(), m.degree()}].toggle(m);
        }
    }
    for (const auto& [nd, part] : buckets) {
        auto [n, d] = nd;
        if (i > d) continue;
        auto sd = sites_d(static_cast<int>(n));
        std::vector<Gf2Poly> vals;
        for (const auto& s : sd) {
            Gf2Poly v(s.nvars());
            for (const auto& m : part.mons) v = v + restrict_d(m, s);
            vals.push_back(total_steenrod(v).component(static_cast<int>(d) + i));
        }
        auto sol = quillen_solve_d(static_cast<int>(n), static_cast<int>(d) + i, vals);
        if (!sol) throw std::logic_error("square left the detected span");
        r = r + *sol;
    }
    return r;
}

ElementB closed_form_sq_gamma(int k, int n, int i) {
    long comp = 1L << (n + k);
    long deg = (1L << (n + k)) - (1L << n) + i;
    ElementB r;
    for (const auto& m : basis_b(static_cast<int>(comp), static_cast<int>(deg))) {
        auto s = stats_b(m);
        if (!s.full_width || s.height > 2 || s.effective_scale < k) continue;
        bool delta = false;
        for (const auto& b : m.blocks) delta = delta || has_delta(b);
        if (!delta) r.toggle(m);
    }
    return r;
}

ElementB closed_form_sq_delta(int n, int i) {
    long comp = 1L << n;
    long deg = (1L << n) + i;
    ElementB r;
    for (const auto& m : basis_b(static_cast<int>(comp), static_cast<int>(deg))) {
        auto s = stats_b(m);
        if (!s.full_width || s.height > 2 || s.effective_scale < 1) continue;
        bool all_delta = true;
        for (const auto& b : m.blocks) all_delta = all_delta && has_delta(b);
        if (all_delta) r.toggle(m);
    }
    return r;
}

ElementD sq_d_closed(int k, int n, int i, bool minus) {
    long comp = static_cast<long>(n) << k;
    long deg = static_cast<long>(n) * ((1L << k) - 1) + i;
    Charge want = minus ? Charge::Minus : Charge::Plus;
    ElementD r;
    for (const auto& m : basis_d(static_cast<int>(comp), static_cast<int>(deg))) {
        if (m.charge != want) continue;
        auto s = stats_b(m.base);
        if (!s.full_width || s.height > 2 || s.effective_scale < k) continue;
        bool delta = false;
        for (const auto& b : m.base.blocks) delta = delta || has_delta(b);
        if (!delta) r.toggle(m);
    }
    return r;
}

}  // namespace coxcoh
