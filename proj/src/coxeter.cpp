#include "coxcoh/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace coxcoh {

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i + 1;
    return p;
}

int SignedPerm::apply(int i) const {
    return i > 0 ? img[i - 1] : -img[-i - 1];
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    assert(n() == o.n());
    SignedPerm r;
    r.img.resize(n());
    for (int i = 1; i <= n(); ++i) r.img[i - 1] = apply(o.apply(i));
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.img.resize(n());
    for (int i = 1; i <= n(); ++i) {
        int j = img[i - 1];
        if (j > 0) r.img[j - 1] = i; else r.img[-j - 1] = -i;
    }
    return r;
}

bool SignedPerm::in_D() const {
    int neg = 0;
    for (int v : img)
        if (v < 0) ++neg;
    return neg % 2 == 0;
}

SignedPerm generator(GroupType type, int i, int n) {
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    SignedPerm p = SignedPerm::identity(n);
    if (i == 0) {
        if (type == GroupType::B) {
            p.img[0] = -1;
        } else {
            if (n < 2) throw std::invalid_argument("D generator t_0 needs rank >= 2");
            p.img[0] = -2;
            p.img[1] = -1;
        }
    } else {
        std::swap(p.img[i - 1], p.img[i]);
    }
    return p;
}

static GroupCache build_cache(GroupType type, int n) {
    GroupCache gc;
    std::vector<SignedPerm> gens;
    for (int i = 0; i < n; ++i) gens.push_back(generator(type, i, n));
    SignedPerm id = SignedPerm::identity(n);
    gc.length[id] = 0;
    gc.elements.push_back(id);
    std::deque<SignedPerm> q{id};
    while (!q.empty()) {
        SignedPerm w = q.front();
        q.pop_front();
        int lw = gc.length[w];
        for (const auto& s : gens) {
            SignedPerm ws = w * s;
            if (gc.length.emplace(ws, lw + 1).second) {
                gc.elements.push_back(ws);
                q.push_back(ws);
            }
        }
    }
    return gc;
}

const GroupCache& group_cache(GroupType type, int n) {
    static std::map<std::pair<int, int>, GroupCache> caches;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair((int)type, n);
    auto it = caches.find(key);
    if (it == caches.end()) it = caches.emplace(key, build_cache(type, n)).first;
    return it->second;
}

int length(const SignedPerm& w, GroupType type) {
    if (type == GroupType::D && !w.in_D())
        throw std::invalid_argument("length: element not in D_n");
    const auto& gc = group_cache(type, w.n());
    return gc.length.at(w);
}

std::vector<SignedPerm> parabolic(GenSet gamma, GroupType type, int n) {
    std::vector<SignedPerm> gens;
    for (int i = 0; i < n; ++i)
        if (gamma & (1u << i)) gens.push_back(generator(type, i, n));
    SignedPerm id = SignedPerm::identity(n);
    std::map<SignedPerm, char> seen{{id, 1}};
    std::deque<SignedPerm> q{id};
    std::vector<SignedPerm> out{id};
    while (!q.empty()) {
        SignedPerm w = q.front();
        q.pop_front();
        for (const auto& s : gens) {
            SignedPerm ws = w * s;
            if (seen.emplace(ws, 1).second) {
                out.push_back(ws);
                q.push_back(ws);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPerm> min_coset_reps(GenSet T, GenSet Tprime, GroupType type, int n) {
    if ((Tprime & ~T) != 0) throw std::invalid_argument("min_coset_reps: T' not in T");
    auto wt = parabolic(T, type, n);
    auto wtp = parabolic(Tprime, type, n);
    // cosets w W_{T'}; representative minimizes (length, lex image)
    std::map<SignedPerm, char> assigned;
    std::vector<SignedPerm> reps;
    auto better = [&](const SignedPerm& a, const SignedPerm& b) {
        int la = length(a, type), lb = length(b, type);
        return la != lb ? la < lb : a < b;
    };
    for (const auto& w : wt) {
        if (assigned.count(w)) continue;
        SignedPerm best = w;
        std::vector<SignedPerm> coset;
        for (const auto& u : wtp) {
            SignedPerm wu = w * u;
            coset.push_back(wu);
            if (better(wu, best)) best = wu;
        }
        for (const auto& x : coset) assigned.emplace(x, 1);
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::optional<GenSet> conjugate_genset(const SignedPerm& beta, GenSet gamma,
                                       GroupType type, int n) {
    SignedPerm bi = beta.inverse();
    GenSet out = 0;
    for (int i = 0; i < n; ++i) {
        if (!(gamma & (1u << i))) continue;
        SignedPerm c = bi * generator(type, i, n) * beta;
        bool found = false;
        for (int j = 0; j < n; ++j)
            if (c == generator(type, j, n)) {
                out |= (1u << j);
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    return out;
}

}  // namespace coxcoh
