#include "coxcoh/hopf_d.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coxcoh/quillen.hpp"

namespace coxcoh {

namespace {

GatheredBlockB delta_col(long n) { return GatheredBlockB::delta(n, 1); }

HopfMonomialB mon1(GatheredBlockB b) { return HopfMonomialB{{std::move(b)}}; }

ChargedMonomial cmon(HopfMonomialB base, Charge c) {
    return ChargedMonomial{std::move(base), c};
}

ElementD elt(ChargedMonomial m) { return ElementD::monomial(std::move(m)); }

bool is_neutral_unit(const ChargedMonomial& m) {
    return m.charge == Charge::Neutral && m.base.blocks.size() == 1 &&
           m.base.blocks[0].is_unit();
}

}  // namespace

MonClass classify(const HopfMonomialB& m) {
    bool has_p = false, has_u = false;
    int best_h = -1;
    long best_w = 0;
    for (const auto& b : m.blocks) {
        if (b.is_unit()) {
            has_u = true;
        } else if (b.nb() == 0) {
            has_p = true;
            if (b.profile[0] > best_h) {
                best_h = b.profile[0];
                best_w = b.width;
            }
        }
    }
    if (has_p && best_w == 1) return MonClass::Zero;
    if (has_p || has_u) return MonClass::Neutral;
    return MonClass::Split;
}

std::string ChargedMonomial::str() const {
    if (base.blocks.empty()) return charge == Charge::Minus ? "e-" : "e+";
    std::string s = "(" + base.str() + ")";
    switch (charge) {
        case Charge::Neutral: return s + "^0";
        case Charge::Plus: return s + "^+";
        case Charge::Minus: return s + "^-";
    }
    return s;
}

ElementD ElementD::monomial(ChargedMonomial m) {
    ElementD e;
    e.mons.insert(std::move(m));
    return e;
}

ElementD ElementD::operator+(const ElementD& o) const {
    ElementD r = *this;
    for (const auto& m : o.mons) r.toggle(m);
    return r;
}

void ElementD::toggle(const ChargedMonomial& m) {
    auto it = mons.find(m);
    if (it == mons.end())
        mons.insert(m);
    else
        mons.erase(it);
}

std::string ElementD::str() const {
    if (mons.empty()) return "0";
    std::string s;
    for (const auto& m : mons) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    return s;
}

TensorD TensorD::operator+(const TensorD& o) const {
    TensorD r = *this;
    for (const auto& t : o.terms) r.toggle(t.first, t.second);
    return r;
}

void TensorD::toggle(const ChargedMonomial& a, const ChargedMonomial& b) {
    auto key = std::make_pair(a, b);
    auto it = terms.find(key);
    if (it == terms.end())
        terms.insert(key);
    else
        terms.erase(it);
}

ElementD one_plus() { return elt(cmon({}, Charge::Plus)); }
ElementD one_minus() { return elt(cmon({}, Charge::Minus)); }

ElementD delta0(int n, int m) {
    std::vector<GatheredBlockB> blocks;
    if (n > 0) blocks.push_back(delta_col(n));
    if (m > 0) blocks.push_back(GatheredBlockB::unit(m));
    auto mon = normalize_blocks(std::move(blocks));
    if (!mon) return ElementD::zero();
    return rho(ElementB::monomial(*mon));
}

ElementD gamma_sign(int k, int m, bool minus) {
    return elt(cmon(mon1(GatheredBlockB::gamma(k, m)), minus ? Charge::Minus : Charge::Plus));
}

ElementD rho(const ElementB& x) {
    ElementD r;
    std::map<std::pair<long, long>, ElementB> rest;
    for (const auto& m : x.mons) {
        if (m.blocks.empty()) {
            // the unit restricts to the invariant sum of the two unit classes
            r.toggle(cmon(m, Charge::Plus));
            r.toggle(cmon(m, Charge::Minus));
        } else if (classify(m) == MonClass::Neutral) {
            r.toggle(cmon(m, Charge::Neutral));
        } else {
            rest[{m.component(), m.degree()}].toggle(m);
        }
    }
    for (const auto& [nd, e] : rest) {
        auto [n, d] = nd;
        std::vector<Gf2Poly> vals;
        for (const auto& s : sites_d((int)n)) {
            Gf2Poly v = Gf2Poly::zero(s.nvars());
            for (const auto& m : e.mons) v = v + transport_b(m, s);
            vals.push_back(v);
        }
        auto sol = quillen_solve_d((int)n, (int)d, vals);
        if (!sol) throw std::logic_error("restriction left the detected span");
        r = r + *sol;
    }
    return r;
}

ElementD iota_d(const ElementD& x) {
    ElementD r;
    for (auto m : x.mons) {
        if (m.charge == Charge::Plus)
            m.charge = Charge::Minus;
        else if (m.charge == Charge::Minus)
            m.charge = Charge::Plus;
        r.toggle(m);
    }
    return r;
}

ElementB tr_d(const ElementD& x) {
    // sites with a size-1 part contain a free flip, so the transferred class
    // dies there; everywhere else it restricts to 1 + iota of the argument
    ElementB r;
    std::map<std::pair<long, long>, ElementD> charged;
    for (const auto& m : x.mons) {
        if (m.component() == 0) {
            if (m.charge != Charge::Neutral) r.toggle(HopfMonomialB{});
        } else if (m.charge != Charge::Neutral) {
            charged[{m.component(), m.degree()}].toggle(m);
        }
        // an invariant class transfers to the index times itself, which is even
    }
    for (const auto& [nd, part] : charged) {
        auto [n, d] = nd;
        auto sb = sites_b(static_cast<int>(n));
        std::vector<Gf2Poly> vals;
        for (const auto& s : sb) {
            Gf2Poly v(s.nvars());
            bool has_one = std::find(s.parts.begin(), s.parts.end(), 1) != s.parts.end();
            if (!has_one) {
                SiteD sd{s.parts, false};
                for (auto m : part.mons) {
                    v = v + restrict_d(m, sd);
                    m.charge = m.charge == Charge::Plus ? Charge::Minus : Charge::Plus;
                    v = v + restrict_d(m, sd);
                }
            }
            vals.push_back(std::move(v));
        }
        auto sol = quillen_solve_b(static_cast<int>(n), static_cast<int>(d), vals);
        if (!sol) throw std::logic_error("transfer left the detected span");
        r = r + *sol;
    }
    return r;
}

ElementD odot_d(const ElementD& x, const ElementD& y) {
    ElementD r;
    for (const auto& mx : x.mons)
        for (const auto& my : y.mons) {
            bool nx = mx.charge == Charge::Neutral, ny = my.charge == Charge::Neutral;
            if (nx && ny) continue;  // even covering index kills the transfer
            if (!nx && !ny) {
                Charge s = ((mx.charge == Charge::Minus) != (my.charge == Charge::Minus))
                               ? Charge::Minus
                               : Charge::Plus;
                auto bb = odot(ElementB::monomial(mx.base), ElementB::monomial(my.base));
                for (const auto& m : bb.mons) r.toggle(cmon(m, s));
            } else {
                // a restricted factor only sees the transfer of the other one
                const auto& zc = nx ? my : mx;
                const auto& nc = nx ? mx : my;
                r = r + rho(odot(tr_d(elt(zc)), ElementB::monomial(nc.base)));
            }
        }
    return r;
}

// ---------- cup product ----------

namespace {

ElementD cup_pair(const ChargedMonomial& X, const ChargedMonomial& Y) {
    static std::map<std::pair<std::string, std::string>, ElementD> memo;
    auto key = std::make_pair(X.str(), Y.str());
    if (key.second < key.first) std::swap(key.first, key.second);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long n = X.component();
    int d = (int)(X.degree() + Y.degree());
    std::vector<Gf2Poly> vals;
    for (const auto& s : sites_d((int)n))
        vals.push_back(restrict_d(X, s) * restrict_d(Y, s));
    auto sol = quillen_solve_d((int)n, d, vals);
    if (!sol) throw std::logic_error("product left the detected span");
    memo.emplace(key, *sol);
    return *sol;
}

}  // namespace

ElementD cup_d(const ElementD& x, const ElementD& y) {
    ElementD r;
    for (const auto& mx : x.mons)
        for (const auto& my : y.mons) {
            if (mx.component() != my.component()) continue;
            if (mx.component() == 0) {
                if (mx.charge == my.charge) r.toggle(mx);  // e+.e+ = e+, e-.e- = e-
                continue;
            }
            if (is_neutral_unit(mx)) {
                r.toggle(my);
                continue;
            }
            if (is_neutral_unit(my)) {
                r.toggle(mx);
                continue;
            }
            r = r + cup_pair(mx, my);
        }
    return r;
}

// ---------- coproduct ----------

namespace {

TensorD gen_delta0_cop(long M) {
    TensorD t;
    for (long i = 0; i <= M; ++i) {
        long j = M - i;
        if (i == 1 || j == 1) continue;  // width-1 height-1 column restricts to 0
        // invariant classes see both unit classes at the endpoints
        for (Charge e : {Charge::Plus, Charge::Minus}) {
            if (i > 0 && j > 0 && e == Charge::Minus) continue;
            ChargedMonomial l = i == 0 ? cmon({}, e) : cmon(mon1(delta_col(i)), Charge::Neutral);
            ChargedMonomial r = j == 0 ? cmon({}, e) : cmon(mon1(delta_col(j)), Charge::Neutral);
            t.toggle(l, r);
        }
    }
    return t;
}

TensorD gen_gamma_cop(int k, long m) {
    TensorD t;
    for (long l = 0; l <= m; ++l)
        for (Charge s : {Charge::Plus, Charge::Minus}) {
            ChargedMonomial a = l == 0 ? cmon({}, s) : cmon(mon1(GatheredBlockB::gamma(k, l)), s);
            ChargedMonomial b =
                m - l == 0 ? cmon({}, s) : cmon(mon1(GatheredBlockB::gamma(k, m - l)), s);
            t.toggle(a, b);
        }
    return t;
}

// conjugation acts on one tensor factor only
TensorD tensor_iota_left(const TensorD& x) {
    TensorD r;
    for (const auto& [a, b] : x.terms)
        r.toggle(*iota_d(elt(a)).mons.begin(), b);
    return r;
}

// component p = 0 or p = M of the coproduct of one plus column
TensorD block_cop_edge(const GatheredBlockB& b, bool left_full) {
    TensorD t;
    for (Charge c : {Charge::Plus, Charge::Minus}) {
        ChargedMonomial full = cmon(mon1(b), c), unit = cmon({}, c);
        if (left_full)
            t.toggle(full, unit);
        else
            t.toggle(unit, full);
    }
    return t;
}

TensorD block_coproduct_comp(const GatheredBlockB& b, bool minus, long p) {
    long M = b.width;
    if (p < 0 || p > M) return {};
    TensorD t;
    if (p == 0 || p == M) {
        t = block_cop_edge(b, p == M);
    } else {
        bool first = true;
        auto mul = [&](const TensorD& g) {
            TensorD f;
            for (const auto& [l, r] : g.terms)
                if (l.component() == p) f.toggle(l, r);
            t = first ? f : tensor_cup_d(t, f);
            first = false;
        };
        if (!b.profile.empty() && b.profile[0] > 0)
            for (int i = 0; i < b.profile[0]; ++i) mul(gen_delta0_cop(M));
        for (size_t k = 1; k < b.profile.size(); ++k)
            for (int i = 0; i < b.profile[k]; ++i) mul(gen_gamma_cop((int)k, M >> k));
        if (first) throw std::invalid_argument("unit column has no charged coproduct");
    }
    if (minus) t = tensor_iota_left(t);
    return t;
}

TensorD block_coproduct_prime_comp(const GatheredBlockB& b, long p) {
    TensorD t = block_coproduct_comp(b, false, p);
    TensorD out;
    for (const auto& [l, r] : t.terms)
        if (l.charge != Charge::Minus) out.toggle(l, r);
    return out;
}

}  // namespace

TensorD tensor_odot_d(const TensorD& x, const TensorD& y) {
    TensorD r;
    for (const auto& [xa, xb] : x.terms)
        for (const auto& [ya, yb] : y.terms) {
            auto l = odot_d(elt(xa), elt(ya));
            auto rr = odot_d(elt(xb), elt(yb));
            for (const auto& lm : l.mons)
                for (const auto& rm : rr.mons) r.toggle(lm, rm);
        }
    return r;
}

TensorD tensor_cup_d(const TensorD& x, const TensorD& y) {
    TensorD r;
    for (const auto& [xa, xb] : x.terms)
        for (const auto& [ya, yb] : y.terms) {
            auto l = cup_d(elt(xa), elt(ya));
            if (l.is_zero()) continue;
            auto rr = cup_d(elt(xb), elt(yb));
            for (const auto& lm : l.mons)
                for (const auto& rm : rr.mons) r.toggle(lm, rm);
        }
    return r;
}

TensorD tensor_swap_d(const TensorD& x) {
    TensorD r;
    for (const auto& [a, b] : x.terms) r.toggle(b, a);
    return r;
}

TensorD tensor_iota_d(const TensorD& x) {
    TensorD r;
    for (const auto& [a, b] : x.terms) {
        auto ia = *iota_d(elt(a)).mons.begin();
        auto ib = *iota_d(elt(b)).mons.begin();
        r.toggle(ia, ib);
    }
    return r;
}

TensorD block_coproduct(const GatheredBlockB& b, bool minus) {
    TensorD t;
    for (long p = 0; p <= b.width; ++p) t = t + block_coproduct_comp(b, minus, p);
    return t;
}

TensorD block_coproduct_prime(const GatheredBlockB& b) {
    TensorD t = block_coproduct(b, false);
    TensorD out;
    for (const auto& [l, r] : t.terms)
        if (l.charge != Charge::Minus) out.toggle(l, r);
    return out;
}

TensorD coproduct_component(const ChargedMonomial& W, long p) {
    long n = W.component();
    if (p < 0 || p > n) return {};
    static std::map<std::pair<std::string, long>, TensorD> memo;
    auto key = std::make_pair(W.str(), p);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TensorD out;
    if (W.charge == Charge::Neutral) {
        for (const auto& [a, b] : coproduct(ElementB::monomial(W.base)).terms) {
            if (a.component() != p) continue;
            auto da = rho(ElementB::monomial(a));
            auto db = rho(ElementB::monomial(b));
            for (const auto& ma : da.mons)
                for (const auto& mb : db.mons) out.toggle(ma, mb);
        }
    } else if (W.base.blocks.empty()) {
        out.toggle(W, W);  // group-like units
    } else if (W.base.blocks.size() == 1) {
        out = block_coproduct_comp(W.base.blocks[0], W.charge == Charge::Minus, p);
    } else {
        // peel the first column with + charge, parity stays on the rest
        GatheredBlockB b = W.base.blocks.front();
        HopfMonomialB rest{{W.base.blocks.begin() + 1, W.base.blocks.end()}};
        ChargedMonomial rc = cmon(rest, W.charge);
        for (long p1 = 0; p1 <= std::min(p, b.width); ++p1)
            out = out + tensor_odot_d(block_coproduct_prime_comp(b, p1),
                                      coproduct_component(rc, p - p1));
    }
    memo.emplace(key, out);
    return out;
}

TensorD coproduct_d(const ElementD& x) {
    TensorD out;
    for (const auto& W : x.mons)
        for (long p = 0; p <= W.component(); ++p)
            out = out + coproduct_component(W, p);
    return out;
}

std::vector<ChargedMonomial> basis_d(int n, int d) {
    std::vector<ChargedMonomial> out;
    for (const auto& m : basis_b(n, d)) {
        switch (classify(m)) {
            case MonClass::Zero: break;
            case MonClass::Neutral: out.push_back(cmon(m, Charge::Neutral)); break;
            case MonClass::Split:
                out.push_back(cmon(m, Charge::Plus));
                if (!(n == 0 && d == 0)) out.push_back(cmon(m, Charge::Minus));
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> poincare_d(int n, int dmax) {
    std::vector<int> out;
    for (int d = 0; d <= dmax; ++d) out.push_back((int)basis_d(n, d).size());
    return out;
}

}  // namespace coxcoh
