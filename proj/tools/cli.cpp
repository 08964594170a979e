#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxcoh/foxneuwirth.hpp"
#include "coxcoh/hopf_b.hpp"
#include "coxcoh/hopf_d.hpp"
#include "coxcoh/quillen.hpp"
#include "coxcoh/steenrod.hpp"

using namespace coxcoh;
using nlohmann::json;

namespace {

// ---------- expression parsing ----------

struct ParseError {
    size_t pos;
    std::string msg;
};

struct Value {
    // exactly one engaged; ring tracked explicitly to reject mixtures
    char ring = 0;  // 'B' or 'D'
    ElementB b;
    ElementD d;
};

class Parser {
public:
    explicit Parser(std::string s) : s_(std::move(s)) {}

    Value parse() {
        auto v = element();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError{pos_, "trailing input"};
        return v;
    }

private:
    std::string s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    long number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError{pos_, "number expected"};
        return std::stol(s_.substr(start, pos_ - start));
    }

    static void same_ring(const Value& a, const Value& b, size_t pos) {
        if (a.ring != b.ring) throw ParseError{pos, "mixed B and D atoms"};
    }

    Value element() {
        auto v = term();
        while (true) {
            skip_ws();
            if (!eat('+')) return v;
            size_t p = pos_;
            auto w = term();
            same_ring(v, w, p);
            if (v.ring == 'B')
                v.b = v.b + w.b;
            else
                v.d = v.d + w.d;
        }
    }

    Value term() {
        auto v = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                size_t p = pos_;
                auto w = factor();
                same_ring(v, w, p);
                if (v.ring == 'B')
                    v.b = cup(v.b, w.b);
                else
                    v.d = cup_d(v.d, w.d);
            } else if (c == 'o' && !std::isalnum(static_cast<unsigned char>(
                                       pos_ + 1 < s_.size() ? s_[pos_ + 1] : ' '))) {
                ++pos_;
                size_t p = pos_;
                auto w = factor();
                same_ring(v, w, p);
                if (v.ring == 'B')
                    v.b = odot(v.b, w.b);
                else
                    v.d = odot_d(v.d, w.d);
            } else {
                return v;
            }
        }
    }

    Value factor() {
        auto v = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            long e = number();
            if (e == 0) throw ParseError{pos_, "zeroth power is component-ambiguous"};
            Value r = v;
            for (long i = 1; i < e; ++i) {
                if (v.ring == 'B')
                    r.b = cup(r.b, v.b);
                else
                    r.d = cup_d(r.d, v.d);
            }
            return r;
        }
        return v;
    }

    static ElementB basis_unit_b() { return ElementB::unit(); }

    Value atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError{pos_, "atom expected"};
        char c = s_[pos_];
        if (c == '(') {
            size_t open = pos_++;
            auto v = element();
            if (!eat(')')) throw ParseError{pos_, "missing )"};
            // printed charged monomials: (B-monomial)^+ / ^- / ^0
            if (pos_ < s_.size() && s_[pos_] == '^' && pos_ + 1 < s_.size() &&
                (s_[pos_ + 1] == '+' || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '0')) {
                char tag = s_[pos_ + 1];
                pos_ += 2;
                if (v.ring != 'B' || v.b.mons.size() != 1)
                    throw ParseError{open, "charge tag needs a single B monomial"};
                Charge ch = tag == '+'   ? Charge::Plus
                            : tag == '-' ? Charge::Minus
                                         : Charge::Neutral;
                Value r;
                r.ring = 'D';
                r.d = ElementD::monomial(ChargedMonomial{*v.b.mons.begin(), ch});
                return r;
            }
            return v;
        }
        Value r;
        if (c == 'd') {
            ++pos_;
            long n = number();
            r.ring = 'B';
            r.b = ElementB::monomial(HopfMonomialB{{GatheredBlockB::delta(n)}});
            return r;
        }
        if (c == 'g') {
            ++pos_;
            long k = number();
            if (!eat('_')) throw ParseError{pos_, "'_' expected in gamma atom"};
            long m = number();
            r.ring = 'B';
            r.b = ElementB::monomial(
                HopfMonomialB{{GatheredBlockB::gamma(static_cast<int>(k), m)}});
            return r;
        }
        if (c == 'u') {
            ++pos_;
            long n = number();
            r.ring = 'B';
            r.b = n == 0 ? ElementB::unit()
                         : ElementB::monomial(HopfMonomialB{{GatheredBlockB::unit(n)}});
            return r;
        }
        if (c == 'e' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == '+' || s_[pos_ + 1] == '-')) {
            bool minus = s_[pos_ + 1] == '-';
            pos_ += 2;
            r.ring = 'D';
            r.d = minus ? one_minus() : one_plus();
            return r;
        }
        if (c == 'D') {
            ++pos_;
            long n = number();
            if (!eat('_')) throw ParseError{pos_, "'_' expected in delta0 atom"};
            long m = number();
            r.ring = 'D';
            r.d = delta0(static_cast<int>(n), static_cast<int>(m));
            return r;
        }
        if (c == 'G' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == '+' || s_[pos_ + 1] == '-')) {
            bool minus = s_[pos_ + 1] == '-';
            pos_ += 2;
            long k = number();
            if (!eat('_')) throw ParseError{pos_, "'_' expected in gamma atom"};
            long m = number();
            r.ring = 'D';
            r.d = gamma_sign(static_cast<int>(k), static_cast<int>(m), minus);
            return r;
        }
        if (c == 'U') {
            ++pos_;
            long n = number();
            r.ring = 'D';
            r.d = rho(n == 0 ? ElementB::unit()
                             : ElementB::monomial(HopfMonomialB{{GatheredBlockB::unit(n)}}));
            return r;
        }
        throw ParseError{pos_, "unknown atom"};
    }
};

Value parse_expr(const std::string& s) { return Parser(s).parse(); }

// ---------- json ----------

json monomial_json(const HopfMonomialB& m, const char* charge) {
    json blocks = json::array();
    for (const auto& b : m.blocks)
        blocks.push_back({{"width", b.width}, {"profile", b.profile}});
    json j = {{"blocks", blocks}};
    if (charge)
        j["charge"] = charge;
    else
        j["charge"] = nullptr;
    return j;
}

const char* charge_tag(Charge c) {
    switch (c) {
        case Charge::Plus: return "+";
        case Charge::Minus: return "-";
        default: return "0";
    }
}

// ---------- cached Betti numbers ----------

std::string complex_tag(Complex v) {
    return v == Complex::B ? "B" : v == Complex::D ? "D" : "Dp";
}

int rank_of(Complex v, int n, int d, const std::string& cache) {
    if (cache.empty()) return coboundary(v, n, d).rank();
    auto path = std::filesystem::path(cache) /
                ("cb_" + complex_tag(v) + "_" + std::to_string(n) + "_" + std::to_string(d) +
                 ".txt");
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return BitMatrix::from_triplets(ss.str()).rank();
    }
    const auto& m = coboundary(v, n, d);
    std::ofstream out(path);
    out << m.to_triplets();
    return m.rank();
}

int betti_cached(Complex v, int n, int d, const std::string& cache) {
    int dim = cell_space_dim(v, n, d);
    int r = rank_of(v, n, d, cache);
    int rprev = d > 0 ? rank_of(v, n, d - 1, cache) : 0;
    return dim - r - rprev;
}

// ---------- site parsing ----------

bool parse_parts(const std::string& s, size_t& i, std::vector<long>& parts) {
    if (i >= s.size() || s[i] != '(') return false;
    ++i;
    while (i < s.size() && s[i] != ')') {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) return false;
        parts.push_back(std::stol(s.substr(i, j - i)));
        i = j;
        if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) return false;
    ++i;
    return true;
}

// ---------- verification ----------

struct Report {
    int checks = 0, failures = 0;
    void line(const std::string& what, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    }
};

void verify_betti(Report& rep, int max_n, int max_d, const std::string& cache) {
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= max_d; ++d)
            rep.line("B basis vs cells n=" + std::to_string(n) + " d=" + std::to_string(d),
                     static_cast<int>(basis_b(n, d).size()) ==
                         betti_cached(Complex::B, n, d, cache));
    int dn = std::min(max_n, 4);
    for (int n = 2; n <= dn; ++n)
        for (int d = 0; d <= max_d; ++d) {
            int bp = betti_cached(Complex::Dprime, n, d, cache);
            rep.line("D basis vs cells n=" + std::to_string(n) + " d=" + std::to_string(d),
                     static_cast<int>(basis_d(n, d).size()) == bp);
            rep.line("D two complexes n=" + std::to_string(n) + " d=" + std::to_string(d),
                     betti_cached(Complex::D, n, d, cache) == bp);
        }
}

void verify_axioms(Report& rep, int max_n, int max_d) {
    std::vector<HopfMonomialB> bp;
    std::vector<ChargedMonomial> dp;
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= max_d; ++d) {
            for (const auto& m : basis_b(n, d)) bp.push_back(m);
            for (const auto& m : basis_d(n, d)) dp.push_back(m);
        }
    std::mt19937 rng(2024);
    bool cupc = true, cupa = true, odc = true, oda = true, coas = true, bial1 = true,
         bial2 = true, dbial = true, ddist = true;
    for (int t = 0; t < 25; ++t) {
        auto x = ElementB::monomial(bp[rng() % bp.size()]);
        auto y = ElementB::monomial(bp[rng() % bp.size()]);
        auto z = ElementB::monomial(bp[rng() % bp.size()]);
        cupc = cupc && cup(x, y) == cup(y, x);
        cupa = cupa && cup(cup(x, y), z) == cup(x, cup(y, z));
        odc = odc && odot(x, y) == odot(y, x);
        oda = oda && odot(odot(x, y), z) == odot(x, odot(y, z));
        bial1 = bial1 && coproduct(odot(x, y)) == tensor_odot(coproduct(x), coproduct(y));
        bial2 = bial2 && coproduct(cup(x, y)) == tensor_cup(coproduct(x), coproduct(y));
        auto xd = ElementD::monomial(dp[rng() % dp.size()]);
        auto yd = ElementD::monomial(dp[rng() % dp.size()]);
        auto zd = ElementD::monomial(dp[rng() % dp.size()]);
        dbial = dbial &&
                coproduct_d(cup_d(xd, yd)) == tensor_cup_d(coproduct_d(xd), coproduct_d(yd));
        ElementD dist;
        for (const auto& [a, b] : coproduct_d(xd).terms)
            dist = dist + odot_d(cup_d(ElementD::monomial(a), yd),
                                 cup_d(ElementD::monomial(b), zd));
        ddist = ddist && cup_d(xd, odot_d(yd, zd)) == dist;
    }
    for (int t = 0; t < 10; ++t) {
        auto x = ElementB::monomial(bp[rng() % bp.size()]);
        std::set<std::vector<HopfMonomialB>> l, r;
        auto flip = [](std::set<std::vector<HopfMonomialB>>& s, std::vector<HopfMonomialB> v) {
            auto it = s.find(v);
            if (it == s.end())
                s.insert(std::move(v));
            else
                s.erase(it);
        };
        for (const auto& [a, b] : coproduct(x).terms) {
            for (const auto& [a1, a2] : coproduct(ElementB::monomial(a)).terms)
                flip(l, {a1, a2, b});
            for (const auto& [b1, b2] : coproduct(ElementB::monomial(b)).terms)
                flip(r, {a, b1, b2});
        }
        coas = coas && l == r;
    }
    rep.line("coassociativity", coas);
    rep.line("cup commutative", cupc);
    rep.line("cup associative", cupa);
    rep.line("transfer commutative", odc);
    rep.line("transfer associative", oda);
    rep.line("coproduct vs transfer (B)", bial1);
    rep.line("coproduct vs cup (B)", bial2);
    rep.line("coproduct vs cup (D)", dbial);
    rep.line("distributivity (D)", ddist);
    // a stored witness that the transfer bialgebra law fails on the index-2 side
    auto b = gamma_sign(1, 1, false);
    auto w = delta0(2, 0);
    rep.line("transfer coproduct witness (D)",
             coproduct_d(odot_d(b, w)) != tensor_odot_d(coproduct_d(b), coproduct_d(w)));
}

void verify_relations(Report& rep) {
    auto g11 = ElementB::monomial(HopfMonomialB{{GatheredBlockB::gamma(1, 1)}});
    rep.line("transfer square of gamma_{1,1}", odot(g11, g11).is_zero());
    rep.line("mixed signed product",
             cup_d(gamma_sign(1, 1, false), gamma_sign(1, 1, true)) == delta0(2, 0));
    rep.line("signed product at scale two",
             cup_d(gamma_sign(2, 1, false), gamma_sign(2, 1, true)).is_zero());
    rep.line("one-point delta classes vanish", delta0(1, 2).is_zero());
    rep.line("negative unit square", odot_d(one_minus(), one_minus()) == one_plus());
    bool invol = true;
    for (auto x : {gamma_sign(1, 2, false), delta0(2, 1), gamma_sign(2, 1, true)})
        invol = invol && iota_d(iota_d(x)) == x;
    rep.line("involution squares to identity", invol);
    bool trrho = true;
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& m : basis_b(n, d))
                trrho = trrho && tr_d(rho(ElementB::monomial(m))).is_zero();
    rep.line("transfer of a restriction vanishes", trrho);
    // delta0 times gamma pushes the units outside the column
    auto lhs = cup_d(delta0(2, 2), gamma_sign(1, 2, false));
    auto rhs = odot_d(cup_d(delta0(2, 0), gamma_sign(1, 1, false)), gamma_sign(1, 1, false));
    rep.line("column exchange relation", lhs == rhs);
}

void verify_steenrod(Report& rep, int max_n, int max_d) {
    bool sq0 = true, top = true, cartan = true;
    std::mt19937 rng(99);
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= max_d; ++d) {
            ElementB x;
            for (const auto& m : basis_b(n, d))
                if (rng() & 1) x.toggle(m);
            sq0 = sq0 && sq(0, x) == x;
            top = top && sq(d, x) == cup(x, x);
        }
    for (int t = 0; t < 6; ++t) {
        auto bb = basis_b(2, 1 + static_cast<int>(rng() % 2));
        auto cc = basis_b(1 + static_cast<int>(rng() % 2), 1);
        if (bb.empty() || cc.empty()) continue;
        auto x = ElementB::monomial(bb[rng() % bb.size()]);
        auto y = ElementB::monomial(cc[rng() % cc.size()]);
        ElementB w1, w2;
        for (int i = 0; i <= 2; ++i) {
            w1 = w1 + cup(sq(i, x), sq(2 - i, y));
            w2 = w2 + odot(sq(i, x), sq(2 - i, y));
        }
        cartan = cartan && sq(2, cup(x, y)) == w1 && sq(2, odot(x, y)) == w2;
    }
    rep.line("unit square", sq0);
    rep.line("top square is the cup square", top);
    rep.line("cartan formula", cartan);
    for (int i = 0; i <= 2; ++i)
        rep.line("closed form gamma square i=" + std::to_string(i),
                 closed_form_sq_gamma(1, 1, i) ==
                     sq(i, ElementB::monomial(HopfMonomialB{{GatheredBlockB::gamma(1, 2)}})));
    // the delta closed form disagrees under the literal scale reading; report
    auto lit = closed_form_sq_delta(1, 1);
    auto honest = sq(1, ElementB::monomial(HopfMonomialB{{GatheredBlockB::delta(2)}}));
    if (lit != honest) {
        std::cout << "note delta square scale discrepancy (expected):\n"
                  << "note   enumerated: " << lit.str() << "\n"
                  << "note   detected:   " << honest.str() << "\n";
    }
    rep.line("delta square computed by detection",
             honest == ElementB::monomial(*normalize_blocks({GatheredBlockB{2, {1, 1}}})) +
                           ElementB::monomial(*normalize_blocks(
                               {GatheredBlockB::delta(1, 2), GatheredBlockB::delta(1)})));
}

void verify_oracle(Report& rep, int max_n, int max_d) {
    bool ranks = true;
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= max_d; ++d)
            ranks = ranks && quillen_rank_b(n, d) == static_cast<int>(basis_b(n, d).size());
    rep.line("B detection has full rank", ranks);
    bool ranksd = true;
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        for (int d = 0; d <= max_d; ++d)
            ranksd = ranksd && quillen_rank_d(n, d) == static_cast<int>(basis_d(n, d).size());
    rep.line("D detection has full rank", ranksd);
    bool hom = true;
    for (int n = 2; n <= std::min(max_n, 3); ++n)
        for (const auto& a : basis_b(n, 1))
            for (const auto& b : basis_b(n, 1)) {
                auto p = cup(ElementB::monomial(a), ElementB::monomial(b));
                for (const auto& s : sites_b(n)) {
                    Gf2Poly want(s.nvars());
                    for (const auto& m : p.mons) want = want + restrict_b(m, s);
                    hom = hom && restrict_b(a, s) * restrict_b(b, s) == want;
                }
            }
    rep.line("restriction is multiplicative", hom);
    bool coc = is_cocycle(delta_cochain(2)) && is_cocycle(gamma_cochain(1, 1)) &&
               is_cocycle(gplus_cochain(1, 1)) && is_cocycle(gminus_cochain(1, 1));
    rep.line("generator cochains are cocycles", coc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 cohomology rings of the signed and even-signed permutation groups"};
    app.require_subcommand(1);

    std::string ring = "B", format = "text", expr, op = "none", site_s, verb, cache_dir;
    int n = 1, deg = 0, sq_i = 0, max_n = 3, max_d = 4;

    auto* cb = app.add_subcommand("basis", "list the additive basis of one bidegree");
    cb->add_option("--ring", ring)->check(CLI::IsMember({"B", "D"}));
    cb->add_option("--n", n)->required();
    cb->add_option("--deg", deg)->required();
    cb->add_option("--format", format)->check(CLI::IsMember({"text", "json", "svg"}));

    auto* ce = app.add_subcommand("eval", "evaluate an element expression");
    ce->add_option("expr", expr)->required();
    ce->add_option("--op", op)->check(CLI::IsMember({"none", "coprod"}));

    auto* cr = app.add_subcommand("restrict", "restrict to one detection site");
    cr->add_option("expr", expr)->required();
    cr->add_option("--site", site_s)->required();

    auto* cs = app.add_subcommand("sq", "Steenrod square of an expression");
    cs->add_option("expr", expr)->required();
    cs->add_option("--i", sq_i)->required();

    auto* cd = app.add_subcommand("render", "skyline rendering of an element");
    cd->add_option("expr", expr)->required();

    auto* cv = app.add_subcommand("verify", "run a verification suite");
    cv->add_option("suite", verb)
        ->required()
        ->check(CLI::IsMember({"betti", "axioms", "relations", "steenrod", "oracle"}));
    cv->add_option("--max-n", max_n);
    cv->add_option("--max-deg", max_d);
    cv->add_option("--cache-dir", cache_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cb->parsed()) {
            if (ring == "B") {
                auto bs = basis_b(n, deg);
                if (format == "json") {
                    json out = {{"ring", "B"}, {"component", n}, {"degree", deg}};
                    out["monomials"] = json::array();
                    for (const auto& m : bs) out["monomials"].push_back(monomial_json(m, nullptr));
                    std::cout << out.dump(2) << "\n";
                } else if (format == "svg") {
                    for (const auto& m : bs) std::cout << render_svg(m) << "\n";
                } else {
                    for (const auto& m : bs) std::cout << m.str() << "\n";
                }
            } else {
                auto ds = basis_d(n, deg);
                if (format == "json") {
                    json out = {{"ring", "D"}, {"component", n}, {"degree", deg}};
                    out["monomials"] = json::array();
                    for (const auto& m : ds)
                        out["monomials"].push_back(monomial_json(m.base, charge_tag(m.charge)));
                    std::cout << out.dump(2) << "\n";
                } else if (format == "svg") {
                    for (const auto& m : ds) std::cout << render_svg(m.base) << "\n";
                } else {
                    for (const auto& m : ds) std::cout << m.str() << "\n";
                }
            }
            return 0;
        }
        if (ce->parsed()) {
            auto v = parse_expr(expr);
            if (op == "coprod") {
                if (v.ring == 'B') {
                    auto t = coproduct(v.b);
                    if (t.terms.empty()) std::cout << "0\n";
                    for (const auto& [a, b] : t.terms)
                        std::cout << a.str() << " (x) " << b.str() << "\n";
                } else {
                    auto t = coproduct_d(v.d);
                    if (t.terms.empty()) std::cout << "0\n";
                    for (const auto& [a, b] : t.terms)
                        std::cout << a.str() << " (x) " << b.str() << "\n";
                }
            } else {
                std::cout << (v.ring == 'B' ? v.b.str() : v.d.str()) << "\n";
            }
            return 0;
        }
        if (cr->parsed()) {
            auto v = parse_expr(expr);
            size_t i = 0;
            bool twist = false;
            if (site_s.rfind("B:", 0) == 0 || site_s.rfind("D:", 0) == 0) {
                if (site_s[0] != v.ring) {
                    std::cerr << "site ring does not match the expression\n";
                    return 2;
                }
                i = 2;
            }
            std::vector<long> parts;
            if (!parse_parts(site_s, i, parts)) {
                std::cerr << "bad site, expected like B:(4,2,1)\n";
                return 2;
            }
            if (site_s.substr(i) == ":t") twist = true;
            else if (i != site_s.size()) {
                std::cerr << "trailing site input\n";
                return 2;
            }
            if (v.ring == 'B') {
                if (twist) {
                    std::cerr << "twisted sites only exist on the D side\n";
                    return 2;
                }
                SiteB s{parts};
                Gf2Poly val(s.nvars());
                for (const auto& m : v.b.mons) val = val + restrict_b(m, s);
                std::cout << val.str(s.var_names()) << "\n";
            } else {
                SiteD s{parts, twist};
                Gf2Poly val(s.nvars());
                for (const auto& m : v.d.mons) val = val + restrict_d(m, s);
                std::cout << val.str(s.var_names()) << "\n";
            }
            return 0;
        }
        if (cs->parsed()) {
            auto v = parse_expr(expr);
            std::cout << (v.ring == 'B' ? sq(sq_i, v.b).str() : sq(sq_i, v.d).str()) << "\n";
            return 0;
        }
        if (cd->parsed()) {
            auto v = parse_expr(expr);
            if (v.ring == 'B') {
                for (const auto& m : v.b.mons) std::cout << render_ascii(m);
            } else {
                for (const auto& m : v.d.mons)
                    std::cout << "charge " << charge_tag(m.charge) << "\n"
                              << render_ascii(m.base);
            }
            return 0;
        }
        if (cv->parsed()) {
            Report rep;
            if (verb == "betti")
                verify_betti(rep, max_n, max_d, cache_dir);
            else if (verb == "axioms")
                verify_axioms(rep, std::min(max_n, 4), std::min(max_d, 4));
            else if (verb == "relations")
                verify_relations(rep);
            else if (verb == "steenrod")
                verify_steenrod(rep, std::min(max_n, 3), std::min(max_d, 3));
            else
                verify_oracle(rep, max_n, max_d);
            std::cout << rep.checks << " checks, " << rep.failures << " failures\n";
            return rep.failures ? 1 : 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.pos << ": " << e.msg << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
