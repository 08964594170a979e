#pragma once
#include "coxcoh/hopf_b.hpp"
#include "coxcoh/hopf_d.hpp"

namespace coxcoh {

// combinatorial shape data used by the closed-form square theorems
struct MonomialStats {
    int height;           // largest number of cup factors in one column
    int effective_scale;  // least l with a nonzero equal split into width-2^l groups
    bool full_width;      // no unit columns
};
MonomialStats stats_b(const HopfMonomialB& m);

// squares computed by applying the polynomial square on every detection site
// and solving back; the single source of truth
ElementB sq(int i, const ElementB& x);
ElementD sq(int i, const ElementD& x);

// enumerative formulas, literal reading: all full-width monomials of the right
// bidegree with height at most two, scale bound, and the delta occurrence rule
ElementB closed_form_sq_gamma(int k, int n, int i);  // square of gamma_{k,2^n}
ElementB closed_form_sq_delta(int n, int i);         // square of delta_{2^n}
ElementD sq_d_closed(int k, int n, int i, bool minus);

}  // namespace coxcoh
