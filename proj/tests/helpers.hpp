#pragma once

#include <string>

#include "polgame/analytics.hpp"
#include "polgame/eval_naive.hpp"
#include "polgame/expand.hpp"
#include "polgame/game.hpp"

namespace polgame::testing {

inline FormulaPtr F(const std::string& text) { return parse_formula(text); }

inline GamePtr G(const std::string& text) { return expand(parse_formula(text)); }

// A_0 = {}, A_{n+1} = {2:B_n}, B_0 = (), B_{n+1} = (1:A_n) — the family whose
// par grows polynomially in the operands' uniform sizes.
inline FormulaPtr growth_b(unsigned n);
inline FormulaPtr growth_a(unsigned n) {
    if (n == 0) return Formula::zero();
    auto b = growth_b(n - 1);
    return Formula::player_literal({{"_1", b}, {"_2", b}});
}
inline FormulaPtr growth_b(unsigned n) {
    if (n == 0) return Formula::one();
    return Formula::opponent_literal({{"_1", growth_a(n - 1)}});
}

// L_0 = {}, L_{n+1} = {1:L'_n}, L'_0 = (), L'_{n+1} = (1:L_n) — unary chains
// of uniform size zero whose par has binomial leaf count.
inline FormulaPtr chain_l_opp(unsigned n);
inline FormulaPtr chain_l(unsigned n) {
    if (n == 0) return Formula::zero();
    return Formula::player_literal({{"_1", chain_l_opp(n - 1)}});
}
inline FormulaPtr chain_l_opp(unsigned n) {
    if (n == 0) return Formula::one();
    return Formula::opponent_literal({{"_1", chain_l(n - 1)}});
}

} // namespace polgame::testing
