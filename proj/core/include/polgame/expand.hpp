#pragma once

#include "polgame/game.hpp"

namespace polgame {

/// Exponential expansion explodes, so every tree-producing construction is
/// guarded by a node budget and aborts with BudgetExceededError rather than
/// truncating silently.
inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Expands a formula into its explicit game tree:
///   oxr(O,P)  = { a_j : ox(O,O_j) }         oxl(P,O) = { a_j : ox(O_j,O) }
///   ox(O,O')  = ( b_i : oxl(P_i,O'), b'_k : oxr(O,P'_k) )
///   otr(P,O)  = ( b_i : par(P,P_i) )        otl(O,P) = ( b_i : par(P_i,P) )
///   par(P,P') = { a_j : otl(O_j,P'), a'_k : otr(P,O'_k) }
///   bang(O)   = ox-fold of (b_i : {a_j : bang(O_ij)}),  bang(()) = ()
///   quest(P)  = par-fold of {a_j : (b_i : quest(P_ji))}, quest({}) = {}
///   dual(F)   = polarity flip of the expansion of F.
/// Branch labels of compound nodes carry provenance prefixes "L."/"R." on the
/// originating label, keeping siblings distinct and moves traceable to the
/// operand that supplied them. Left-operand branches precede right-operand
/// branches, each in source order.
GamePtr expand(const FormulaPtr& f, std::size_t node_budget = kDefaultNodeBudget);

/// Label-erasing canonical form: labels become positional markers and
/// children are sorted by a total order on canonical subtrees. Two trees are
/// structurally isomorphic iff their canonical forms are equal.
GamePtr canonical_form(const GamePtr& g);

/// Structural isomorphism of the expansions (label-erasing; the unit laws
/// delete nodes, so isomorphism cannot preserve labels).
bool is_iso(const FormulaPtr& f, const FormulaPtr& h,
            std::size_t node_budget = kDefaultNodeBudget);

bool game_iso(const GamePtr& a, const GamePtr& b);

} // namespace polgame
