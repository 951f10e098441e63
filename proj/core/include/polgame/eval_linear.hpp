#pragma once

#include "polgame/expand.hpp"
#include "polgame/formula.hpp"

namespace polgame {

struct LinearResult {
    bool value;
    std::uint64_t visits; // exactly one per AST node
};

/// S(f): "f has a strategy" (a possibly mixed map from 1), decided by a
/// single pass over the formula without expanding anything:
///   S(()) = true, S({}) = false, literals are meets/joins of their children,
///   S(ox/oxr/oxl) = S(l) and S(r), S(par/otr/otl) = S(l) or S(r),
///   S(dual f) = not S(f), S(!O) = S(O), S(?P) = S(P).
/// Iterative, so arbitrarily deep formula chains are fine.
///
/// Two reading notes. A counter-strategy gloss of this value ("provability
/// of P |-p {}") is sometimes seen, but it contradicts the disjunctive par
/// equation above — counter-strategies for a par require both components,
/// so that reading would be conjunctive. This module takes the strategy
/// reading and cross-checks it against the expansion engine. Likewise, the
/// tensor family never yields an opponent formula, so an "opponent value of
/// oxl/oxr" can only mean the par family; the otl/otr equations above are
/// that reading.
LinearResult linear_value_counted(const FormulaPtr& f);

inline bool linear_value(const FormulaPtr& f) { return linear_value_counted(f).value; }

/// The dual recursion deciding counter-strategy existence directly; equals
/// !linear_value on every formula (cross-checked by the suite, not assumed).
bool linear_counter_value(const FormulaPtr& f);

/// Provability by the strategy reductions:
///   O |-o O'  iff  not S(O) or S(O')
///   O |-  P   iff  not S(O) or S(P)
///   P |-p P'  iff  not S(P) or S(P')
bool provable(const Sequent& s);

/// Asserts the three-way agreement
///   provable(O |-o O') == (!S(O) or S(O')) == has_strategy(expand(otr(dual O, O')))
/// and returns the common verdict. Throws if the expansion blows the budget.
bool hom_reduction_check(const FormulaPtr& o1, const FormulaPtr& o2,
                         std::size_t node_budget = kDefaultNodeBudget);

} // namespace polgame
