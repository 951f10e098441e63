#pragma once

#include "polgame/graph.hpp"

namespace polgame {

/// Binary-operation accounting for the dynamic-programming engine. A
/// both-resting product state bills one op for combining its two sides plus
/// (m-1) per side of arity m >= 2 (a single-argument side is a retrieval,
/// bundled into the combination op); every other state bills (arity-1) for
/// its meet/join. memo_entries is the number of cached sub-problems and
/// memo_hits the number of child lookups answered from the cache.
struct OpCounter {
    BigInt binary_ops = 0;
    BigInt memo_hits = 0;
    BigInt memo_entries = 0;
};

struct DpOptions {
    /// Replace bang/quest subformulas by their literal expansions instead of
    /// using the semantic shortcut S(!O) = S(O), S(?P) = S(P).
    bool expand_exponentials = false;
    bool use_memo = true;
    bool global_dedup = true;
    std::size_t node_budget = kDefaultNodeBudget;
};

struct DpResult {
    bool verdict;
    OpCounter counter;
};

/// Evaluates provability of the formula over its shared graph game, each
/// sub-problem once (unless memoization is disabled, which re-walks shared
/// positions and changes nothing but the cost).
DpResult eval_dp(const FormulaPtr& f, const DpOptions& opt = {});

/// The cost bound of the dynamic approach, recursively:
///   literal of arity m:  m + sum of child costs
///   tensor family:       esize[A]*|B|_o + esize[B]*|A|_o
///   par family:          esize[A]*|B|_p + esize[B]*|A|_p
/// with sizes taken from graph_size. The bound is stated up to a constant
/// factor; the suite pins the factor at 4. Rejects bang/quest.
BigInt dp_cost_bound(const FormulaPtr& f);

} // namespace polgame
