#pragma once

#include <optional>

#include "polgame/game.hpp"
#include "polgame/morphism.hpp"

namespace polgame {

enum class TraversalMode : unsigned char { full, short_circuit };

/// The evaluation ||.||: ||()|| = true, ||{}|| = false, meets at opponent
/// nodes, joins at player nodes. Short-circuit mode stops a conjunct on the
/// first false and a disjunct on the first true; verdicts are identical.
bool has_strategy(const GamePtr& g, TraversalMode mode = TraversalMode::full);

/// The de Morgan dual calculation (meets and joins swapped, true and false
/// swapped), computed by its own recursion rather than as !has_strategy so
/// that "strategy XOR counter-strategy" is a genuine cross-check.
bool has_counter_strategy(const GamePtr& g, TraversalMode mode = TraversalMode::full);

/// Exact strategy count: true -> 1, false -> 0, meets -> products,
/// joins -> sums.
BigInt count_strategies(const GamePtr& g);

/// A composition-free witness typechecking against `() |-o g` (or `() |- g`
/// for player-rooted g), or nullopt iff there is no strategy. Ties at player
/// nodes break to the leftmost successful branch.
std::optional<TermPtr> extract_strategy(const GamePtr& g);

struct EvalCost {
    bool verdict;
    std::uint64_t ops_visited; // node visits; full mode visits every node
};

EvalCost eval_cost(const GamePtr& g, TraversalMode mode);

} // namespace polgame
