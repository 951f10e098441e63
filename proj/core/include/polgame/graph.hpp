#pragma once

#include "polgame/analytics.hpp"
#include "polgame/expand.hpp"
#include "polgame/game.hpp"

namespace polgame {

struct GraphNode {
    Polarity polarity;
    /// Set on binary-product states with both components resting; such a node
    /// bills one op for the root combination of its two sides (see eval_dp).
    bool resting_pair = false;
    /// Number of left-component branches of a resting pair.
    std::uint32_t left_arity = 0;
    std::vector<std::pair<std::string, std::uint32_t>> branches;
};

/// A game as an acyclic directed graph with structural sharing. Construction
/// is append-only and post-order, so every child id precedes its parent and a
/// single forward pass visits children first.
class GraphGame {
public:
    const std::vector<GraphNode>& nodes() const { return nodes_; }
    std::uint32_t root() const { return root_; }

    SizeQuad counts() const;
    std::uint64_t edge_count() const;
    /// Per-depth node counts; node depth is well defined because every path
    /// from the root to a node has the same length.
    Profile measured_profile() const;

private:
    friend struct GraphAccess;
    std::vector<GraphNode> nodes_;
    std::uint32_t root_ = 0;
};

/// The product construction over the operand graphs, nodes keyed by tuples of
/// operand node ids so each sub-position appears once per construction:
/// par-family states pair the two components with at most one mid-move
/// (never both at opponent nodes), the tensor family dually. Rooted: only
/// states the compound root can reach are materialized. `global_dedup`
/// additionally hash-conses structurally identical nodes across the whole
/// store; with it off, measured sizes equal analytics::graph_size exactly.
/// Rejects bang/quest (eval_dp decides how to treat exponentials).
GraphGame build_graph(const FormulaPtr& f, bool global_dedup = false,
                      std::size_t node_budget = kDefaultNodeBudget);

/// Tree unfolding from the root; equal to expand() of the source formula.
GamePtr unfold(const GraphGame& g, std::size_t node_budget = kDefaultNodeBudget);

} // namespace polgame
