#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polgame/bigint.hpp"
#include "polgame/formula.hpp"

namespace polgame {

class Game;
using GamePtr = std::shared_ptr<const Game>;

struct GameBranch {
    std::string label;
    GamePtr child;
};

/// A fully expanded additive game tree. Nodes strictly alternate polarity;
/// opponent nodes are environment-choice points, player nodes system-choice
/// points. Immutable and freely shareable.
class Game {
public:
    Polarity polarity() const { return polarity_; }
    const std::vector<GameBranch>& branches() const { return branches_; }

    /// Builds a node, checking strict alternation of the children.
    static GamePtr make(Polarity pol, std::vector<GameBranch> branches);

    /// The empty opponent game 1 = ().
    static const GamePtr& unit();
    /// The empty player game 0 = {}.
    static const GamePtr& zero();

    ~Game();
    Game(const Game&) = delete;
    Game& operator=(const Game&) = delete;

private:
    friend struct GameMaker;
    Game(Polarity pol) : polarity_(pol) {}
    Polarity polarity_;
    std::vector<GameBranch> branches_;
};

bool struct_equal(const GamePtr& a, const GamePtr& b);

/// Polarity flip of every node; shape and labels preserved. An involution.
GamePtr dual(const GamePtr& g);

/// The family of size measures. Invariant chain:
///   usize = leaves - 1 <= edges = nodes - 1 = nodes_o + nodes_p - 1
/// and edges <= depth * (1 + usize). Depth counts edges on the longest
/// root-to-leaf path, so the one-node games have depth 0.
struct SizeReport {
    std::uint64_t nodes = 0;
    std::uint64_t nodes_o = 0;
    std::uint64_t nodes_p = 0;
    std::uint64_t edges = 0;
    std::uint64_t edges_o = 0;
    std::uint64_t edges_p = 0;
    std::uint64_t leaves = 0;
    std::uint64_t usize = 0;
    std::uint64_t depth = 0;
};

SizeReport measure(const GamePtr& g);

/// Per-depth node counts; entry i is the number of nodes at depth i. Begins
/// with 1 and sums to the node count.
using Profile = std::vector<BigInt>;

Profile profile(const GamePtr& g);

/// Deterministic random tree: the branching factor of every node is drawn
/// uniformly from 0..max_branch (forced 0 once the depth limit is reached).
/// Driven by SplitMix64, so a fixed seed gives the same tree everywhere.
GamePtr random_game(unsigned depth, unsigned max_branch, Polarity start, std::uint64_t seed);

/// Random well-polarized formula over the full connective grammar; instance
/// generator for the cross-engine suites and the bench harness.
FormulaPtr random_formula(unsigned depth, unsigned max_branch, Polarity pol, std::uint64_t seed,
                          bool with_exponentials = true);

/// A game tree is a purely additive formula; this is that reading.
FormulaPtr to_formula(const GamePtr& g);

std::string to_json(const SizeReport& r);
std::string to_json(const Profile& p);

} // namespace polgame
