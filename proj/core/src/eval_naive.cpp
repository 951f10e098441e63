#include "polgame/eval_naive.hpp"

namespace polgame {

namespace {

bool eval(const Game& g, TraversalMode mode, bool counter, std::uint64_t* visits) {
    if (visits) ++*visits;
    // meets at opponent nodes, joins at player nodes; swapped for the dual
    // calculation.
    bool conjunctive = (g.polarity() == Polarity::opponent) != counter;
    bool acc = conjunctive;
    for (const auto& b : g.branches()) {
        bool v = eval(*b.child, mode, counter, visits);
        acc = conjunctive ? (acc && v) : (acc || v);
        if (mode == TraversalMode::short_circuit && acc != conjunctive) return acc;
    }
    return acc;
}

} // namespace

bool has_strategy(const GamePtr& g, TraversalMode mode) {
    return eval(*g, mode, false, nullptr);
}

bool has_counter_strategy(const GamePtr& g, TraversalMode mode) {
    return eval(*g, mode, true, nullptr);
}

BigInt count_strategies(const GamePtr& g) {
    if (g->polarity() == Polarity::opponent) {
        BigInt r = 1;
        for (const auto& b : g->branches()) {
            r *= count_strategies(b.child);
            if (r == 0) return r;
        }
        return r;
    }
    BigInt r = 0;
    for (const auto& b : g->branches()) r += count_strategies(b.child);
    return r;
}

namespace {

// A strategy is a tuple at opponent nodes and a codomain move at player
// nodes; nullopt when a player node has no winning branch.
std::optional<TermPtr> extract(const GamePtr& g) {
    if (g->polarity() == Polarity::opponent) {
        std::vector<TermBranch> parts;
        parts.reserve(g->branches().size());
        for (const auto& b : g->branches()) {
            auto sub = extract(b.child);
            if (!sub) return std::nullopt;
            parts.push_back({b.label, *sub});
        }
        return Term::make_tuple(std::move(parts));
    }
    for (const auto& b : g->branches())
        if (auto sub = extract(b.child))
            return Term::make_right_move(b.label, *sub);
    return std::nullopt;
}

} // namespace

std::optional<TermPtr> extract_strategy(const GamePtr& g) { return extract(g); }

EvalCost eval_cost(const GamePtr& g, TraversalMode mode) {
    std::uint64_t visits = 0;
    bool v = eval(*g, mode, false, &visits);
    return {v, visits};
}

} // namespace polgame
