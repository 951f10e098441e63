#include "polgame/game.hpp"

#include <algorithm>
#include <sstream>

#include "polgame/rng.hpp"

namespace polgame {

struct GameMaker {
    static std::shared_ptr<Game> alloc(Polarity pol) {
        return std::shared_ptr<Game>(new Game(pol));
    }
    static std::vector<GameBranch>& branches(Game& g) { return g.branches_; }
};

GamePtr Game::make(Polarity pol, std::vector<GameBranch> branches) {
    for (const auto& b : branches)
        if (!b.child || b.child->polarity() != flip(pol))
            throw PolarityError("game tree alternation violated at branch '" + b.label + "'");
    auto n = GameMaker::alloc(pol);
    GameMaker::branches(*n) = std::move(branches);
    return n;
}

const GamePtr& Game::unit() {
    static const GamePtr g = make(Polarity::opponent, {});
    return g;
}

const GamePtr& Game::zero() {
    static const GamePtr g = make(Polarity::player, {});
    return g;
}

Game::~Game() {
    std::vector<GamePtr> work;
    for (auto& b : branches_)
        if (b.child) work.push_back(std::move(b.child));
    while (!work.empty()) {
        GamePtr cur = std::move(work.back());
        work.pop_back();
        if (cur && cur.use_count() == 1)
            for (auto& b : const_cast<Game&>(*cur).branches_)
                if (b.child) work.push_back(std::move(b.child));
    }
}

bool struct_equal(const GamePtr& a, const GamePtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->polarity() != b->polarity()) return false;
    const auto& ba = a->branches();
    const auto& bb = b->branches();
    if (ba.size() != bb.size()) return false;
    for (std::size_t i = 0; i < ba.size(); ++i)
        if (ba[i].label != bb[i].label || !struct_equal(ba[i].child, bb[i].child)) return false;
    return true;
}

GamePtr dual(const GamePtr& g) {
    std::vector<GameBranch> branches;
    branches.reserve(g->branches().size());
    for (const auto& b : g->branches()) branches.push_back({b.label, dual(b.child)});
    return Game::make(flip(g->polarity()), std::move(branches));
}

SizeReport measure(const GamePtr& g) {
    SizeReport r;
    std::vector<std::pair<const Game*, std::uint64_t>> stack{{g.get(), 0}};
    while (!stack.empty()) {
        auto [cur, d] = stack.back();
        stack.pop_back();
        std::uint64_t arity = cur->branches().size();
        ++r.nodes;
        (cur->polarity() == Polarity::opponent ? r.nodes_o : r.nodes_p)++;
        (cur->polarity() == Polarity::opponent ? r.edges_o : r.edges_p) += arity;
        if (arity == 0) {
            ++r.leaves;
        } else {
            r.usize += arity - 1;
        }
        r.depth = std::max(r.depth, d);
        for (const auto& b : cur->branches()) stack.push_back({b.child.get(), d + 1});
    }
    r.edges = r.edges_o + r.edges_p;
    return r;
}

Profile profile(const GamePtr& g) {
    Profile out;
    std::vector<std::pair<const Game*, std::size_t>> stack{{g.get(), 0}};
    while (!stack.empty()) {
        auto [cur, d] = stack.back();
        stack.pop_back();
        if (d == out.size()) out.emplace_back(0);
        out[d] += 1;
        for (const auto& b : cur->branches()) stack.push_back({b.child.get(), d + 1});
    }
    return out;
}

namespace {
GamePtr random_node(SplitMix64& rng, unsigned depth_left, unsigned max_branch, Polarity pol) {
    std::uint64_t arity = depth_left == 0 ? 0 : rng.below(max_branch);
    std::vector<GameBranch> branches;
    branches.reserve(arity);
    for (std::uint64_t i = 1; i <= arity; ++i)
        branches.push_back({"m" + std::to_string(i),
                            random_node(rng, depth_left - 1, max_branch, flip(pol))});
    return Game::make(pol, std::move(branches));
}
} // namespace

GamePtr random_game(unsigned depth, unsigned max_branch, Polarity start, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_node(rng, depth, max_branch, start);
}

namespace {
FormulaPtr random_f(SplitMix64& rng, unsigned depth, unsigned max_branch, Polarity pol,
                    bool exps) {
    // 0..3 literal, 4..6 binary connective, 7 dual, 8 exponential
    std::uint64_t pick = depth == 0 ? 0 : rng.below(exps ? 8 : 7);
    if (pick <= 3) {
        std::uint64_t arity = depth == 0 ? 0 : rng.below(max_branch);
        std::vector<FormulaBranch> branches;
        for (std::uint64_t i = 1; i <= arity; ++i)
            branches.push_back({"m" + std::to_string(i),
                                random_f(rng, depth - 1, max_branch, flip(pol), exps)});
        return pol == Polarity::opponent ? Formula::opponent_literal(std::move(branches))
                                         : Formula::player_literal(std::move(branches));
    }
    if (pick == 7) return Formula::make_dual(random_f(rng, depth, max_branch, flip(pol), exps));
    if (pick == 8) {
        auto sub = random_f(rng, depth - 1, max_branch, pol, exps);
        return pol == Polarity::opponent ? Formula::make_bang(std::move(sub))
                                         : Formula::make_quest(std::move(sub));
    }
    std::uint64_t which = pick - 4; // 0,1,2
    auto o = [&] { return random_f(rng, depth - 1, max_branch, Polarity::opponent, exps); };
    auto p = [&] { return random_f(rng, depth - 1, max_branch, Polarity::player, exps); };
    if (pol == Polarity::opponent) {
        if (which == 0) return Formula::make_tensor(o(), o());
        if (which == 1) return Formula::make_otr(p(), o());
        return Formula::make_otl(o(), p());
    }
    if (which == 0) return Formula::make_par(p(), p());
    if (which == 1) return Formula::make_oxr(o(), p());
    return Formula::make_oxl(p(), o());
}
} // namespace

FormulaPtr random_formula(unsigned depth, unsigned max_branch, Polarity pol, std::uint64_t seed,
                          bool with_exponentials) {
    SplitMix64 rng(seed);
    return random_f(rng, depth, max_branch, pol, with_exponentials);
}

FormulaPtr to_formula(const GamePtr& g) {
    std::vector<FormulaBranch> branches;
    branches.reserve(g->branches().size());
    for (const auto& b : g->branches()) branches.push_back({b.label, to_formula(b.child)});
    return g->polarity() == Polarity::opponent
               ? Formula::opponent_literal(std::move(branches))
               : Formula::player_literal(std::move(branches));
}

std::string to_json(const SizeReport& r) {
    std::ostringstream os;
    os << "{\"nodes\":" << r.nodes << ",\"nodes_o\":" << r.nodes_o << ",\"nodes_p\":" << r.nodes_p
       << ",\"edges\":" << r.edges << ",\"edges_o\":" << r.edges_o << ",\"edges_p\":" << r.edges_p
       << ",\"leaves\":" << r.leaves << ",\"usize\":" << r.usize << ",\"depth\":" << r.depth
       << "}";
    return os.str();
}

std::string to_json(const Profile& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << "]";
    return os.str();
}

} // namespace polgame
