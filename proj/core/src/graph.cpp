#include "polgame/graph.hpp"

#include <map>
#include <unordered_map>

namespace polgame {

struct GraphAccess {
    static std::vector<GraphNode>& nodes(GraphGame& g) { return g.nodes_; }
    static std::uint32_t& root(GraphGame& g) { return g.root_; }
};

SizeQuad GraphGame::counts() const {
    SizeQuad q{0, 0, 0, 0};
    for (const auto& n : nodes_) {
        if (n.polarity == Polarity::opponent) {
            q.nodes_o += 1;
            q.edges_o += n.branches.size();
        } else {
            q.nodes_p += 1;
            q.edges_p += n.branches.size();
        }
    }
    return q;
}

std::uint64_t GraphGame::edge_count() const {
    std::uint64_t e = 0;
    for (const auto& n : nodes_) e += n.branches.size();
    return e;
}

Profile GraphGame::measured_profile() const {
    std::vector<std::int64_t> level(nodes_.size(), -1);
    level[root_] = 0;
    std::vector<std::uint32_t> stack{root_};
    std::size_t maxd = 0;
    while (!stack.empty()) {
        std::uint32_t x = stack.back();
        stack.pop_back();
        for (const auto& [l, c] : nodes_[x].branches) {
            std::int64_t d = level[x] + 1;
            if (level[c] < 0) {
                level[c] = d;
                maxd = std::max<std::size_t>(maxd, d);
                stack.push_back(c);
            } else if (level[c] != d) {
                throw Error("graph game is not leveled (global dedup merged depths?)");
            }
        }
    }
    Profile out(maxd + 1, BigInt(0));
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (level[i] >= 0) out[static_cast<std::size_t>(level[i])] += 1;
    return out;
}

namespace {

// dual() pushed through the connectives (exact on the nose, labels included):
//   dual(ox(A,B))  = par(dual A, dual B)     dual(oxr(O,P)) = otr(dual O, dual P)
//   dual(oxl(P,O)) = otl(dual P, dual O)     dual(bang(O))  = quest(dual O)
FormulaPtr push_dual(const FormulaPtr& f, bool flip_now) {
    FormulaKind k = f->kind();
    if (k == FormulaKind::dual) return push_dual(f->left(), !flip_now);
    if (k == FormulaKind::opp_lit || k == FormulaKind::play_lit) {
        std::vector<FormulaBranch> bs;
        bs.reserve(f->branches().size());
        for (const auto& b : f->branches()) bs.push_back({b.label, push_dual(b.child, flip_now)});
        bool opp = (k == FormulaKind::opp_lit) != flip_now;
        return opp ? Formula::opponent_literal(std::move(bs))
                   : Formula::player_literal(std::move(bs));
    }
    if (k == FormulaKind::bang || k == FormulaKind::quest) {
        auto c = push_dual(f->left(), flip_now);
        bool bangish = (k == FormulaKind::bang) != flip_now;
        return bangish ? Formula::make_bang(std::move(c)) : Formula::make_quest(std::move(c));
    }
    auto a = push_dual(f->left(), flip_now);
    auto b = push_dual(f->right(), flip_now);
    if (!flip_now) {
        switch (k) {
            case FormulaKind::tensor: return Formula::make_tensor(a, b);
            case FormulaKind::par: return Formula::make_par(a, b);
            case FormulaKind::oxr: return Formula::make_oxr(a, b);
            case FormulaKind::oxl: return Formula::make_oxl(a, b);
            case FormulaKind::otr: return Formula::make_otr(a, b);
            case FormulaKind::otl: return Formula::make_otl(a, b);
            default: break;
        }
    } else {
        switch (k) {
            case FormulaKind::tensor: return Formula::make_par(a, b);
            case FormulaKind::par: return Formula::make_tensor(a, b);
            case FormulaKind::oxr: return Formula::make_otr(a, b);
            case FormulaKind::otr: return Formula::make_oxr(a, b);
            case FormulaKind::oxl: return Formula::make_otl(a, b);
            case FormulaKind::otl: return Formula::make_oxl(a, b);
            default: break;
        }
    }
    throw Error("unreachable formula kind");
}

bool contains_exponential(const FormulaPtr& f) {
    switch (f->kind()) {
        case FormulaKind::bang:
        case FormulaKind::quest: return true;
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit:
            for (const auto& b : f->branches())
                if (contains_exponential(b.child)) return true;
            return false;
        case FormulaKind::dual: return contains_exponential(f->left());
        default:
            return contains_exponential(f->left()) || contains_exponential(f->right());
    }
}

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t budget) : budget_(budget) {}

    GraphGame build(const FormulaPtr& f) {
        switch (f->kind()) {
            case FormulaKind::opp_lit:
            case FormulaKind::play_lit: {
                GraphGame g;
                std::vector<std::pair<std::string, std::uint32_t>> bs;
                bs.reserve(f->branches().size());
                for (const auto& b : f->branches()) {
                    GraphGame sub = build(b.child);
                    bs.emplace_back(b.label, import_into(g, sub));
                }
                GraphAccess::root(g) = add(g, f->polarity(), std::move(bs));
                return g;
            }
            case FormulaKind::bang:
            case FormulaKind::quest:
                throw UnsupportedConnectiveError(
                    "graph games do not size exponentials; expand or use the linear engine");
            case FormulaKind::dual:
                throw Error("internal: duals must be pushed down before graph construction");
            default: break;
        }
        GraphGame gl = build(f->left());
        GraphGame gr = build(f->right());
        bool tensor_family = f->kind() == FormulaKind::tensor || f->kind() == FormulaKind::oxr ||
                             f->kind() == FormulaKind::oxl;
        return product(gl, gr, tensor_family);
    }

private:
    std::size_t budget_;
    std::size_t produced_ = 0;

    std::uint32_t add(GraphGame& g, Polarity pol,
                      std::vector<std::pair<std::string, std::uint32_t>> bs,
                      bool resting_pair = false, std::uint32_t left_arity = 0) {
        if (++produced_ > budget_) throw BudgetExceededError(produced_, budget_);
        GraphAccess::nodes(g).push_back(GraphNode{pol, resting_pair, left_arity, std::move(bs)});
        return static_cast<std::uint32_t>(GraphAccess::nodes(g).size() - 1);
    }

    // Appends all of src into dst (ids shifted), returning src's root id.
    std::uint32_t import_into(GraphGame& dst, const GraphGame& src) {
        std::uint32_t off = static_cast<std::uint32_t>(dst.nodes().size());
        for (const auto& n : src.nodes()) {
            if (++produced_ > budget_) throw BudgetExceededError(produced_, budget_);
            GraphNode copy = n;
            for (auto& [l, c] : copy.branches) c += off;
            GraphAccess::nodes(dst).push_back(std::move(copy));
        }
        return src.root() + off;
    }

    // The pair product. In the tensor family both-resting states are opponent
    // pairs and both-player pairs cannot occur; the par family dually.
    GraphGame product(const GraphGame& l, const GraphGame& r, bool tensor_family) {
        GraphGame g;
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> memo;
        Polarity resting = tensor_family ? Polarity::opponent : Polarity::player;

        auto prod = [&](auto&& self, std::uint32_t x, std::uint32_t y) -> std::uint32_t {
            auto key = std::make_pair(x, y);
            if (auto it = memo.find(key); it != memo.end()) return it->second;
            const GraphNode& nx = l.nodes()[x];
            const GraphNode& ny = r.nodes()[y];
            std::vector<std::pair<std::string, std::uint32_t>> bs;
            std::uint32_t id;
            if (nx.polarity == resting && ny.polarity == resting) {
                bs.reserve(nx.branches.size() + ny.branches.size());
                for (const auto& [bl, bc] : nx.branches)
                    bs.emplace_back("L." + bl, self(self, bc, y));
                for (const auto& [bl, bc] : ny.branches)
                    bs.emplace_back("R." + bl, self(self, x, bc));
                id = add(g, resting, std::move(bs), true,
                         static_cast<std::uint32_t>(nx.branches.size()));
            } else if (nx.polarity != resting) {
                // left component mid-move: its moves are the only options
                bs.reserve(nx.branches.size());
                for (const auto& [bl, bc] : nx.branches)
                    bs.emplace_back("L." + bl, self(self, bc, y));
                id = add(g, flip(resting), std::move(bs));
            } else {
                bs.reserve(ny.branches.size());
                for (const auto& [bl, bc] : ny.branches)
                    bs.emplace_back("R." + bl, self(self, x, bc));
                id = add(g, flip(resting), std::move(bs));
            }
            memo[key] = id;
            return id;
        };
        GraphAccess::root(g) = prod(prod, l.root(), r.root());
        return g;
    }
};

GraphGame dedup(const GraphGame& g) {
    // Hash-cons bottom-up; ids are topologically ordered so children are
    // already canonical when a node is visited.
    std::map<std::tuple<Polarity, bool, std::uint32_t,
                        std::vector<std::pair<std::string, std::uint32_t>>>,
             std::uint32_t>
        seen;
    std::vector<std::uint32_t> remap(g.nodes().size());
    GraphGame out;
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        GraphNode n = g.nodes()[i];
        for (auto& [l, c] : n.branches) c = remap[c];
        auto key = std::make_tuple(n.polarity, n.resting_pair, n.left_arity, n.branches);
        if (auto it = seen.find(key); it != seen.end()) {
            remap[i] = it->second;
        } else {
            GraphAccess::nodes(out).push_back(std::move(n));
            std::uint32_t id = static_cast<std::uint32_t>(GraphAccess::nodes(out).size() - 1);
            seen.emplace(std::move(key), id);
            remap[i] = id;
        }
    }
    GraphAccess::root(out) = remap[g.root()];
    return out;
}

} // namespace

GraphGame build_graph(const FormulaPtr& f, bool global_dedup, std::size_t node_budget) {
    if (contains_exponential(f))
        throw UnsupportedConnectiveError(
            "graph games do not size exponentials; expand or use the linear engine");
    FormulaPtr flat = push_dual(f, false);
    GraphBuilder builder(node_budget);
    GraphGame g = builder.build(flat);
    if (!global_dedup) return g;
    return dedup(g);
}

GamePtr unfold(const GraphGame& g, std::size_t node_budget) {
    std::size_t produced = 0;
    auto go = [&](auto&& self, std::uint32_t x) -> GamePtr {
        if (++produced > node_budget) throw BudgetExceededError(produced, node_budget);
        const GraphNode& n = g.nodes()[x];
        std::vector<GameBranch> bs;
        bs.reserve(n.branches.size());
        for (const auto& [l, c] : n.branches) bs.push_back({l, self(self, c)});
        return Game::make(n.polarity, std::move(bs));
    };
    return go(go, g.root());
}

} // namespace polgame
