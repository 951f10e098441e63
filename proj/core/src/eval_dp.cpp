#include "polgame/eval_dp.hpp"

namespace polgame {

namespace {

FormulaPtr strip_exponentials(const FormulaPtr& f) {
    switch (f->kind()) {
        case FormulaKind::bang:
        case FormulaKind::quest:
            // S(!O) = S(O) and S(?P) = S(P) in this model, so the graph of the
            // body decides the same verdict.
            return strip_exponentials(f->left());
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            std::vector<FormulaBranch> bs;
            bs.reserve(f->branches().size());
            for (const auto& b : f->branches()) bs.push_back({b.label, strip_exponentials(b.child)});
            return f->kind() == FormulaKind::opp_lit
                       ? Formula::opponent_literal(std::move(bs))
                       : Formula::player_literal(std::move(bs));
        }
        case FormulaKind::dual: return Formula::make_dual(strip_exponentials(f->left()));
        case FormulaKind::tensor:
            return Formula::make_tensor(strip_exponentials(f->left()), strip_exponentials(f->right()));
        case FormulaKind::par:
            return Formula::make_par(strip_exponentials(f->left()), strip_exponentials(f->right()));
        case FormulaKind::oxr:
            return Formula::make_oxr(strip_exponentials(f->left()), strip_exponentials(f->right()));
        case FormulaKind::oxl:
            return Formula::make_oxl(strip_exponentials(f->left()), strip_exponentials(f->right()));
        case FormulaKind::otr:
            return Formula::make_otr(strip_exponentials(f->left()), strip_exponentials(f->right()));
        case FormulaKind::otl:
            return Formula::make_otl(strip_exponentials(f->left()), strip_exponentials(f->right()));
    }
    throw Error("unreachable formula kind");
}

FormulaPtr literalize_exponentials(const FormulaPtr& f, std::size_t budget) {
    switch (f->kind()) {
        case FormulaKind::bang:
        case FormulaKind::quest:
            return to_formula(expand(f, budget));
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            std::vector<FormulaBranch> bs;
            bs.reserve(f->branches().size());
            for (const auto& b : f->branches())
                bs.push_back({b.label, literalize_exponentials(b.child, budget)});
            return f->kind() == FormulaKind::opp_lit
                       ? Formula::opponent_literal(std::move(bs))
                       : Formula::player_literal(std::move(bs));
        }
        case FormulaKind::dual:
            return Formula::make_dual(literalize_exponentials(f->left(), budget));
        case FormulaKind::tensor:
            return Formula::make_tensor(literalize_exponentials(f->left(), budget),
                                        literalize_exponentials(f->right(), budget));
        case FormulaKind::par:
            return Formula::make_par(literalize_exponentials(f->left(), budget),
                                     literalize_exponentials(f->right(), budget));
        case FormulaKind::oxr:
            return Formula::make_oxr(literalize_exponentials(f->left(), budget),
                                     literalize_exponentials(f->right(), budget));
        case FormulaKind::oxl:
            return Formula::make_oxl(literalize_exponentials(f->left(), budget),
                                     literalize_exponentials(f->right(), budget));
        case FormulaKind::otr:
            return Formula::make_otr(literalize_exponentials(f->left(), budget),
                                     literalize_exponentials(f->right(), budget));
        case FormulaKind::otl:
            return Formula::make_otl(literalize_exponentials(f->left(), budget),
                                     literalize_exponentials(f->right(), budget));
    }
    throw Error("unreachable formula kind");
}

BigInt node_ops(const GraphNode& n) {
    std::size_t arity = n.branches.size();
    if (n.resting_pair) {
        std::size_t m = n.left_arity;
        std::size_t k = arity - m;
        BigInt ops = 1;
        if (m >= 2) ops += m - 1;
        if (k >= 2) ops += k - 1;
        return ops;
    }
    return arity >= 2 ? BigInt(arity - 1) : BigInt(0);
}

} // namespace

DpResult eval_dp(const FormulaPtr& f, const DpOptions& opt) {
    FormulaPtr prepared = opt.expand_exponentials
                              ? literalize_exponentials(f, opt.node_budget)
                              : strip_exponentials(f);
    GraphGame g = build_graph(prepared, opt.global_dedup, opt.node_budget);

    DpResult r{false, {}};
    if (opt.use_memo) {
        // Node ids are topological, so one forward pass evaluates every
        // sub-problem exactly once.
        std::vector<char> value(g.nodes().size(), 0);
        for (std::size_t i = 0; i < g.nodes().size(); ++i) {
            const GraphNode& n = g.nodes()[i];
            bool conj = n.polarity == Polarity::opponent;
            bool acc = conj;
            for (const auto& [l, c] : n.branches) {
                bool v = value[c] != 0;
                acc = conj ? (acc && v) : (acc || v);
            }
            value[i] = acc ? 1 : 0;
            r.counter.binary_ops += node_ops(n);
        }
        r.verdict = value[g.root()] != 0;
        r.counter.memo_entries = BigInt(g.nodes().size());
        r.counter.memo_hits = BigInt(g.edge_count());
        if (!g.nodes().empty()) r.counter.memo_hits -= BigInt(g.nodes().size() - 1);
    } else {
        // Tree re-walk: shared positions are recomputed per occurrence.
        std::size_t visited = 0;
        auto walk = [&](auto&& self, std::uint32_t x) -> bool {
            if (++visited > opt.node_budget) throw BudgetExceededError(visited, opt.node_budget);
            const GraphNode& n = g.nodes()[x];
            r.counter.binary_ops += node_ops(n);
            bool conj = n.polarity == Polarity::opponent;
            bool acc = conj;
            for (const auto& [l, c] : n.branches) {
                bool v = self(self, c);
                acc = conj ? (acc && v) : (acc || v);
            }
            return acc;
        };
        r.verdict = walk(walk, g.root());
    }
    return r;
}

BigInt dp_cost_bound(const FormulaPtr& f) {
    switch (f->kind()) {
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            BigInt r = BigInt(f->branches().size());
            for (const auto& b : f->branches()) r += dp_cost_bound(b.child);
            return r;
        }
        case FormulaKind::dual:
            return dp_cost_bound(f->left());
        case FormulaKind::bang:
        case FormulaKind::quest:
            throw UnsupportedConnectiveError("no dynamic cost bound for exponentials");
        default: break;
    }
    SizeQuad a = graph_size(f->left());
    SizeQuad b = graph_size(f->right());
    BigInt esa = a.edges_o + a.edges_p;
    BigInt esb = b.edges_o + b.edges_p;
    switch (f->kind()) {
        case FormulaKind::tensor:
        case FormulaKind::oxr:
        case FormulaKind::oxl:
            return esa * b.nodes_o + esb * a.nodes_o;
        default:
            return esa * b.nodes_p + esb * a.nodes_p;
    }
}

} // namespace polgame
