#include "polgame/expand.hpp"

#include <algorithm>

namespace polgame {

namespace {

class Expander {
public:
    explicit Expander(std::size_t budget) : budget_(budget) {}

    GamePtr formula(const Formula& f) {
        switch (f.kind()) {
            case FormulaKind::opp_lit:
            case FormulaKind::play_lit: {
                std::vector<GameBranch> bs;
                bs.reserve(f.branches().size());
                for (const auto& b : f.branches()) bs.push_back({b.label, formula(*b.child)});
                return node(f.polarity(), std::move(bs));
            }
            case FormulaKind::tensor: return tensor(formula(*f.left()), formula(*f.right()));
            case FormulaKind::oxr: return oxr(formula(*f.left()), formula(*f.right()));
            case FormulaKind::oxl: return oxl(formula(*f.left()), formula(*f.right()));
            case FormulaKind::par: return par(formula(*f.left()), formula(*f.right()));
            case FormulaKind::otr: return otr(formula(*f.left()), formula(*f.right()));
            case FormulaKind::otl: return otl(formula(*f.left()), formula(*f.right()));
            case FormulaKind::dual: return dualize(formula(*f.left()));
            case FormulaKind::bang: return bang(formula(*f.left()));
            case FormulaKind::quest: return quest(formula(*f.left()));
        }
        throw Error("unreachable formula kind");
    }

private:
    std::size_t budget_;
    std::size_t produced_ = 0;

    GamePtr node(Polarity pol, std::vector<GameBranch> bs) {
        if (++produced_ > budget_) throw BudgetExceededError(produced_, budget_);
        return Game::make(pol, std::move(bs));
    }

    static std::string lab(const char* side, const std::string& l) {
        return std::string(side) + l;
    }

    GamePtr dualize(const GamePtr& g) {
        std::vector<GameBranch> bs;
        bs.reserve(g->branches().size());
        for (const auto& b : g->branches()) bs.push_back({b.label, dualize(b.child)});
        return node(flip(g->polarity()), std::move(bs));
    }

    GamePtr tensor(const GamePtr& o1, const GamePtr& o2) {
        std::vector<GameBranch> bs;
        bs.reserve(o1->branches().size() + o2->branches().size());
        for (const auto& b : o1->branches()) bs.push_back({lab("L.", b.label), oxl(b.child, o2)});
        for (const auto& b : o2->branches()) bs.push_back({lab("R.", b.label), oxr(o1, b.child)});
        return node(Polarity::opponent, std::move(bs));
    }

    GamePtr oxr(const GamePtr& o, const GamePtr& p) {
        std::vector<GameBranch> bs;
        bs.reserve(p->branches().size());
        for (const auto& b : p->branches()) bs.push_back({lab("R.", b.label), tensor(o, b.child)});
        return node(Polarity::player, std::move(bs));
    }

    GamePtr oxl(const GamePtr& p, const GamePtr& o) {
        std::vector<GameBranch> bs;
        bs.reserve(p->branches().size());
        for (const auto& b : p->branches()) bs.push_back({lab("L.", b.label), tensor(b.child, o)});
        return node(Polarity::player, std::move(bs));
    }

    GamePtr par(const GamePtr& p1, const GamePtr& p2) {
        std::vector<GameBranch> bs;
        bs.reserve(p1->branches().size() + p2->branches().size());
        for (const auto& b : p1->branches()) bs.push_back({lab("L.", b.label), otl(b.child, p2)});
        for (const auto& b : p2->branches()) bs.push_back({lab("R.", b.label), otr(p1, b.child)});
        return node(Polarity::player, std::move(bs));
    }

    GamePtr otr(const GamePtr& p, const GamePtr& o) {
        std::vector<GameBranch> bs;
        bs.reserve(o->branches().size());
        for (const auto& b : o->branches()) bs.push_back({lab("R.", b.label), par(p, b.child)});
        return node(Polarity::opponent, std::move(bs));
    }

    GamePtr otl(const GamePtr& o, const GamePtr& p) {
        std::vector<GameBranch> bs;
        bs.reserve(o->branches().size());
        for (const auto& b : o->branches()) bs.push_back({lab("L.", b.label), par(b.child, p)});
        return node(Polarity::opponent, std::move(bs));
    }

    GamePtr bang(const GamePtr& o) {
        if (o->branches().empty()) return node(Polarity::opponent, {});
        GamePtr acc;
        for (const auto& b : o->branches()) {
            auto part = node(Polarity::opponent, {{b.label, bang_prime(b.child)}});
            acc = acc ? tensor(acc, part) : part;
        }
        return acc;
    }

    GamePtr bang_prime(const GamePtr& p) {
        std::vector<GameBranch> bs;
        bs.reserve(p->branches().size());
        for (const auto& b : p->branches()) bs.push_back({b.label, bang(b.child)});
        return node(Polarity::player, std::move(bs));
    }

    GamePtr quest(const GamePtr& p) {
        if (p->branches().empty()) return node(Polarity::player, {});
        GamePtr acc;
        for (const auto& b : p->branches()) {
            auto part = node(Polarity::player, {{b.label, quest_prime(b.child)}});
            acc = acc ? par(acc, part) : part;
        }
        return acc;
    }

    GamePtr quest_prime(const GamePtr& o) {
        std::vector<GameBranch> bs;
        bs.reserve(o->branches().size());
        for (const auto& b : o->branches()) bs.push_back({b.label, quest(b.child)});
        return node(Polarity::opponent, std::move(bs));
    }
};

// Canonical form with a memoized serialization key per subtree.
struct Canon {
    GamePtr tree;
    std::string key;
};

Canon canon(const GamePtr& g) {
    std::vector<Canon> kids;
    kids.reserve(g->branches().size());
    for (const auto& b : g->branches()) kids.push_back(canon(b.child));
    std::sort(kids.begin(), kids.end(), [](const Canon& a, const Canon& b) { return a.key < b.key; });
    std::string key;
    key.push_back(g->polarity() == Polarity::opponent ? '(' : '{');
    std::vector<GameBranch> bs;
    bs.reserve(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
        key += kids[i].key;
        bs.push_back({"_" + std::to_string(i + 1), kids[i].tree});
    }
    key.push_back(g->polarity() == Polarity::opponent ? ')' : '}');
    return {Game::make(g->polarity(), std::move(bs)), std::move(key)};
}

} // namespace

GamePtr expand(const FormulaPtr& f, std::size_t node_budget) {
    return Expander(node_budget).formula(*f);
}

GamePtr canonical_form(const GamePtr& g) { return canon(g).tree; }

bool game_iso(const GamePtr& a, const GamePtr& b) {
    return canon(a).key == canon(b).key;
}

bool is_iso(const FormulaPtr& f, const FormulaPtr& h, std::size_t node_budget) {
    if (f->polarity() != h->polarity())
        throw PolarityError("is_iso requires operands of equal polarity");
    return game_iso(expand(f, node_budget), expand(h, node_budget));
}

} // namespace polgame
