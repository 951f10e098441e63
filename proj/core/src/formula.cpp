#include "polgame/formula.hpp"

#include <algorithm>
#include <unordered_set>

namespace polgame {

const char* to_string(Polarity p) {
    return p == Polarity::opponent ? "opponent" : "player";
}

const char* turnstile(SequentKind k) {
    switch (k) {
        case SequentKind::opponent: return "|-o";
        case SequentKind::player: return "|-p";
        default: return "|-";
    }
}

namespace {

void check_distinct_labels(const std::vector<FormulaBranch>& branches) {
    std::unordered_set<std::string_view> seen;
    for (const auto& b : branches)
        if (!seen.insert(b.label).second)
            throw DuplicateLabelError("duplicate branch label '" + b.label + "'");
}

void require(bool ok, const char* conn, const std::string& detail) {
    if (!ok) throw PolarityError(std::string("polarity mismatch in ") + conn + ": " + detail);
}

} // namespace

struct FormulaMaker {
    static std::shared_ptr<Formula> make(FormulaKind k, Polarity pol) {
        return std::shared_ptr<Formula>(new Formula(k, pol));
    }
    static std::vector<FormulaBranch>& branches(Formula& f) { return f.branches_; }
    static FormulaPtr& left(Formula& f) { return f.left_; }
    static FormulaPtr& right(Formula& f) { return f.right_; }
};

FormulaPtr Formula::opponent_literal(std::vector<FormulaBranch> branches) {
    check_distinct_labels(branches);
    for (const auto& b : branches)
        require(b.child && b.child->polarity() == Polarity::player, "opponent literal",
                "branch '" + b.label + "' must be a player formula");
    auto n = FormulaMaker::make(FormulaKind::opp_lit, Polarity::opponent);
    FormulaMaker::branches(*n) = std::move(branches);
    return n;
}

FormulaPtr Formula::player_literal(std::vector<FormulaBranch> branches) {
    check_distinct_labels(branches);
    for (const auto& b : branches)
        require(b.child && b.child->polarity() == Polarity::opponent, "player literal",
                "branch '" + b.label + "' must be an opponent formula");
    auto n = FormulaMaker::make(FormulaKind::play_lit, Polarity::player);
    FormulaMaker::branches(*n) = std::move(branches);
    return n;
}

namespace {
FormulaPtr binary(FormulaKind k, Polarity result, FormulaPtr a, FormulaPtr b) {
    auto n = FormulaMaker::make(k, result);
    FormulaMaker::left(*n) = std::move(a);
    FormulaMaker::right(*n) = std::move(b);
    return n;
}
FormulaPtr unary(FormulaKind k, Polarity result, FormulaPtr a) {
    auto n = FormulaMaker::make(k, result);
    FormulaMaker::left(*n) = std::move(a);
    return n;
}
} // namespace

FormulaPtr Formula::make_tensor(FormulaPtr o1, FormulaPtr o2) {
    require(o1->polarity() == Polarity::opponent && o2->polarity() == Polarity::opponent,
            "ox", "ox requires two opponent operands");
    return binary(FormulaKind::tensor, Polarity::opponent, std::move(o1), std::move(o2));
}

FormulaPtr Formula::make_oxr(FormulaPtr o, FormulaPtr p) {
    require(o->polarity() == Polarity::opponent && p->polarity() == Polarity::player,
            "oxr", "oxr requires (opponent, player) operands");
    return binary(FormulaKind::oxr, Polarity::player, std::move(o), std::move(p));
}

FormulaPtr Formula::make_oxl(FormulaPtr p, FormulaPtr o) {
    require(p->polarity() == Polarity::player && o->polarity() == Polarity::opponent,
            "oxl", "oxl requires (player, opponent) operands");
    return binary(FormulaKind::oxl, Polarity::player, std::move(p), std::move(o));
}

FormulaPtr Formula::make_par(FormulaPtr p1, FormulaPtr p2) {
    require(p1->polarity() == Polarity::player && p2->polarity() == Polarity::player,
            "par", "par requires two player operands");
    return binary(FormulaKind::par, Polarity::player, std::move(p1), std::move(p2));
}

FormulaPtr Formula::make_otr(FormulaPtr p, FormulaPtr o) {
    require(p->polarity() == Polarity::player && o->polarity() == Polarity::opponent,
            "otr", "otr requires (player, opponent) operands");
    return binary(FormulaKind::otr, Polarity::opponent, std::move(p), std::move(o));
}

FormulaPtr Formula::make_otl(FormulaPtr o, FormulaPtr p) {
    require(o->polarity() == Polarity::opponent && p->polarity() == Polarity::player,
            "otl", "otl requires (opponent, player) operands");
    return binary(FormulaKind::otl, Polarity::opponent, std::move(o), std::move(p));
}

FormulaPtr Formula::make_dual(FormulaPtr f) {
    Polarity pol = flip(f->polarity());
    return unary(FormulaKind::dual, pol, std::move(f));
}

FormulaPtr Formula::make_bang(FormulaPtr o) {
    require(o->polarity() == Polarity::opponent, "bang", "bang requires an opponent operand");
    return unary(FormulaKind::bang, Polarity::opponent, std::move(o));
}

FormulaPtr Formula::make_quest(FormulaPtr p) {
    require(p->polarity() == Polarity::player, "quest", "quest requires a player operand");
    return unary(FormulaKind::quest, Polarity::player, std::move(p));
}

const FormulaPtr& Formula::one() {
    static const FormulaPtr f = opponent_literal({});
    return f;
}

const FormulaPtr& Formula::zero() {
    static const FormulaPtr f = player_literal({});
    return f;
}

// Destruction is iterative: a node steals its children into a worklist before
// they are released, so deep left-leaning chains do not overflow the stack.
Formula::~Formula() {
    std::vector<FormulaPtr> work;
    auto steal = [&work](Formula& f) {
        for (auto& b : f.branches_)
            if (b.child) work.push_back(std::move(b.child));
        if (f.left_) work.push_back(std::move(f.left_));
        if (f.right_) work.push_back(std::move(f.right_));
    };
    steal(*this);
    while (!work.empty()) {
        FormulaPtr cur = std::move(work.back());
        work.pop_back();
        if (cur && cur.use_count() == 1) steal(const_cast<Formula&>(*cur));
    }
}

bool struct_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            const auto& ba = a->branches();
            const auto& bb = b->branches();
            if (ba.size() != bb.size()) return false;
            for (std::size_t i = 0; i < ba.size(); ++i)
                if (ba[i].label != bb[i].label || !struct_equal(ba[i].child, bb[i].child))
                    return false;
            return true;
        }
        case FormulaKind::dual:
        case FormulaKind::bang:
        case FormulaKind::quest:
            return struct_equal(a->left(), b->left());
        default:
            return struct_equal(a->left(), b->left()) && struct_equal(a->right(), b->right());
    }
}

std::size_t ast_size(const FormulaPtr& f) {
    std::size_t n = 0;
    std::vector<const Formula*> stack{f.get()};
    while (!stack.empty()) {
        const Formula* cur = stack.back();
        stack.pop_back();
        if (!cur) continue;
        ++n;
        for (const auto& b : cur->branches()) stack.push_back(b.child.get());
        if (cur->left()) stack.push_back(cur->left().get());
        if (cur->right()) stack.push_back(cur->right().get());
    }
    return n;
}

Sequent make_sequent(SequentKind kind, FormulaPtr lhs, FormulaPtr rhs) {
    Polarity lp = lhs->polarity(), rp = rhs->polarity();
    switch (kind) {
        case SequentKind::opponent:
            if (lp != Polarity::opponent || rp != Polarity::opponent)
                throw PolarityError("|-o requires opponent formulas on both sides");
            break;
        case SequentKind::mixed:
            if (lp == Polarity::player && rp == Polarity::opponent)
                throw PolarityError("there are no morphisms from player to opponent");
            if (lp != Polarity::opponent || rp != Polarity::player)
                throw PolarityError("|- requires an opponent lhs and a player rhs");
            break;
        case SequentKind::player:
            if (lp != Polarity::player || rp != Polarity::player)
                throw PolarityError("|-p requires player formulas on both sides");
            break;
    }
    return Sequent{kind, std::move(lhs), std::move(rhs)};
}

} // namespace polgame
