#include "polgame/eval_linear.hpp"

#include "polgame/eval_naive.hpp"

namespace polgame {

namespace {

enum class Fold : unsigned char { conj, disj, neg, pass };

Fold fold_of(FormulaKind k, bool counter) {
    switch (k) {
        case FormulaKind::opp_lit:
        case FormulaKind::tensor:
        case FormulaKind::oxr:
        case FormulaKind::oxl:
            return counter ? Fold::disj : Fold::conj;
        case FormulaKind::play_lit:
        case FormulaKind::par:
        case FormulaKind::otr:
        case FormulaKind::otl:
            return counter ? Fold::conj : Fold::disj;
        case FormulaKind::dual:
            return Fold::neg;
        default: // bang, quest
            return Fold::pass;
    }
}

struct Frame {
    const Formula* f;
    std::size_t idx;
    bool acc;
    Fold fold;
};

// One visit per AST node, explicit stack: deep chains must not overflow.
bool evaluate(const Formula& root, bool counter, std::uint64_t* visits) {
    std::vector<Frame> stack;
    auto push = [&](const Formula* f) {
        if (visits) ++*visits;
        Fold fo = fold_of(f->kind(), counter);
        bool init = fo == Fold::conj;
        stack.push_back(Frame{f, 0, init, fo});
    };
    push(&root);
    bool ret = false;
    while (!stack.empty()) {
        Frame& fr = stack.back();
        const Formula& f = *fr.f;
        const Formula* child = nullptr;
        if (f.kind() == FormulaKind::opp_lit || f.kind() == FormulaKind::play_lit) {
            if (fr.idx < f.branches().size()) child = f.branches()[fr.idx].child.get();
        } else if (f.kind() == FormulaKind::dual || f.kind() == FormulaKind::bang ||
                   f.kind() == FormulaKind::quest) {
            if (fr.idx < 1) child = f.left().get();
        } else {
            if (fr.idx == 0) child = f.left().get();
            else if (fr.idx == 1) child = f.right().get();
        }
        if (child) {
            ++fr.idx;
            push(child);
            continue;
        }
        ret = fr.fold == Fold::neg ? !fr.acc : fr.acc;
        stack.pop_back();
        if (!stack.empty()) {
            Frame& p = stack.back();
            switch (p.fold) {
                case Fold::conj: p.acc = p.acc && ret; break;
                case Fold::disj: p.acc = p.acc || ret; break;
                default: p.acc = ret; break;
            }
        }
    }
    return ret;
}

} // namespace

LinearResult linear_value_counted(const FormulaPtr& f) {
    std::uint64_t visits = 0;
    bool v = evaluate(*f, false, &visits);
    return {v, visits};
}

bool linear_counter_value(const FormulaPtr& f) { return evaluate(*f, true, nullptr); }

bool provable(const Sequent& s) {
    return !linear_value(s.lhs) || linear_value(s.rhs);
}

bool hom_reduction_check(const FormulaPtr& o1, const FormulaPtr& o2, std::size_t node_budget) {
    if (o1->polarity() != Polarity::opponent || o2->polarity() != Polarity::opponent)
        throw PolarityError("hom_reduction_check requires two opponent formulas");
    bool via_provable = provable(make_sequent(SequentKind::opponent, o1, o2));
    bool via_linear = !linear_value(o1) || linear_value(o2);
    bool via_naive =
        has_strategy(expand(Formula::make_otr(Formula::make_dual(o1), o2), node_budget));
    if (via_provable != via_linear || via_linear != via_naive)
        throw Error("hom reduction disagreement (this indicates a bug)");
    return via_naive;
}

} // namespace polgame
