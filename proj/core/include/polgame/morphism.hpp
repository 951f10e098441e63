#pragma once

#include <optional>

#include "polgame/expand.hpp"
#include "polgame/game.hpp"

namespace polgame {

enum class TermKind : unsigned char {
    tuple,      // ( b1 -> t1, ..., bm -> tm )
    cotuple,    // { a1 -> t1, ..., an -> tn }
    left_move,  // <b . t   — output b on the domain channel, continue with t
    right_move, // >a . t   — output a on the codomain channel, continue with t
    identity,   // id
    compose,    // t ; u    — cut
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct TermBranch {
    std::string label;
    TermPtr body;
};

/// Proof term of the graded sigma-pi calculus. A term is *normal* iff it
/// contains no compose node; cut elimination rewrites every typed term to a
/// normal one.
class Term {
public:
    TermKind kind() const { return kind_; }
    const std::vector<TermBranch>& branches() const { return branches_; }
    const std::string& label() const { return label_; }
    const TermPtr& fst() const { return fst_; }
    const TermPtr& snd() const { return snd_; }

    static TermPtr make_tuple(std::vector<TermBranch> branches);
    static TermPtr make_cotuple(std::vector<TermBranch> branches);
    static TermPtr make_left_move(std::string label, TermPtr body);
    static TermPtr make_right_move(std::string label, TermPtr body);
    static const TermPtr& make_identity();
    static TermPtr make_compose(TermPtr f, TermPtr g);

private:
    friend struct TermMaker;
    explicit Term(TermKind k) : kind_(k) {}
    TermKind kind_;
    std::vector<TermBranch> branches_;
    std::string label_;
    TermPtr fst_, snd_;
};

bool struct_equal(const TermPtr& a, const TermPtr& b);
bool is_normal(const TermPtr& t);

// Term grammar: `( b -> t, ... )`, `{ a -> t, ... }`, `<b . t`, `>a . t`,
// `id`, `t ; t` (left-associative, loosest). `( t )` with no `->` is plain
// grouping; move bodies bind tighter than `;`.
TermPtr parse_term(std::string_view text);
std::string print_term(const TermPtr& t);

/// A term together with the sequent it has been checked to derive. Only
/// typecheck and compose_typed produce these.
struct TypedTerm {
    TermPtr term;
    Sequent sequent;
};

/// Checks `t` against `s` by the annotated rules (tuple, cotuple, projection,
/// injection, identity at equal endpoints). The operand formulas are expanded
/// to trees first, within the budget. Composite terms are checked by
/// eliminating their cuts and checking the normal form: a bare `f ; g` does
/// not determine the cut formula (injection and projection forget the ambient
/// index set), so the middle type of a composition is never inferable from
/// the endpoints alone. Cut-typed composition is available as compose_typed.
TypedTerm typecheck(const TermPtr& t, const Sequent& s,
                    std::size_t node_budget = kDefaultNodeBudget);

/// The four cut rules: requires f.rhs == g.lhs (structurally) and compatible
/// sequent kinds; yields the composite typed by the matching cut.
TypedTerm compose_typed(const TypedTerm& f, const TypedTerm& g);

/// The inductively defined identity morphism 1_G as a normal term:
///   1_O = ( b_i -> <b_i . 1_{P_i} ),  1_P = { a_j -> >a_j . 1_{O_j} }.
TermPtr identity_of(const GamePtr& g);

enum class RewriteOrder : unsigned char { innermost_leftmost, outermost_leftmost };

/// Syntactic cut elimination; terminates and is confluent on typed terms, so
/// the two orders agree (the suite checks this). The step budget guards the
/// termination claim; it never trips on typed input.
TermPtr normalize_term(const TermPtr& t, RewriteOrder order = RewriteOrder::innermost_leftmost,
                       std::size_t step_budget = 10'000'000);

/// Cut elimination of a typed term; the result is compose-free and derives
/// the same sequent.
TermPtr normalize(const TypedTerm& t, RewriteOrder order = RewriteOrder::innermost_leftmost,
                  std::size_t step_budget = 10'000'000);

/// The internal-hom translation: an opponent-polarity formula F with
/// `s provable iff expand(F) has a strategy`.
///   O |-o O'  ->  otr(dual(O), O')
///   O |-  P   ->  otr(dual(O), ( *:P ))           (apres-vous move)
///   P |-p P'  ->  otr(dual(dual(P')), dual(P))    (emitted unsimplified)
FormulaPtr hom_formula(const Sequent& s);

/// Swaps tuple/cotuple and left/right moves; maps normal proofs of s to
/// normal proofs of the dualized sequent.
TermPtr term_dual(const TermPtr& t);

/// Reads a strategy in expand(hom_formula(s)) back as a normal proof of s.
TermPtr strategy_to_proof(const TermPtr& strategy, const Sequent& s,
                          std::size_t node_budget = kDefaultNodeBudget);

/// Writes a normal proof of its sequent as a strategy in the hom game;
/// inverse to strategy_to_proof on normal forms.
TermPtr proof_to_strategy(const TypedTerm& proof,
                          std::size_t node_budget = kDefaultNodeBudget);

} // namespace polgame
