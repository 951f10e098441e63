#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polgame/errors.hpp"

namespace polgame {

enum class Polarity : unsigned char { opponent, player };

constexpr Polarity flip(Polarity p) {
    return p == Polarity::opponent ? Polarity::player : Polarity::opponent;
}

const char* to_string(Polarity p);

enum class FormulaKind : unsigned char {
    opp_lit,  // ( b1:P1, ..., bm:Pm )
    play_lit, // { a1:O1, ..., an:On }
    tensor,   // ox(O,O')   -> opponent
    oxr,      // oxr(O,P)   -> player
    oxl,      // oxl(P,O)   -> player
    par,      // par(P,P')  -> player
    otr,      // otr(P,O)   -> opponent
    otl,      // otl(O,P)   -> opponent
    dual,     // dual(F)    -> flipped
    bang,     // bang(O)    -> opponent
    quest,    // quest(P)   -> player
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct FormulaBranch {
    std::string label;
    FormulaPtr child;
};

/// Immutable polarized formula. Every node carries a derived polarity; the
/// factory functions are the only way to build nodes and they reject
/// ill-polarized applications, so a stored formula is well-typed by
/// construction.
class Formula {
public:
    FormulaKind kind() const { return kind_; }
    Polarity polarity() const { return polarity_; }

    /// Branches of a literal node (empty vector for the atomic games 1, 0).
    const std::vector<FormulaBranch>& branches() const { return branches_; }

    /// First operand of a compound node (the only operand of unary kinds).
    const FormulaPtr& left() const { return left_; }
    /// Second operand of a binary compound node.
    const FormulaPtr& right() const { return right_; }

    static FormulaPtr opponent_literal(std::vector<FormulaBranch> branches);
    static FormulaPtr player_literal(std::vector<FormulaBranch> branches);
    static FormulaPtr make_tensor(FormulaPtr o1, FormulaPtr o2);
    static FormulaPtr make_oxr(FormulaPtr o, FormulaPtr p);
    static FormulaPtr make_oxl(FormulaPtr p, FormulaPtr o);
    static FormulaPtr make_par(FormulaPtr p1, FormulaPtr p2);
    static FormulaPtr make_otr(FormulaPtr p, FormulaPtr o);
    static FormulaPtr make_otl(FormulaPtr o, FormulaPtr p);
    static FormulaPtr make_dual(FormulaPtr f);
    static FormulaPtr make_bang(FormulaPtr o);
    static FormulaPtr make_quest(FormulaPtr p);

    /// The empty opponent game 1 = ().
    static const FormulaPtr& one();
    /// The empty player game 0 = {}.
    static const FormulaPtr& zero();

    ~Formula();
    Formula(const Formula&) = delete;
    Formula& operator=(const Formula&) = delete;

private:
    friend struct FormulaMaker;
    Formula(FormulaKind k, Polarity pol) : kind_(k), polarity_(pol) {}

    FormulaKind kind_;
    Polarity polarity_;
    std::vector<FormulaBranch> branches_;
    FormulaPtr left_;
    FormulaPtr right_;
};

bool struct_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Number of AST nodes; iterative, safe on very deep chains.
std::size_t ast_size(const FormulaPtr& f);

inline Polarity polarity_of(const FormulaPtr& f) { return f->polarity(); }

enum class SequentKind : unsigned char { opponent, mixed, player };

const char* turnstile(SequentKind k);

/// One of  O |-o O'  /  O |- P  /  P |-p P'.
struct Sequent {
    SequentKind kind;
    FormulaPtr lhs;
    FormulaPtr rhs;
};

/// Checks kind/polarity compatibility (there are no sequents from player to
/// opponent; such inputs are rejected here).
Sequent make_sequent(SequentKind kind, FormulaPtr lhs, FormulaPtr rhs);

// Grammar (UTF-8, whitespace-insensitive):
//   formula  := literal | conn
//   literal  := "(" branches? ")" | "{" branches? "}"
//   branches := branch ("," branch)*
//   branch   := (label | int | int "*" label) ":" formula
//   conn     := ("ox"|"oxr"|"oxl"|"par"|"otl"|"otr") "(" formula "," formula ")"
//             | ("dual"|"bang"|"quest") "(" formula ")" | "!" formula | "?" formula
//   sequent  := formula ("|-o"|"|-p"|"|-") formula
//   label    := [A-Za-z_][A-Za-z0-9_#]*
// Multiplicity sugar: "n : F" expands to branches _1.._n, "n * a : F" to
// a#1..a#n, each with a structurally equal copy of F.
FormulaPtr parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

std::string print_formula(const FormulaPtr& f);
std::string print_sequent(const Sequent& s);

} // namespace polgame
