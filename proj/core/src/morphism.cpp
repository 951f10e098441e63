#include "polgame/morphism.hpp"

#include <cctype>
#include <sstream>

namespace polgame {

struct TermMaker {
    static std::shared_ptr<Term> make(TermKind k) {
        return std::shared_ptr<Term>(new Term(k));
    }
    static std::vector<TermBranch>& branches(Term& t) { return t.branches_; }
    static std::string& label(Term& t) { return t.label_; }
    static TermPtr& fst(Term& t) { return t.fst_; }
    static TermPtr& snd(Term& t) { return t.snd_; }
};

TermPtr Term::make_tuple(std::vector<TermBranch> branches) {
    auto t = TermMaker::make(TermKind::tuple);
    TermMaker::branches(*t) = std::move(branches);
    return t;
}

TermPtr Term::make_cotuple(std::vector<TermBranch> branches) {
    auto t = TermMaker::make(TermKind::cotuple);
    TermMaker::branches(*t) = std::move(branches);
    return t;
}

TermPtr Term::make_left_move(std::string label, TermPtr body) {
    auto t = TermMaker::make(TermKind::left_move);
    TermMaker::label(*t) = std::move(label);
    TermMaker::fst(*t) = std::move(body);
    return t;
}

TermPtr Term::make_right_move(std::string label, TermPtr body) {
    auto t = TermMaker::make(TermKind::right_move);
    TermMaker::label(*t) = std::move(label);
    TermMaker::fst(*t) = std::move(body);
    return t;
}

const TermPtr& Term::make_identity() {
    static const TermPtr t = TermMaker::make(TermKind::identity);
    return t;
}

TermPtr Term::make_compose(TermPtr f, TermPtr g) {
    auto t = TermMaker::make(TermKind::compose);
    TermMaker::fst(*t) = std::move(f);
    TermMaker::snd(*t) = std::move(g);
    return t;
}

bool struct_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case TermKind::tuple:
        case TermKind::cotuple: {
            const auto& ba = a->branches();
            const auto& bb = b->branches();
            if (ba.size() != bb.size()) return false;
            for (std::size_t i = 0; i < ba.size(); ++i)
                if (ba[i].label != bb[i].label || !struct_equal(ba[i].body, bb[i].body))
                    return false;
            return true;
        }
        case TermKind::left_move:
        case TermKind::right_move:
            return a->label() == b->label() && struct_equal(a->fst(), b->fst());
        case TermKind::identity:
            return true;
        case TermKind::compose:
            return struct_equal(a->fst(), b->fst()) && struct_equal(a->snd(), b->snd());
    }
    return false;
}

bool is_normal(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::compose: return false;
        case TermKind::tuple:
        case TermKind::cotuple:
            for (const auto& b : t->branches())
                if (!is_normal(b.body)) return false;
            return true;
        case TermKind::left_move:
        case TermKind::right_move:
            return is_normal(t->fst());
        case TermKind::identity:
            return true;
    }
    return true;
}

// ---------------------------------------------------------------------------
// term grammar

namespace {

bool tlabel_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool tlabel_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '.';
}

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    TermPtr all() {
        auto t = compose_chain();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after term");
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of term");
        return text_[pos_];
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string label() {
        skip_ws();
        if (pos_ >= text_.size() || !tlabel_start(text_[pos_])) fail("expected a label");
        std::size_t start = pos_;
        while (pos_ < text_.size() && tlabel_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    TermPtr compose_chain() {
        TermPtr t = simple();
        while (eat(';')) t = Term::make_compose(std::move(t), simple());
        return t;
    }

    TermPtr simple() {
        char c = peek();
        if (c == '<' || c == '>') {
            ++pos_;
            std::string l = label();
            expect('.');
            TermPtr body = simple();
            return c == '<' ? Term::make_left_move(std::move(l), std::move(body))
                            : Term::make_right_move(std::move(l), std::move(body));
        }
        if (c == '(' || c == '{') return braces(c == '(');
        std::string name = label();
        if (name == "id") return Term::make_identity();
        fail("unknown term head '" + name + "'");
    }

    // "(" is a tuple when it opens `label ->`; otherwise plain grouping.
    TermPtr braces(bool round) {
        char close = round ? ')' : '}';
        expect(round ? '(' : '{');
        skip_ws();
        if (eat(close))
            return round ? Term::make_tuple({}) : Term::make_cotuple({});
        if (round && !starts_branch()) {
            TermPtr inner = compose_chain();
            expect(close);
            return inner;
        }
        std::vector<TermBranch> branches;
        for (;;) {
            std::string l = label();
            skip_ws();
            if (!text_.substr(pos_).starts_with("->")) fail("expected '->'");
            pos_ += 2;
            branches.push_back({std::move(l), compose_chain()});
            if (eat(',')) continue;
            expect(close);
            break;
        }
        return round ? Term::make_tuple(std::move(branches))
                     : Term::make_cotuple(std::move(branches));
    }

    bool starts_branch() {
        std::size_t save = pos_;
        skip_ws();
        if (pos_ >= text_.size() || !tlabel_start(text_[pos_])) {
            pos_ = save;
            return false;
        }
        while (pos_ < text_.size() && tlabel_char(text_[pos_])) ++pos_;
        skip_ws();
        bool arrow = text_.substr(pos_).starts_with("->");
        pos_ = save;
        return arrow;
    }
};

void print_rec(std::ostream& os, const Term& t) {
    switch (t.kind()) {
        case TermKind::tuple:
        case TermKind::cotuple: {
            bool round = t.kind() == TermKind::tuple;
            if (t.branches().empty()) {
                os << (round ? "( )" : "{ }");
                return;
            }
            os << (round ? "( " : "{ ");
            for (std::size_t i = 0; i < t.branches().size(); ++i) {
                if (i) os << ", ";
                os << t.branches()[i].label << " -> ";
                print_rec(os, *t.branches()[i].body);
            }
            os << (round ? " )" : " }");
            return;
        }
        case TermKind::left_move:
        case TermKind::right_move:
            os << (t.kind() == TermKind::left_move ? '<' : '>') << t.label() << " . ";
            if (t.fst()->kind() == TermKind::compose) {
                os << "( ";
                print_rec(os, *t.fst());
                os << " )";
            } else {
                print_rec(os, *t.fst());
            }
            return;
        case TermKind::identity:
            os << "id";
            return;
        case TermKind::compose: {
            auto side = [&os](const Term& s) {
                if (s.kind() == TermKind::compose) {
                    os << "( ";
                    print_rec(os, s);
                    os << " )";
                } else {
                    print_rec(os, s);
                }
            };
            side(*t.fst());
            os << " ; ";
            side(*t.snd());
            return;
        }
    }
}

} // namespace

TermPtr parse_term(std::string_view text) { return TermParser(text).all(); }

std::string print_term(const TermPtr& t) {
    std::ostringstream os;
    print_rec(os, *t);
    return os.str();
}

// ---------------------------------------------------------------------------
// cut elimination

namespace {

class Rewriter {
public:
    Rewriter(std::size_t budget) : budget_(budget) {}

    TermPtr innermost(const TermPtr& t) {
        switch (t->kind()) {
            case TermKind::tuple:
            case TermKind::cotuple: {
                std::vector<TermBranch> bs;
                bs.reserve(t->branches().size());
                for (const auto& b : t->branches()) bs.push_back({b.label, innermost(b.body)});
                return t->kind() == TermKind::tuple ? Term::make_tuple(std::move(bs))
                                                    : Term::make_cotuple(std::move(bs));
            }
            case TermKind::left_move:
                return Term::make_left_move(t->label(), innermost(t->fst()));
            case TermKind::right_move:
                return Term::make_right_move(t->label(), innermost(t->fst()));
            case TermKind::identity:
                return t;
            case TermKind::compose:
                return reduce(innermost(t->fst()), innermost(t->snd()));
        }
        return t;
    }

    TermPtr outermost(TermPtr t) {
        for (;;) {
            auto next = step(t);
            if (!next) return t;
            t = std::move(*next);
        }
    }

private:
    std::size_t budget_;
    std::size_t steps_ = 0;

    void bill() {
        if (++steps_ > budget_)
            throw Error("cut elimination exceeded its step budget (" + std::to_string(budget_) +
                        " steps); termination is expected on typed terms");
    }

    static const TermPtr& select(const TermPtr& labeled, const std::string& l, const char* rule) {
        for (const auto& b : labeled->branches())
            if (b.label == l) return b.body;
        throw StuckTermError(std::string("cut elimination stuck: rule ") + rule +
                             " found no branch labeled '" + l + "'");
    }

    // l and r are compose-free; eliminates the cut between them.
    TermPtr reduce(TermPtr l, TermPtr r) {
        bill();
        // neutrality of the identity
        if (r->kind() == TermKind::identity) return l;
        if (l->kind() == TermKind::identity) return r;
        // f ; (b_i -> h_i)  =>  (b_i -> f ; h_i)
        if (r->kind() == TermKind::tuple) {
            std::vector<TermBranch> bs;
            bs.reserve(r->branches().size());
            for (const auto& b : r->branches()) bs.push_back({b.label, reduce(l, b.body)});
            return Term::make_tuple(std::move(bs));
        }
        // (b_i -> h_i) ; <b_k . v  =>  h_k ; v
        if (l->kind() == TermKind::tuple && r->kind() == TermKind::left_move)
            return reduce(select(l, r->label(), "tuple/projection"), r->fst());
        // f ; >a . v  =>  >a . (f ; v)
        if (r->kind() == TermKind::right_move)
            return Term::make_right_move(r->label(), reduce(std::move(l), r->fst()));
        // >a_k . v ; {a_i -> h_i}  =>  v ; h_k
        if (l->kind() == TermKind::right_move && r->kind() == TermKind::cotuple)
            return reduce(l->fst(), select(r, l->label(), "injection/cotuple"));
        // <b . v ; g  =>  <b . (v ; g)
        if (l->kind() == TermKind::left_move)
            return Term::make_left_move(l->label(), reduce(l->fst(), std::move(r)));
        // {a_i -> h_i} ; g  =>  {a_i -> h_i ; g}
        if (l->kind() == TermKind::cotuple) {
            std::vector<TermBranch> bs;
            bs.reserve(l->branches().size());
            for (const auto& b : l->branches()) bs.push_back({b.label, reduce(b.body, r)});
            return Term::make_cotuple(std::move(bs));
        }
        throw StuckTermError("cut elimination stuck: no rule for " + print_term(l) + " ; " +
                             print_term(r));
    }

    // Leftmost-outermost single step, or nullopt when t is normal.
    std::optional<TermPtr> step(const TermPtr& t) {
        switch (t->kind()) {
            case TermKind::identity:
                return std::nullopt;
            case TermKind::tuple:
            case TermKind::cotuple: {
                for (std::size_t i = 0; i < t->branches().size(); ++i) {
                    if (auto sub = step(t->branches()[i].body)) {
                        auto bs = t->branches();
                        bs[i].body = *sub;
                        return t->kind() == TermKind::tuple
                                   ? Term::make_tuple(std::move(bs))
                                   : Term::make_cotuple(std::move(bs));
                    }
                }
                return std::nullopt;
            }
            case TermKind::left_move:
            case TermKind::right_move: {
                if (auto sub = step(t->fst()))
                    return t->kind() == TermKind::left_move
                               ? Term::make_left_move(t->label(), *sub)
                               : Term::make_right_move(t->label(), *sub);
                return std::nullopt;
            }
            case TermKind::compose:
                break;
        }
        const TermPtr& l = t->fst();
        const TermPtr& r = t->snd();
        if (auto rewritten = step_at(l, r)) {
            bill();
            return rewritten;
        }
        if (auto sub = step(l)) return Term::make_compose(*sub, r);
        if (auto sub = step(r)) return Term::make_compose(l, *sub);
        throw StuckTermError("cut elimination stuck: no rule for " + print_term(l) + " ; " +
                             print_term(r));
    }

    // The rule table on raw shapes, one step, no recursion into bodies.
    std::optional<TermPtr> step_at(const TermPtr& l, const TermPtr& r) {
        if (r->kind() == TermKind::identity) return l;
        if (l->kind() == TermKind::identity) return r;
        if (r->kind() == TermKind::tuple) {
            std::vector<TermBranch> bs;
            bs.reserve(r->branches().size());
            for (const auto& b : r->branches())
                bs.push_back({b.label, Term::make_compose(l, b.body)});
            return Term::make_tuple(std::move(bs));
        }
        if (l->kind() == TermKind::tuple && r->kind() == TermKind::left_move)
            return Term::make_compose(select(l, r->label(), "tuple/projection"), r->fst());
        if (r->kind() == TermKind::right_move)
            return Term::make_right_move(r->label(), Term::make_compose(l, r->fst()));
        if (l->kind() == TermKind::right_move && r->kind() == TermKind::cotuple)
            return Term::make_compose(l->fst(), select(r, l->label(), "injection/cotuple"));
        if (l->kind() == TermKind::left_move)
            return Term::make_left_move(l->label(), Term::make_compose(l->fst(), r));
        if (l->kind() == TermKind::cotuple) {
            std::vector<TermBranch> bs;
            bs.reserve(l->branches().size());
            for (const auto& b : l->branches())
                bs.push_back({b.label, Term::make_compose(b.body, r)});
            return Term::make_cotuple(std::move(bs));
        }
        return std::nullopt;
    }
};

} // namespace

TermPtr normalize_term(const TermPtr& t, RewriteOrder order, std::size_t step_budget) {
    Rewriter rw(step_budget);
    return order == RewriteOrder::innermost_leftmost ? rw.innermost(t) : rw.outermost(t);
}

TermPtr normalize(const TypedTerm& t, RewriteOrder order, std::size_t step_budget) {
    return normalize_term(t.term, order, step_budget);
}

// ---------------------------------------------------------------------------
// typechecking

namespace {

class Checker {
public:
    void check(const TermPtr& t, const GamePtr& lhs, const GamePtr& rhs, SequentKind kind,
               std::string& path) {
        switch (kind) {
            case SequentKind::opponent: return check_opponent(t, lhs, rhs, path);
            case SequentKind::mixed: return check_mixed(t, lhs, rhs, path);
            case SequentKind::player: return check_player(t, lhs, rhs, path);
        }
    }

private:
    [[noreturn]] static void fail(const char* rule, const std::string& path,
                                  const std::string& what) {
        throw TypeError(rule, path.empty() ? "<root>" : path, what);
    }

    void check_opponent(const TermPtr& t, const GamePtr& lhs, const GamePtr& rhs,
                        std::string& path) {
        if (t->kind() == TermKind::identity) {
            if (!struct_equal(lhs, rhs))
                fail("identity", path, "identity requires equal endpoints");
            return;
        }
        if (t->kind() != TermKind::tuple)
            fail("tuple", path, "an opponent sequent is derived by a tuple");
        check_labels(t, rhs, "tuple", path);
        for (std::size_t i = 0; i < t->branches().size(); ++i) {
            Scope s(path, t->branches()[i].label);
            check_mixed(t->branches()[i].body, lhs, rhs->branches()[i].child, path);
        }
    }

    void check_player(const TermPtr& t, const GamePtr& lhs, const GamePtr& rhs,
                      std::string& path) {
        if (t->kind() == TermKind::identity) {
            if (!struct_equal(lhs, rhs))
                fail("identity", path, "identity requires equal endpoints");
            return;
        }
        if (t->kind() != TermKind::cotuple)
            fail("cotuple", path, "a player sequent is derived by a cotuple");
        check_labels(t, lhs, "cotuple", path);
        for (std::size_t i = 0; i < t->branches().size(); ++i) {
            Scope s(path, t->branches()[i].label);
            check_mixed(t->branches()[i].body, lhs->branches()[i].child, rhs, path);
        }
    }

    void check_mixed(const TermPtr& t, const GamePtr& lhs, const GamePtr& rhs,
                     std::string& path) {
        if (t->kind() == TermKind::left_move) {
            const Game* dom = lhs.get();
            for (const auto& b : dom->branches())
                if (b.label == t->label()) {
                    Scope s(path, "<" + t->label());
                    return check_player(t->fst(), b.child, rhs, path);
                }
            fail("projection", path, "no branch '" + t->label() + "' in the domain");
        }
        if (t->kind() == TermKind::right_move) {
            for (const auto& b : rhs->branches())
                if (b.label == t->label()) {
                    Scope s(path, ">" + t->label());
                    return check_opponent(t->fst(), lhs, b.child, path);
                }
            fail("injection", path, "no branch '" + t->label() + "' in the codomain");
        }
        fail("projection/injection", path, "a mixed sequent is derived by a move");
    }

    static void check_labels(const TermPtr& t, const GamePtr& g, const char* rule,
                             const std::string& path) {
        const auto& tb = t->branches();
        const auto& gb = g->branches();
        if (tb.size() != gb.size())
            fail(rule, path, "expected " + std::to_string(gb.size()) + " branches, found " +
                                 std::to_string(tb.size()));
        for (std::size_t i = 0; i < tb.size(); ++i)
            if (tb[i].label != gb[i].label)
                fail(rule, path, "branch " + std::to_string(i + 1) + " should be labeled '" +
                                     gb[i].label + "', found '" + tb[i].label + "'");
    }

    struct Scope {
        std::string& path;
        std::size_t old;
        Scope(std::string& p, const std::string& seg) : path(p), old(p.size()) {
            if (!path.empty()) path += "/";
            path += seg;
        }
        ~Scope() { path.resize(old); }
    };
};

} // namespace

TypedTerm typecheck(const TermPtr& t, const Sequent& s, std::size_t node_budget) {
    GamePtr lhs = expand(s.lhs, node_budget);
    GamePtr rhs = expand(s.rhs, node_budget);
    TermPtr subject = t;
    if (!is_normal(t)) {
        // A bare cut does not carry its cut formula, so composite terms are
        // checked through their cut-free form.
        try {
            subject = normalize_term(t);
        } catch (const StuckTermError& e) {
            throw TypeError("cut", "<root>", e.what());
        }
    }
    std::string path;
    Checker().check(subject, lhs, rhs, s.kind, path);
    return TypedTerm{t, s};
}

TypedTerm compose_typed(const TypedTerm& f, const TypedTerm& g) {
    if (!struct_equal(f.sequent.rhs, g.sequent.lhs))
        throw TypeError("cut", "<root>", "cut formulas do not match");
    SequentKind kind;
    if (f.sequent.kind == SequentKind::opponent && g.sequent.kind == SequentKind::opponent)
        kind = SequentKind::opponent; // o-cut
    else if (f.sequent.kind == SequentKind::player && g.sequent.kind == SequentKind::player)
        kind = SequentKind::player; // p-cut
    else if (f.sequent.kind == SequentKind::opponent && g.sequent.kind == SequentKind::mixed)
        kind = SequentKind::mixed; // om-cut
    else if (f.sequent.kind == SequentKind::mixed && g.sequent.kind == SequentKind::player)
        kind = SequentKind::mixed; // mp-cut
    else
        throw TypeError("cut", "<root>", "no cut rule composes these sequent kinds");
    return TypedTerm{Term::make_compose(f.term, g.term),
                     make_sequent(kind, f.sequent.lhs, g.sequent.rhs)};
}

TermPtr identity_of(const GamePtr& g) {
    std::vector<TermBranch> bs;
    bs.reserve(g->branches().size());
    if (g->polarity() == Polarity::opponent) {
        for (const auto& b : g->branches())
            bs.push_back({b.label, Term::make_left_move(b.label, identity_of(b.child))});
        return Term::make_tuple(std::move(bs));
    }
    for (const auto& b : g->branches())
        bs.push_back({b.label, Term::make_right_move(b.label, identity_of(b.child))});
    return Term::make_cotuple(std::move(bs));
}

// ---------------------------------------------------------------------------
// hom translation

FormulaPtr hom_formula(const Sequent& s) {
    switch (s.kind) {
        case SequentKind::opponent:
            return Formula::make_otr(Formula::make_dual(s.lhs), s.rhs);
        case SequentKind::mixed:
            return Formula::make_otr(Formula::make_dual(s.lhs),
                                     Formula::opponent_literal({{"*", s.rhs}}));
        case SequentKind::player:
            return Formula::make_otr(Formula::make_dual(Formula::make_dual(s.rhs)),
                                     Formula::make_dual(s.lhs));
    }
    throw Error("unreachable sequent kind");
}

TermPtr term_dual(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::tuple:
        case TermKind::cotuple: {
            std::vector<TermBranch> bs;
            bs.reserve(t->branches().size());
            for (const auto& b : t->branches()) bs.push_back({b.label, term_dual(b.body)});
            return t->kind() == TermKind::tuple ? Term::make_cotuple(std::move(bs))
                                                : Term::make_tuple(std::move(bs));
        }
        case TermKind::left_move:
            return Term::make_right_move(t->label(), term_dual(t->fst()));
        case TermKind::right_move:
            return Term::make_left_move(t->label(), term_dual(t->fst()));
        case TermKind::identity:
            return t;
        case TermKind::compose:
            throw Error("term_dual is defined on normal terms");
    }
    throw Error("unreachable term kind");
}

namespace {

// Strategies in the hom game are tuples plus codomain moves whose labels
// carry the provenance prefixes of expand(); the translation walks the
// sequent's operand trees in lockstep and strips one prefix layer.
class HomTranslator {
public:
    [[noreturn]] static void mismatch(const std::string& what) {
        throw TypeError("hom-translation", "<root>", "shape mismatch: " + what);
    }

    // proofs of  L |-o R  <->  strategies in (R.b_i : hom(L |- R_i))
    TermPtr from_o(const TermPtr& t, const GamePtr& L, const GamePtr& R) {
        if (t->kind() != TermKind::tuple) mismatch("expected a tuple strategy");
        if (t->branches().size() != R->branches().size()) mismatch("tuple width");
        std::vector<TermBranch> bs;
        bs.reserve(R->branches().size());
        for (std::size_t i = 0; i < R->branches().size(); ++i) {
            const auto& rb = R->branches()[i];
            if (t->branches()[i].label != "R." + rb.label) mismatch("tuple label");
            bs.push_back({rb.label, from_m(t->branches()[i].body, L, rb.child)});
        }
        return Term::make_tuple(std::move(bs));
    }

    TermPtr from_m(const TermPtr& t, const GamePtr& L, const GamePtr& R) {
        if (t->kind() != TermKind::right_move) mismatch("expected a codomain move");
        const std::string& l = t->label();
        for (const auto& b : L->branches())
            if (l == "L." + b.label)
                return Term::make_left_move(b.label, from_p(t->fst(), b.child, R));
        for (const auto& b : R->branches())
            if (l == "R." + b.label)
                return Term::make_right_move(b.label, from_o(t->fst(), L, b.child));
        mismatch("move label '" + l + "'");
    }

    TermPtr from_p(const TermPtr& t, const GamePtr& L, const GamePtr& R) {
        if (t->kind() != TermKind::tuple) mismatch("expected a tuple strategy");
        if (t->branches().size() != L->branches().size()) mismatch("tuple width");
        std::vector<TermBranch> bs;
        bs.reserve(L->branches().size());
        for (std::size_t i = 0; i < L->branches().size(); ++i) {
            const auto& lb = L->branches()[i];
            if (t->branches()[i].label != "L." + lb.label) mismatch("tuple label");
            bs.push_back({lb.label, from_m(t->branches()[i].body, lb.child, R)});
        }
        return Term::make_cotuple(std::move(bs));
    }

    TermPtr to_o(const TermPtr& p, const GamePtr& L, const GamePtr& R) {
        if (p->kind() != TermKind::tuple) mismatch("expected a tuple proof");
        if (p->branches().size() != R->branches().size()) mismatch("tuple width");
        std::vector<TermBranch> bs;
        bs.reserve(R->branches().size());
        for (std::size_t i = 0; i < R->branches().size(); ++i) {
            const auto& rb = R->branches()[i];
            bs.push_back({"R." + rb.label, to_m(p->branches()[i].body, L, rb.child)});
        }
        return Term::make_tuple(std::move(bs));
    }

    TermPtr to_m(const TermPtr& p, const GamePtr& L, const GamePtr& R) {
        if (p->kind() == TermKind::left_move) {
            for (const auto& b : L->branches())
                if (b.label == p->label())
                    return Term::make_right_move("L." + b.label, to_p(p->fst(), b.child, R));
            mismatch("projection label");
        }
        if (p->kind() == TermKind::right_move) {
            for (const auto& b : R->branches())
                if (b.label == p->label())
                    return Term::make_right_move("R." + b.label, to_o(p->fst(), L, b.child));
            mismatch("injection label");
        }
        mismatch("expected a move proof");
    }

    TermPtr to_p(const TermPtr& p, const GamePtr& L, const GamePtr& R) {
        if (p->kind() != TermKind::cotuple) mismatch("expected a cotuple proof");
        if (p->branches().size() != L->branches().size()) mismatch("cotuple width");
        std::vector<TermBranch> bs;
        bs.reserve(L->branches().size());
        for (std::size_t i = 0; i < L->branches().size(); ++i) {
            const auto& lb = L->branches()[i];
            bs.push_back({"L." + lb.label, to_m(p->branches()[i].body, lb.child, R)});
        }
        return Term::make_tuple(std::move(bs));
    }
};

} // namespace

TermPtr strategy_to_proof(const TermPtr& strategy, const Sequent& s, std::size_t node_budget) {
    GamePtr L = expand(s.lhs, node_budget);
    GamePtr R = expand(s.rhs, node_budget);
    HomTranslator tr;
    switch (s.kind) {
        case SequentKind::opponent:
            return tr.from_o(strategy, L, R);
        case SequentKind::mixed: {
            // hom root is the apres-vous node (R.* : hom(L |- R))
            if (strategy->kind() != TermKind::tuple || strategy->branches().size() != 1 ||
                strategy->branches()[0].label != "R.*")
                HomTranslator::mismatch("expected the apres-vous tuple");
            return tr.from_m(strategy->branches()[0].body, L, R);
        }
        case SequentKind::player: {
            // strategies for P |-p P' live in hom(dual(P') |-o dual(P))
            TermPtr q = tr.from_o(strategy, dual(R), dual(L));
            return term_dual(q);
        }
    }
    throw Error("unreachable sequent kind");
}

TermPtr proof_to_strategy(const TypedTerm& proof, std::size_t node_budget) {
    GamePtr L = expand(proof.sequent.lhs, node_budget);
    GamePtr R = expand(proof.sequent.rhs, node_budget);
    HomTranslator tr;
    switch (proof.sequent.kind) {
        case SequentKind::opponent:
            return tr.to_o(proof.term, L, R);
        case SequentKind::mixed:
            return Term::make_tuple({{"R.*", tr.to_m(proof.term, L, R)}});
        case SequentKind::player:
            return tr.to_o(term_dual(proof.term), dual(R), dual(L));
    }
    throw Error("unreachable sequent kind");
}

} // namespace polgame
