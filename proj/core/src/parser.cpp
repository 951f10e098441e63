#include <cctype>
#include <string>

#include "polgame/formula.hpp"

namespace polgame {

namespace {

constexpr std::size_t kMaxNestingDepth = 5000;
constexpr std::uint64_t kMaxMultiplicity = 1u << 20;

bool label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaPtr formula_all() {
        auto f = formula(0);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after formula");
        return f;
    }

    Sequent sequent_all() {
        auto lhs = formula(0);
        skip_ws();
        SequentKind kind = turnstile();
        auto rhs = formula(0);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after sequent");
        try {
            return make_sequent(kind, std::move(lhs), std::move(rhs));
        } catch (const PolarityError& e) {
            fail(e.what());
        }
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
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool eat(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string label() {
        skip_ws();
        if (pos_ >= text_.size() || !label_start(text_[pos_])) fail("expected a label");
        std::size_t start = pos_;
        while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > kMaxMultiplicity) fail("multiplicity too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    SequentKind turnstile() {
        skip_ws();
        if (!text_.substr(pos_).starts_with("|-")) fail("expected a turnstile (|-o, |-p or |-)");
        pos_ += 2;
        // "|-o"/"|-p" only when the marker is not the start of a label, so
        // "|-ox((),())" reads as a mixed sequent over an ox formula.
        if (pos_ < text_.size() && (text_[pos_] == 'o' || text_[pos_] == 'p') &&
            (pos_ + 1 >= text_.size() || !label_char(text_[pos_ + 1]))) {
            char c = text_[pos_++];
            return c == 'o' ? SequentKind::opponent : SequentKind::player;
        }
        return SequentKind::mixed;
    }

    FormulaPtr formula(std::size_t depth) {
        if (depth > kMaxNestingDepth) fail("formula nesting too deep");
        char c = peek();
        if (c == '(') return literal(Polarity::opponent, depth);
        if (c == '{') return literal(Polarity::player, depth);
        if (c == '!') {
            ++pos_;
            return wrap_unary(FormulaKind::bang, formula(depth + 1));
        }
        if (c == '?') {
            ++pos_;
            return wrap_unary(FormulaKind::quest, formula(depth + 1));
        }
        if (!label_start(c)) fail("expected a formula");
        std::size_t at = pos_;
        std::string name = label();
        if (name == "dual" || name == "bang" || name == "quest") {
            expect('(');
            auto f = formula(depth + 1);
            expect(')');
            if (name == "dual") return Formula::make_dual(std::move(f));
            return wrap_unary(name == "bang" ? FormulaKind::bang : FormulaKind::quest,
                              std::move(f));
        }
        if (name == "ox" || name == "oxr" || name == "oxl" || name == "par" || name == "otl" ||
            name == "otr") {
            expect('(');
            auto a = formula(depth + 1);
            expect(',');
            auto b = formula(depth + 1);
            expect(')');
            try {
                if (name == "ox") return Formula::make_tensor(std::move(a), std::move(b));
                if (name == "oxr") return Formula::make_oxr(std::move(a), std::move(b));
                if (name == "oxl") return Formula::make_oxl(std::move(a), std::move(b));
                if (name == "par") return Formula::make_par(std::move(a), std::move(b));
                if (name == "otl") return Formula::make_otl(std::move(a), std::move(b));
                return Formula::make_otr(std::move(a), std::move(b));
            } catch (const PolarityError& e) {
                pos_ = at;
                fail(e.what());
            }
        }
        pos_ = at;
        fail("unknown connective '" + name + "'");
    }

    FormulaPtr wrap_unary(FormulaKind k, FormulaPtr f) {
        try {
            return k == FormulaKind::bang ? Formula::make_bang(std::move(f))
                                          : Formula::make_quest(std::move(f));
        } catch (const PolarityError& e) {
            fail(e.what());
        }
    }

    FormulaPtr literal(Polarity pol, std::size_t depth) {
        char open = pol == Polarity::opponent ? '(' : '{';
        char close = pol == Polarity::opponent ? ')' : '}';
        expect(open);
        std::vector<FormulaBranch> branches;
        std::uint64_t anon = 0; // bare-count labels _1.._k number across the literal
        if (peek() != close) {
            branch(branches, depth, anon);
            while (eat(',')) branch(branches, depth, anon);
        }
        expect(close);
        try {
            return pol == Polarity::opponent ? Formula::opponent_literal(std::move(branches))
                                             : Formula::player_literal(std::move(branches));
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    void branch(std::vector<FormulaBranch>& out, std::size_t depth, std::uint64_t& anon) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t n = integer();
            if (n == 0) fail("multiplicity must be positive");
            std::string base;
            bool counted = false;
            skip_ws();
            if (eat('*')) {
                base = label();
                counted = true;
            }
            expect(':');
            auto child = formula(depth + 1);
            for (std::uint64_t i = 1; i <= n; ++i) {
                std::string l = counted ? base + "#" + std::to_string(i)
                                        : "_" + std::to_string(++anon);
                out.push_back({std::move(l), child});
            }
            return;
        }
        std::string l = label();
        expect(':');
        out.push_back({std::move(l), formula(depth + 1)});
    }
};

} // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).formula_all(); }

Sequent parse_sequent(std::string_view text) { return Parser(text).sequent_all(); }

} // namespace polgame
