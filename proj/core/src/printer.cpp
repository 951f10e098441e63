#include <sstream>

#include "polgame/formula.hpp"

namespace polgame {

namespace {

void print(std::ostream& os, const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            bool opp = f.kind() == FormulaKind::opp_lit;
            const auto& bs = f.branches();
            if (bs.empty()) {
                os << (opp ? "()" : "{}");
                return;
            }
            os << (opp ? "( " : "{ ");
            for (std::size_t i = 0; i < bs.size(); ++i) {
                if (i) os << ", ";
                os << bs[i].label << ':';
                print(os, *bs[i].child);
            }
            os << (opp ? " )" : " }");
            return;
        }
        case FormulaKind::dual:
        case FormulaKind::bang:
        case FormulaKind::quest: {
            os << (f.kind() == FormulaKind::dual  ? "dual"
                   : f.kind() == FormulaKind::bang ? "bang"
                                                   : "quest");
            os << '(';
            print(os, *f.left());
            os << ')';
            return;
        }
        default: {
            const char* name = nullptr;
            switch (f.kind()) {
                case FormulaKind::tensor: name = "ox"; break;
                case FormulaKind::oxr: name = "oxr"; break;
                case FormulaKind::oxl: name = "oxl"; break;
                case FormulaKind::par: name = "par"; break;
                case FormulaKind::otr: name = "otr"; break;
                case FormulaKind::otl: name = "otl"; break;
                default: name = "?"; break;
            }
            os << name << '(';
            print(os, *f.left());
            os << ',';
            print(os, *f.right());
            os << ')';
            return;
        }
    }
}

} // namespace

std::string print_formula(const FormulaPtr& f) {
    std::ostringstream os;
    print(os, *f);
    return os.str();
}

std::string print_sequent(const Sequent& s) {
    std::ostringstream os;
    print(os, *s.lhs);
    os << ' ' << turnstile(s.kind) << ' ';
    print(os, *s.rhs);
    return os.str();
}

} // namespace polgame
