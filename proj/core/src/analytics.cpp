#include "polgame/analytics.hpp"

#include <sstream>

namespace polgame {

namespace {

const BigInt& at(const Profile& p, std::size_t i) {
    static const BigInt zero = 0;
    return i < p.size() ? p[i] : zero;
}

Profile strip_trailing_zeros(Profile p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Shared kernel of the two profile convolutions. `shift` = 0 gives the tensor
// rule; `shift` = 1 the arrow rule, where `pb` is the pointed operand whose
// root is replaced by the compound root. `binom` turns the interleaving
// coefficient on (tree profiles) or off (graph profiles).
Profile convolve(const Profile& pa, const Profile& pb, int shift, bool binom) {
    if (pa.empty() || pb.empty()) return {};
    std::size_t len = pa.size() + pb.size() - 1; // indices 0 .. len-1
    Profile out;
    out.reserve(len);
    if (shift == 1) out.emplace_back(1);
    for (std::size_t n = 0; n + shift < len; ++n) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (!gamma_factor(i, n - i)) continue;
            const BigInt& a = at(pa, i);
            const BigInt& b = at(pb, n - i + shift);
            if (a == 0 || b == 0) continue;
            if (binom)
                acc += binomial(n / 2, i / 2) * a * b;
            else
                acc += a * b;
        }
        out.push_back(std::move(acc));
    }
    return strip_trailing_zeros(std::move(out));
}

} // namespace

Profile profile_tensor(const Profile& p1, const Profile& p2) {
    return convolve(p1, p2, 0, true);
}

Profile profile_oxr(const Profile& pO, const Profile& pP) {
    return convolve(pO, pP, 1, true);
}

namespace {

Profile formula_profile(const FormulaPtr& f, bool binom) {
    switch (f->kind()) {
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            Profile out{1};
            for (const auto& b : f->branches()) {
                Profile pc = formula_profile(b.child, binom);
                if (out.size() < pc.size() + 1) out.resize(pc.size() + 1, 0);
                for (std::size_t i = 0; i < pc.size(); ++i) out[i + 1] += pc[i];
            }
            return out;
        }
        case FormulaKind::tensor:
        case FormulaKind::par:
            return convolve(formula_profile(f->left(), binom),
                            formula_profile(f->right(), binom), 0, binom);
        case FormulaKind::oxr: // pointed operand on the right
        case FormulaKind::otr:
            return convolve(formula_profile(f->left(), binom),
                            formula_profile(f->right(), binom), 1, binom);
        case FormulaKind::oxl: // pointed operand on the left
        case FormulaKind::otl:
            return convolve(formula_profile(f->right(), binom),
                            formula_profile(f->left(), binom), 1, binom);
        case FormulaKind::dual:
            return formula_profile(f->left(), binom);
        case FormulaKind::bang:
        case FormulaKind::quest:
            throw UnsupportedConnectiveError(
                "no closed-form profile for exponentials; expand instead");
    }
    throw Error("unreachable formula kind");
}

} // namespace

Profile tree_profile(const FormulaPtr& f) { return formula_profile(f, true); }

Profile graph_profile(const FormulaPtr& f) { return formula_profile(f, false); }

BigInt bang_leaf_count(std::uint64_t n, std::uint64_t m) {
    return big_factorial(n) * big_pow(BigInt(m), n);
}

BigInt bang_edge_bound(std::uint64_t eo, const BigInt& ep) {
    if (ep == 0) return BigInt(eo);
    return 2 * BigInt(eo) * big_factorial(eo) * big_pow(ep, eo);
}

bool operator==(const SizeQuad& a, const SizeQuad& b) {
    return a.nodes_o == b.nodes_o && a.nodes_p == b.nodes_p && a.edges_o == b.edges_o &&
           a.edges_p == b.edges_p;
}

namespace {

// (o, p, eo, ep) plus the root arity, which the arrow corrections need.
struct Quint {
    BigInt o, p, eo, ep, root_arity;
};

Quint quint(const FormulaPtr& f) {
    switch (f->kind()) {
        case FormulaKind::opp_lit:
        case FormulaKind::play_lit: {
            Quint q{0, 0, 0, 0, BigInt(f->branches().size())};
            for (const auto& b : f->branches()) {
                Quint c = quint(b.child);
                q.o += c.o;
                q.p += c.p;
                q.eo += c.eo;
                q.ep += c.ep;
            }
            if (f->kind() == FormulaKind::opp_lit) {
                q.o += 1;
                q.eo += q.root_arity;
            } else {
                q.p += 1;
                q.ep += q.root_arity;
            }
            return q;
        }
        case FormulaKind::dual: {
            Quint c = quint(f->left());
            return {c.p, c.o, c.ep, c.eo, c.root_arity};
        }
        case FormulaKind::bang:
        case FormulaKind::quest:
            throw UnsupportedConnectiveError("no closed-form graph size for exponentials");
        default: break;
    }
    Quint a = quint(f->left());
    Quint b = quint(f->right());
    switch (f->kind()) {
        case FormulaKind::tensor:
            return {a.o * b.o, a.p * b.o + a.o * b.p, a.eo * b.o + a.o * b.eo,
                    a.ep * b.o + a.o * b.ep, a.root_arity + b.root_arity};
        case FormulaKind::par:
            return {a.o * b.p + a.p * b.o, a.p * b.p, a.eo * b.p + a.p * b.eo,
                    a.ep * b.p + a.p * b.ep, a.root_arity + b.root_arity};
        case FormulaKind::oxr: // phantoms: (x != root of O) paired with P's root
            return {a.o * b.o, a.p * b.o + a.o * b.p - (a.o - 1), a.eo * b.o + a.o * b.eo,
                    a.ep * b.o + a.o * b.ep - b.root_arity * (a.o - 1), b.root_arity};
        case FormulaKind::oxl:
            return {a.o * b.o, a.p * b.o + a.o * b.p - (b.o - 1), a.eo * b.o + a.o * b.eo,
                    a.ep * b.o + a.o * b.ep - a.root_arity * (b.o - 1), a.root_arity};
        case FormulaKind::otr:
            return {a.o * b.p + a.p * b.o - (a.p - 1), a.p * b.p,
                    a.eo * b.p + a.p * b.eo - b.root_arity * (a.p - 1),
                    a.ep * b.p + a.p * b.ep, b.root_arity};
        case FormulaKind::otl:
            return {a.o * b.p + a.p * b.o - (b.p - 1), a.p * b.p,
                    a.eo * b.p + a.p * b.eo - a.root_arity * (b.p - 1),
                    a.ep * b.p + a.p * b.ep, a.root_arity};
        default:
            throw Error("unreachable formula kind");
    }
}

} // namespace

SizeQuad graph_size(const FormulaPtr& f) {
    Quint q = quint(f);
    return {q.o, q.p, q.eo, q.ep};
}

BigInt edge_bound_from_profile(const Profile& p) {
    BigInt r = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) r += p[i] * p[i + 1];
    return r;
}

std::string to_json(const SizeQuad& q) {
    std::ostringstream os;
    os << "{\"nodes_o\":" << q.nodes_o << ",\"nodes_p\":" << q.nodes_p
       << ",\"edges_o\":" << q.edges_o << ",\"edges_p\":" << q.edges_p << "}";
    return os.str();
}

} // namespace polgame
