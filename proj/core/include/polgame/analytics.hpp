#pragma once

#include "polgame/game.hpp"

namespace polgame {

/// gamma(n,m) = 0 iff n and m are both odd, 1 otherwise. The vanishing factor
/// in the profile convolutions: an interleaved path cannot end with both
/// components mid-move.
inline int gamma_factor(std::uint64_t n, std::uint64_t m) {
    return (n % 2 == 1 && m % 2 == 1) ? 0 : 1;
}

/// profile[O ox O']_n = sum_i C(floor(n/2), floor(i/2)) * gamma(i,n-i)
///                      * profile[O]_i * profile[O']_{n-i}.
/// The same convolution computes par of two player profiles (the formula only
/// sees depth parities). Trailing all-zero entries are dropped so the result
/// matches measured profiles exactly.
Profile profile_tensor(const Profile& p1, const Profile& p2);

/// profile[O oxr P]_0 = 1 and
/// profile[O oxr P]_{n+1} = sum_i C(floor(n/2), floor(i/2)) * gamma(i,n-i)
///                          * profile[O]_i * profile[P]_{n-i+1}.
Profile profile_oxr(const Profile& pO, const Profile& pP);

/// Closed-form tree profile of a multiplicative/additive formula, composed
/// from the rules above (arrow variants by left/right symmetry, the par
/// family by duality, literals by shift-and-sum). Rejects bang/quest.
Profile tree_profile(const FormulaPtr& f);

/// leaves(expand(!(n:{m:()}))) = n! * m^n.
BigInt bang_leaf_count(std::uint64_t n, std::uint64_t m);

/// Upper bound on edges(expand(!O)) from the backtracking reading of bang:
/// 2*eo*eo!*ep^eo when ep > 0, else exactly eo.
BigInt bang_edge_bound(std::uint64_t eo, const BigInt& ep);

/// Node/edge counts of the shared graph game, as a quadruple. The single
/// edge count of the classical size triple under-determines the cost
/// accounting, so edges are carried split by polarity; the triple is a
/// projection of this.
struct SizeQuad {
    BigInt nodes_o;
    BigInt nodes_p;
    BigInt edges_o;
    BigInt edges_p;
};

bool operator==(const SizeQuad& a, const SizeQuad& b);

/// Exact sizes of the graph-game product construction (see build_graph),
/// computed symbolically without building anything. For par of player games:
///   player nodes N1*N2, opponent nodes n1*N2 + N1*n2,
///   player edges Ep1*N2 + N1*Ep2, opponent edges Eo1*N2 + N1*Eo2;
/// the tensor family is the polarity dual; literals add one node and its
/// out-edges. The arrow forms subtract the states that pair a non-root node
/// with the pointed operand's root, which the rooted construction never
/// reaches. Rejects bang/quest.
SizeQuad graph_size(const FormulaPtr& f);

/// Per-depth node counts of the shared graph game (the profile convolutions
/// with the binomial coefficients removed). Rejects bang/quest.
Profile graph_profile(const FormulaPtr& f);

/// esize <= sum_i p_i * p_{i+1}: every edge ends one level below its source.
BigInt edge_bound_from_profile(const Profile& p);

std::string to_json(const SizeQuad& q);

} // namespace polgame
