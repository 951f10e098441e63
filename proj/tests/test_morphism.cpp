#include "doctest.h"
#include "helpers.hpp"
#include "oracle_enum.hpp"

#include "polgame/eval_linear.hpp"
#include "polgame/morphism.hpp"

using namespace polgame;
using namespace polgame::testing;

namespace {

// deterministic pick of a normal proof, or nullptr if unprovable
TermPtr some_proof(const GamePtr& l, const GamePtr& r, SequentKind k, std::uint64_t salt) {
    auto all = enumerate_proofs(l, r, k);
    if (all.empty()) return nullptr;
    return all[salt % all.size()];
}

} // namespace

TEST_CASE("term grammar round-trips") {
    const char* samples[] = {
        "( )",
        "{ }",
        "id",
        "( a -> >c . ( ) )",
        "{ a -> <b . { }, b#2 -> >x . ( ) }",
        "( a -> >c . ( ) ) ; <b . { e -> >a . ( ) }",
        "( x -> ( ( ) ; >a . ( ) ) )",
    };
    for (const char* s : samples) {
        auto t = parse_term(s);
        CHECK(struct_equal(parse_term(print_term(t)), t));
    }
    // grouping vs tuple disambiguation
    CHECK(parse_term("( id )")->kind() == TermKind::identity);
    CHECK(parse_term("( id -> id )")->kind() == TermKind::tuple);
    CHECK(parse_term("( ( ) ; ( ) )")->kind() == TermKind::compose);
}

TEST_CASE("typecheck accepts the rule instances") {
    CHECK_NOTHROW(typecheck(parse_term("( )"), parse_sequent("() |-o ()")));
    CHECK_NOTHROW(typecheck(parse_term("{ }"), parse_sequent("{} |-p {}")));
    // the drawn opponent-to-opponent map
    auto s = parse_sequent("( a:{}, b:{} ) |-o ( a:{ c:(), d:() }, b:{ e:(), f:() } )");
    CHECK_NOTHROW(typecheck(parse_term("( a -> >c . ( ), b -> >e . ( ) )"), s));
    // the other three listed maps
    CHECK_NOTHROW(typecheck(parse_term("( a -> >d . ( ), b -> >f . ( ) )"), s));
    CHECK_NOTHROW(typecheck(parse_term("( a -> <a . { }, b -> <b . { } )"), s));
    CHECK_NOTHROW(typecheck(parse_term("( a -> >c . ( ), b -> <a . { } )"), s));
}

TEST_CASE("typecheck errors cite the failing rule and path") {
    auto s = parse_sequent("( a:{}, b:{} ) |-o ( a:{ c:(), d:() }, b:{ e:(), f:() } )");
    try {
        typecheck(parse_term("( a -> >zzz . ( ), b -> >e . ( ) )"), s);
        FAIL("expected a type error");
    } catch (const TypeError& e) {
        CHECK(e.rule == "injection");
        CHECK(e.path == "a");
    }
    try {
        typecheck(parse_term("( a -> >c . ( ) )"), s);
        FAIL("expected a type error");
    } catch (const TypeError& e) {
        CHECK(e.rule == "tuple");
    }
    CHECK_THROWS_AS(typecheck(parse_term("id"), parse_sequent("() |-o ( a:{} )")), TypeError);
    CHECK_NOTHROW(typecheck(parse_term("id"), parse_sequent("( a:{} ) |-o ( a:{} )")));
}

TEST_CASE("identity_of produces the inductive normal identity") {
    CHECK(print_term(identity_of(Game::unit())) == "( )");
    CHECK(print_term(identity_of(Game::zero())) == "{ }");
    CHECK(print_term(identity_of(G("( a:{} )"))) == "( a -> <a . { } )");
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_game(4, 2, seed % 2 ? Polarity::player : Polarity::opponent, seed * 5);
        auto id = identity_of(g);
        CHECK(is_normal(id));
        auto kind = g->polarity() == Polarity::opponent ? SequentKind::opponent
                                                        : SequentKind::player;
        CHECK_NOTHROW(typecheck(id, make_sequent(kind, to_formula(g), to_formula(g))));
    }
}

TEST_CASE("the worked composition normalizes to >a . ( )") {
    auto t = parse_term(
        "( a -> >c . ( ), b -> >e . ( ) ) ; <b . { e -> >a . ( ), f -> >b . ( ) }");
    auto s = parse_sequent("( a:{}, b:{} ) |- { a:(), b:() }");
    auto typed = typecheck(t, s);
    auto nf = normalize(typed);
    CHECK(print_term(nf) == ">a . ( )");
    CHECK(is_normal(nf));
    // both orders agree
    CHECK(struct_equal(normalize_term(t, RewriteOrder::outermost_leftmost), nf));
}

TEST_CASE("neutrality of the identity under normalization") {
    auto s = parse_sequent("( a:{}, b:{} ) |-o ( a:{ c:(), d:() }, b:{ e:(), f:() } )");
    auto f = typecheck(parse_term("( a -> >c . ( ), b -> >e . ( ) )"), s);
    auto id_l = typecheck(Term::make_identity(),
                          make_sequent(SequentKind::opponent, s.lhs, s.lhs));
    auto id_r = typecheck(Term::make_identity(),
                          make_sequent(SequentKind::opponent, s.rhs, s.rhs));
    auto nf = normalize(f);
    CHECK(struct_equal(normalize(compose_typed(f, id_r)), nf));
    CHECK(struct_equal(normalize(compose_typed(id_l, f)), nf));
}

namespace {

struct ComposablePair {
    TypedTerm f, g;
};

// random composable opponent proofs via enumeration over small games
std::optional<ComposablePair> random_pair(std::uint64_t seed) {
    auto O1 = random_game(3, 2, Polarity::opponent, seed * 3 + 0);
    auto O2 = random_game(3, 2, Polarity::opponent, seed * 3 + 1);
    auto O3 = random_game(3, 2, Polarity::opponent, seed * 3 + 2);
    auto f = some_proof(O1, O2, SequentKind::opponent, seed);
    auto g = some_proof(O2, O3, SequentKind::opponent, seed / 3);
    if (!f || !g) return std::nullopt;
    auto s12 = make_sequent(SequentKind::opponent, to_formula(O1), to_formula(O2));
    auto s23 = make_sequent(SequentKind::opponent, to_formula(O2), to_formula(O3));
    return ComposablePair{typecheck(f, s12), typecheck(g, s23)};
}

} // namespace

TEST_CASE("subject reduction and confluence on random composites") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 120 && seed < 3000; ++seed) {
        auto pair = random_pair(seed);
        if (!pair) continue;
        ++done;
        auto composite = compose_typed(pair->f, pair->g);
        auto nf = normalize(composite);
        CHECK(is_normal(nf));
        // subject reduction: the normal form derives the same sequent
        CHECK_NOTHROW(typecheck(nf, composite.sequent));
        // confluence: a different redex order reaches the same normal form
        CHECK(struct_equal(normalize_term(composite.term, RewriteOrder::outermost_leftmost), nf));
    }
    CHECK(done == 120);
}

TEST_CASE("associativity of composition after normalization") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 60 && seed < 6000; ++seed) {
        auto O1 = random_game(3, 2, Polarity::opponent, seed * 7 + 0);
        auto O2 = random_game(2, 2, Polarity::opponent, seed * 7 + 1);
        auto O3 = random_game(2, 2, Polarity::opponent, seed * 7 + 2);
        auto O4 = random_game(3, 2, Polarity::opponent, seed * 7 + 3);
        auto f = some_proof(O1, O2, SequentKind::opponent, seed);
        auto g = some_proof(O2, O3, SequentKind::opponent, seed + 1);
        auto h = some_proof(O3, O4, SequentKind::opponent, seed + 2);
        if (!f || !g || !h) continue;
        ++done;
        auto s12 = make_sequent(SequentKind::opponent, to_formula(O1), to_formula(O2));
        auto s23 = make_sequent(SequentKind::opponent, to_formula(O2), to_formula(O3));
        auto s34 = make_sequent(SequentKind::opponent, to_formula(O3), to_formula(O4));
        auto tf = typecheck(f, s12);
        auto tg = typecheck(g, s23);
        auto th = typecheck(h, s34);
        auto left = normalize(compose_typed(compose_typed(tf, tg), th));
        auto right = normalize(compose_typed(tf, compose_typed(tg, th)));
        CHECK(struct_equal(left, right));
    }
    CHECK(done == 60);
}

TEST_CASE("hom_formula of the three sequent kinds") {
    auto so = parse_sequent("( a:{} ) |-o ()");
    auto ho = hom_formula(so);
    CHECK(ho->kind() == FormulaKind::otr);
    CHECK(ho->left()->kind() == FormulaKind::dual);
    CHECK(polarity_of(ho) == Polarity::opponent);

    auto sm = parse_sequent("( a:{} ) |- { b:() }");
    auto hm = hom_formula(sm);
    CHECK(hm->right()->kind() == FormulaKind::opp_lit);
    CHECK(hm->right()->branches().size() == 1);
    CHECK(hm->right()->branches()[0].label == "*");

    auto sp = parse_sequent("{ a:() } |-p { b:() }");
    auto hp = hom_formula(sp);
    // unsimplified double dual on the left operand
    CHECK(hp->left()->kind() == FormulaKind::dual);
    CHECK(hp->left()->left()->kind() == FormulaKind::dual);
    for (const Sequent& s : {so, sm, sp})
        CHECK(provable(s) == has_strategy(expand(hom_formula(s))));
}

TEST_CASE("proof/strategy translation on the worked opponent map") {
    auto s = parse_sequent("( a:{}, b:{} ) |-o ( a:{ c:(), d:() }, b:{ e:(), f:() } )");
    auto hom = expand(hom_formula(s));
    auto w = extract_strategy(hom);
    REQUIRE(w.has_value());
    auto proof = strategy_to_proof(*w, s);
    CHECK(is_normal(proof));
    auto typed = typecheck(proof, s);
    CHECK(struct_equal(proof_to_strategy(typed), *w));
}

TEST_CASE("translation round-trip on random provable sequents of all kinds") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 150 && seed < 4000; ++seed) {
        Sequent s = [&] {
            switch (seed % 3) {
                case 0:
                    return make_sequent(SequentKind::opponent,
                                        to_formula(random_game(3, 2, Polarity::opponent, seed)),
                                        to_formula(random_game(3, 2, Polarity::opponent, ~seed)));
                case 1:
                    return make_sequent(SequentKind::mixed,
                                        to_formula(random_game(3, 2, Polarity::opponent, seed)),
                                        to_formula(random_game(3, 2, Polarity::player, ~seed)));
                default:
                    return make_sequent(SequentKind::player,
                                        to_formula(random_game(3, 2, Polarity::player, seed)),
                                        to_formula(random_game(3, 2, Polarity::player, ~seed)));
            }
        }();
        auto hom = expand(hom_formula(s));
        auto w = extract_strategy(hom);
        if (!w) continue;
        ++done;
        auto proof = strategy_to_proof(*w, s);
        auto typed = typecheck(proof, s);
        CHECK(struct_equal(proof_to_strategy(typed), *w));
        CHECK(is_normal(proof));
    }
    CHECK(done == 150);
}

TEST_CASE("term printing round-trips over enumerated proofs") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 60 && seed < 600; ++seed) {
        auto L = random_game(3, 2, Polarity::opponent, seed * 37);
        auto R = random_game(3, 2, Polarity::opponent, seed * 37 + 1);
        auto proofs = enumerate_proofs(L, R, SequentKind::opponent);
        if (proofs.empty()) continue;
        ++done;
        for (std::size_t i = 0; i < proofs.size() && i < 5; ++i)
            CHECK(struct_equal(parse_term(print_term(proofs[i])), proofs[i]));
    }
    CHECK(done == 60);
}

TEST_CASE("strategy counting equals exhaustive proof enumeration") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto L = random_game(3, 2, Polarity::opponent, seed * 13);
        auto R = random_game(3, 2, Polarity::opponent, seed * 13 + 1);
        auto s = make_sequent(SequentKind::opponent, to_formula(L), to_formula(R));
        auto proofs = enumerate_proofs(L, R, SequentKind::opponent);
        CHECK(BigInt(proofs.size()) == count_strategies(expand(hom_formula(s))));
        // spot-check that enumerated proofs typecheck and map to distinct
        // strategies
        if (!proofs.empty() && seed % 17 == 0) {
            for (const auto& p : proofs) CHECK_NOTHROW(typecheck(p, s));
        }
    }
}

TEST_CASE("proof counts match hom strategy counts for mixed and player sequents too") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto O = random_game(3, 2, Polarity::opponent, seed * 23 + 1);
        auto P = random_game(3, 2, Polarity::player, seed * 23 + 2);
        auto Q = random_game(3, 2, Polarity::player, seed * 23 + 3);
        auto sm = make_sequent(SequentKind::mixed, to_formula(O), to_formula(P));
        CHECK(BigInt(enumerate_proofs(O, P, SequentKind::mixed).size()) ==
              count_strategies(expand(hom_formula(sm))));
        auto sp = make_sequent(SequentKind::player, to_formula(P), to_formula(Q));
        CHECK(BigInt(enumerate_proofs(P, Q, SequentKind::player).size()) ==
              count_strategies(expand(hom_formula(sp))));
    }
}

TEST_CASE("composite terms whose cut is stuck are rejected as ill-typed") {
    auto bad = parse_term("( a -> >c . ( ) ) ; <zzz . { }");
    CHECK_THROWS_AS(typecheck(bad, parse_sequent("( a:{ c:() } ) |- { x:() }")), TypeError);
}
