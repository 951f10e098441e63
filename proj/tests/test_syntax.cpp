#include "doctest.h"
#include "helpers.hpp"

#include "polgame/formula.hpp"

using namespace polgame;
using polgame::testing::F;

TEST_CASE("empty games parse") {
    auto one = F("()");
    CHECK(one->kind() == FormulaKind::opp_lit);
    CHECK(one->branches().empty());
    CHECK(polarity_of(one) == Polarity::opponent);

    auto zero = F("{}");
    CHECK(zero->kind() == FormulaKind::play_lit);
    CHECK(zero->branches().empty());
    CHECK(polarity_of(zero) == Polarity::player);
}

TEST_CASE("multiplicity sugar expands to indexed labels") {
    auto f = F("( 2 : { 2 : () } )");
    REQUIRE(f->branches().size() == 2);
    CHECK(f->branches()[0].label == "_1");
    CHECK(f->branches()[1].label == "_2");
    for (const auto& b : f->branches()) {
        REQUIRE(b.child->branches().size() == 2);
        CHECK(b.child->branches()[0].label == "_1");
        CHECK(b.child->branches()[1].label == "_2");
        CHECK(struct_equal(b.child->branches()[0].child, Formula::one()));
    }
    CHECK(struct_equal(f->branches()[0].child, f->branches()[1].child));

    auto g = F("( 3 * a : {} )");
    REQUIRE(g->branches().size() == 3);
    CHECK(g->branches()[0].label == "a#1");
    CHECK(g->branches()[2].label == "a#3");
}

TEST_CASE("polarity mismatch names the offending connective") {
    CHECK_THROWS_WITH_AS(F("ox((),{})"), doctest::Contains("ox"), ParseError);
    CHECK_THROWS_AS(F("par((),())"), ParseError);
    CHECK_THROWS_AS(F("bang({})"), ParseError);
    CHECK_THROWS_AS(F("( a:() )"), ParseError); // opponent branch must be player
}

TEST_CASE("duplicate labels are rejected, also after multiplicity expansion") {
    CHECK_THROWS_AS(F("( a:{}, a:{} )"), ParseError);
    CHECK_THROWS_AS(F("( _1:{}, 2:{} )"), ParseError);
    CHECK_THROWS_AS(F("( 2*x:{}, x#2:{} )"), ParseError);
}

TEST_CASE("lexical errors carry a position") {
    try {
        F("( a:() , ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("connective syntax") {
    CHECK(F("ox((),())")->kind() == FormulaKind::tensor);
    CHECK(F("oxr((),{})")->kind() == FormulaKind::oxr);
    CHECK(F("oxl({},())")->kind() == FormulaKind::oxl);
    CHECK(F("par({},{})")->kind() == FormulaKind::par);
    CHECK(F("otr({},())")->kind() == FormulaKind::otr);
    CHECK(F("otl((),{})")->kind() == FormulaKind::otl);
    CHECK(F("dual(())")->kind() == FormulaKind::dual);
    CHECK(struct_equal(F("!()"), F("bang(())")));
    CHECK(struct_equal(F("?{}"), F("quest({})")));
}

TEST_CASE("polarity_of on compounds") {
    CHECK(polarity_of(F("oxr(( a:{} ),{ b:() })")) == Polarity::player);
    CHECK(polarity_of(F("dual({})")) == Polarity::opponent);
    CHECK(polarity_of(F("bang(())")) == Polarity::opponent);
    CHECK(polarity_of(F("dual(())")) == Polarity::player);
}

TEST_CASE("sequent parsing dispatches on the turnstile") {
    auto s1 = parse_sequent("() |-o ()");
    CHECK(s1.kind == SequentKind::opponent);
    auto s2 = parse_sequent("{} |-p {}");
    CHECK(s2.kind == SequentKind::player);
    auto s3 = parse_sequent("( a:{} ) |- { b:() }");
    CHECK(s3.kind == SequentKind::mixed);
    // the kind marker is only taken when it cannot start a formula name, so
    // an unspaced mixed turnstile still works in front of a connective
    auto s4 = parse_sequent("() |-par({},{})");
    CHECK(s4.kind == SequentKind::mixed);
    CHECK(s4.rhs->kind() == FormulaKind::par);
}

TEST_CASE("sequent polarity compatibility") {
    CHECK_THROWS_AS(parse_sequent("{} |-o {}"), ParseError);
    CHECK_THROWS_AS(parse_sequent("() |- ()"), ParseError);
    CHECK_THROWS_WITH_AS(make_sequent(SequentKind::mixed, Formula::zero(), Formula::one()),
                         doctest::Contains("no morphisms from player to opponent"),
                         PolarityError);
}

TEST_CASE("printer matches the documented layout") {
    CHECK(print_formula(F("()")) == "()");
    CHECK(print_formula(F("dual(())")) == "dual(())");
    CHECK(print_formula(F("( 2 : { 2 : () } )")) ==
          "( _1:{ _1:(), _2:() }, _2:{ _1:(), _2:() } )");
    CHECK(print_sequent(parse_sequent("()|-o()")) == "() |-o ()");
}

TEST_CASE("round-trip: parse(print(f)) == f on random formulas") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto f = random_formula(4, 3, seed % 2 ? Polarity::player : Polarity::opponent, seed);
        CAPTURE(print_formula(f));
        CHECK(struct_equal(parse_formula(print_formula(f)), f));
    }
}

TEST_CASE("sequent printing round-trips") {
    for (const char* s : {"() |-o ()", "{} |-p {}", "( a:{} ) |- { b:() }",
                          "ox((),()) |-o bang(())", "dual(( a:{} )) |-p quest({})"}) {
        auto seq = parse_sequent(s);
        auto back = parse_sequent(print_sequent(seq));
        CHECK(back.kind == seq.kind);
        CHECK(struct_equal(back.lhs, seq.lhs));
        CHECK(struct_equal(back.rhs, seq.rhs));
    }
}

TEST_CASE("deep nesting is rejected with a parse error, not a crash") {
    std::string deep;
    for (int i = 0; i < 6000; ++i) deep += "bang(";
    deep += "()";
    for (int i = 0; i < 6000; ++i) deep += ")";
    CHECK_THROWS_AS(F(deep), ParseError);
}

TEST_CASE("ast_size counts every node") {
    CHECK(ast_size(F("()")) == 1);
    CHECK(ast_size(F("ox((),())")) == 3);
    CHECK(ast_size(F("( a:{}, b:{ c:() } )")) == 4);
}
