#include <doctest.h>

#include "scr/gen.hpp"
#include "scr/syntax.hpp"
#include "scr/verify.hpp"

using namespace scr;

TEST_CASE("parse builds the expected trees") {
    Formula f = parse_formula("p1 -> p2", Sig::SI);
    CHECK(f->op == Op::Imp);
    CHECK(f->a->atom == 1);
    CHECK(f->b->atom == 2);

    Formula g = parse_formula("[]p1 & ~p2", Sig::MD);
    CHECK(g->op == Op::And);
    CHECK(g->a->op == Op::Box);
    CHECK(g->b->op == Op::Neg);

    CHECK(parse_formula("p1 -< p2", Sig::BSI)->op == Op::Coimp);
    CHECK(parse_formula("[x]p1", Sig::MSI)->op == Op::BoxDot);
}

TEST_CASE("print_formula") {
    CHECK(print_formula(mk(Op::Imp, mk_atom(Sig::SI, 1), mk_atom(Sig::SI, 2))) == "p1 -> p2");
    CHECK(print_formula(mk(Op::Box, mk_atom(Sig::MD, 1))) == "[]p1");
    CHECK(print_formula(mk(Op::BoxDot, mk_atom(Sig::MSI, 1))) == "[x]p1");
}

TEST_CASE("precedence and associativity") {
    CHECK(print_formula(parse_formula("p1 & p2 | p3", Sig::SI)) == "p1 & p2 | p3");
    CHECK(print_formula(parse_formula("(p1 | p2) & p3", Sig::SI)) == "(p1 | p2) & p3");
    Formula r = parse_formula("p1 -> p2 -> p3", Sig::SI);
    CHECK(r->b->op == Op::Imp);
    Formula l = parse_formula("p1 -< p2 -< p3", Sig::BSI);
    CHECK(l->a->op == Op::Coimp);
    CHECK(print_formula(parse_formula("(p1 -> p2) -> p3", Sig::SI)) == "(p1 -> p2) -> p3");
}

TEST_CASE("modal sugar expands into primitives") {
    CHECK(print_formula(parse_formula("p1 -> p2", Sig::MD)) == "~p1 | p2");
    CHECK(print_formula(parse_formula("<>p1", Sig::MD)) == "~[]~p1");
    CHECK(print_formula(parse_formula("<F>p1", Sig::TEN)) == "~[F]~p1");
    CHECK(print_formula(parse_formula("[P]p1", Sig::TEN)) == "~<P>~p1");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_formula("p1 -< p2", Sig::SI), ParseError);
    CHECK_THROWS_AS(parse_formula("[]p1", Sig::SI), ParseError);
    CHECK_THROWS_AS(parse_formula("(p1 & p2", Sig::SI), ParseError);
    CHECK_THROWS_AS(parse_formula("p1 & p2)", Sig::SI), ParseError);
    CHECK_THROWS_AS(parse_formula("p1 $ p2", Sig::SI), ParseError);
    try {
        parse_formula("p1 & ", Sig::SI);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("rules parse with empty sides") {
    Rule r = parse_rule("/ p1 | (p1 -> false)", Sig::SI);
    CHECK(r.premises.empty());
    CHECK(r.conclusions.size() == 1);
    Rule s = parse_rule("p1, p2 / p1, p2", Sig::SI);
    CHECK(s.premises.size() == 2);
    CHECK(s.conclusions.size() == 2);
    CHECK(print_rule(s) == "p1, p2 / p1, p2");
    CHECK(parse_rule("p1 /", Sig::SI).conclusions.empty());
}

TEST_CASE("substitute") {
    Formula f = parse_formula("p1 -> p1", Sig::SI);
    Substitution s{{1, parse_formula("p2 & p3", Sig::SI)}};
    CHECK(print_formula(substitute(f, s)) == "p2 & p3 -> p2 & p3");
    CHECK(equal(substitute(f, {}), f));
    Formula g = parse_formula("[x]p1", Sig::MSI);
    CHECK(print_formula(substitute(g, {{1, mk_bot(Sig::MSI)}})) == "[x]false");
}

TEST_CASE("subformula closure") {
    auto c = subformula_closure(parse_rule("/ p1 | (p1 -> false)", Sig::SI));
    CHECK(c.size() == 4);
    CHECK(subformula_closure(parse_rule("/ p1", Sig::SI)).size() == 1);
    CHECK(subformula_closure(parse_rule("/ []p1", Sig::MD)).size() == 2);
    CHECK(is_subformula_closed(c));
    CHECK_FALSE(is_subformula_closed({parse_formula("p1 & p2", Sig::SI)}));
}

TEST_CASE("print then parse is the identity on random formulas") {
    Lcg rng(99);
    for (Sig s : {Sig::SI, Sig::BSI, Sig::MSI, Sig::MD, Sig::TEN})
        for (int i = 0; i < 300; ++i) {
            Formula f = random_formula(s, 4, 3, rng);
            Formula g = parse_formula(print_formula(f), s);
            CHECK(equal(f, g));
        }
}

TEST_CASE("substitution bounds subformula growth") {
    Lcg rng(5);
    for (int i = 0; i < 200; ++i) {
        Formula f = random_formula(Sig::SI, 3, 2, rng);
        Substitution s{{1, random_formula(Sig::SI, 2, 2, rng)}, {2, random_formula(Sig::SI, 2, 2, rng)}};
        std::size_t m = std::max(subformulas(s[1]).size(), subformulas(s[2]).size());
        CHECK(subformulas(substitute(f, s)).size() <= subformulas(f).size() * std::max<std::size_t>(m, 1));
    }
}
