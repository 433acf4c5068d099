#include <gtest/gtest.h>

#include <thread>

#include "scl/errors.hpp"
#include "scl/syntax.hpp"
#include "support.hpp"

using namespace scl;

namespace {

Term a() { return Term::atom("a"); }
Term b() { return Term::atom("b"); }

TEST(Parse, Constant) { EXPECT_EQ(parse("T"), Term::t()); }

TEST(Parse, NestedConditional) {
    EXPECT_EQ(parse("F <| b |> (T <| a |> F)"), Term::cond(Term::f(), b(), Term::cond(Term::t(), a(), Term::f())));
}

TEST(Parse, NegatedConjunction) {
    EXPECT_EQ(parse("!(!a && !b)"), Term::negate(Term::conj(Term::negate(a()), Term::negate(b()))));
}

TEST(Parse, Precedence) {
    // && binds tighter than ||, which binds tighter than ^^ and <->.
    EXPECT_EQ(parse("a || b && a"), Term::disj(a(), Term::conj(b(), a())));
    EXPECT_EQ(parse("a <-> b ^^ a"), Term::liff(a(), Term::lxor(b(), a())));
    EXPECT_EQ(parse("a && b ~& a"), Term::conj(a(), Term::lnand(b(), a())));
    EXPECT_EQ(parse("!a && b"), Term::conj(Term::negate(a()), b()));
    EXPECT_EQ(parse("a <| b || a |> b"), Term::cond(a(), Term::disj(b(), a()), b()));
}

TEST(Parse, LeftAssociative) {
    EXPECT_EQ(parse("a && b && a"), Term::conj(Term::conj(a(), b()), a()));
    EXPECT_EQ(parse("a ~& b ~| a"), Term::lnor(Term::lnand(a(), b()), a()));
}

TEST(Parse, UnicodeAliases) {
    EXPECT_EQ(parse("¬a ∧ᵒ b"), parse("!a && b"));
    EXPECT_EQ(parse("a ∨ b"), parse("a || b"));
    EXPECT_EQ(parse("a ↔ᵒ b ⊕ᵒ a"), parse("a <-> b ^^ a"));
    EXPECT_EQ(parse("T ◁ a ▷ F"), parse("T <| a |> F"));
    EXPECT_EQ(parse("a′"), parse("a ~& T"));
}

TEST(Parse, Prime) {
    EXPECT_EQ(parse("a'"), Term::lnand(a(), Term::t()));
    EXPECT_EQ(parse("(a ~& b)''"), Term::lnand(Term::lnand(Term::lnand(a(), b()), Term::t()), Term::t()));
}

TEST(Parse, Variables) {
    Term t = parse("X && Y1");
    EXPECT_FALSE(t.is_closed());
    EXPECT_EQ(t, Term::conj(Term::var("X"), Term::var("Y1")));
}

TEST(Parse, ErrorCarriesPosition) {
    try {
        parse("a &&\n  (b ||)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 8u);
        EXPECT_EQ(e.found(), "')'");
        EXPECT_FALSE(e.expected().empty());
    }
}

TEST(Parse, TrailingInput) { EXPECT_THROW(parse("a b"), ParseError); }
TEST(Parse, Empty) { EXPECT_THROW(parse(""), ParseError); }
TEST(Parse, ConditionalIsNonAssociative) { EXPECT_THROW(parse("a <| b |> a <| b |> a"), ParseError); }

TEST(Parse, AtomCase) {
    EXPECT_THROW(parse("aB"), AtomCaseError);
    try {
        parse("a && fooBar");
    } catch (const AtomCaseError& e) {
        EXPECT_EQ(e.identifier(), "fooBar");
        EXPECT_EQ(e.column(), 6u);
    }
}

TEST(Parse, DepthLimit) {
    std::string deep(20'000, '(');
    deep += "a" + std::string(20'000, ')');
    EXPECT_THROW(parse(deep), DepthLimitError);
    std::string bangs(20'000, '!');
    EXPECT_THROW(parse(bangs + "a"), DepthLimitError);
    EXPECT_NO_THROW(parse(std::string(50, '(') + "a" + std::string(50, ')')));
}

TEST(Print, Unicode) { EXPECT_EQ(print(Term::cond(Term::t(), a(), Term::f()), Style::Unicode), "T ◁ a ▷ F"); }
TEST(Print, Ascii) { EXPECT_EQ(print(Term::t(), Style::Ascii), "T"); }

TEST(Print, Prime) {
    Term t = Term::lnand(a(), Term::t());
    EXPECT_EQ(print(t), "a ~& T");
    EXPECT_EQ(print(t, PrintOptions{Style::Ascii, true}), "a'");
    EXPECT_EQ(print(t, PrintOptions{Style::Unicode, true}), "a′");
}

TEST(Print, NestedConditionalParenthesized) {
    EXPECT_EQ(print(parse("F <| b |> (T <| a |> F)")), "F <| b |> (T <| a |> F)");
}

TEST(Print, MinimalParentheses) {
    EXPECT_EQ(print(parse("(a && b) || (!a && b)")), "a && b || !a && b");
    EXPECT_EQ(print(parse("a && (b && a)")), "a && (b && a)");
    EXPECT_EQ(print(parse("!(a && b)")), "!(a && b)");
}

TEST(Print, Json) {
    EXPECT_EQ(print(parse("T <| a |> !X"), Style::Json),
              R"({"cond":{"then":{"const":"T"},"if":{"atom":"a"},"else":{"not":{"var":"X"}}}})");
}

TEST(Dual, Constants) {
    EXPECT_EQ(dual(Term::t()), Term::f());
    EXPECT_EQ(dual(Term::u()), Term::u());
}

TEST(Dual, Conditional) {
    Term t = Term::cond(Term::f(), b(), Term::cond(Term::t(), a(), Term::f()));
    EXPECT_EQ(dual(t), Term::cond(Term::cond(Term::t(), a(), Term::f()), b(), Term::t()));
}

TEST(Dual, AtomsFixed) { EXPECT_EQ(dual(a()), a()); }

TEST(Dual, SwapsConnectives) {
    EXPECT_EQ(dual(parse("a && b")), parse("a || b"));
    EXPECT_EQ(dual(parse("a <-> b")), parse("a ^^ b"));
    EXPECT_EQ(dual(parse("a ~& b")), parse("a ~| b"));
    EXPECT_EQ(dual(parse("!X")), parse("!X"));
}

TEST(AtomsOf, FirstOccurrence) {
    EXPECT_EQ(atoms_of(parse("F <| b |> (T <| a |> F)")), (std::vector<Atom>{Atom("b"), Atom("a")}));
    EXPECT_TRUE(atoms_of(Term::t()).empty());
    EXPECT_EQ(atoms_of(parse("a && (b && a)")), (std::vector<Atom>{Atom("a"), Atom("b")}));
}

TEST(Properties, RoundTrip) {
    test::Gen g(11);
    auto as = test::atoms(4);
    for (int i = 0; i < 1000; ++i) {
        Term t = g.term(test::Signature::Full, as, 7, true);
        ASSERT_EQ(parse(print(t)), t) << print(t);
        ASSERT_EQ(parse(print(t, Style::Unicode)), t) << print(t);
        ASSERT_EQ(parse(print(t, PrintOptions{Style::Ascii, true})), t) << print(t);
    }
}

TEST(Properties, DualInvolutionAndHomomorphism) {
    test::Gen g(12);
    auto as = test::atoms(3);
    for (int i = 0; i < 1000; ++i) {
        Term p = g.term(test::Signature::Full, as, 6, true);
        Term q = g.term(test::Signature::Full, as, 6, true);
        ASSERT_EQ(dual(dual(p)), p);
        ASSERT_EQ(dual(Term::conj(p, q)), Term::disj(dual(p), dual(q)));
        ASSERT_EQ(dual(Term::disj(p, q)), Term::conj(dual(p), dual(q)));
    }
}

TEST(Properties, ConcurrentUse) {
    Term shared = parse("(a && b) <-> (c ~& !a)");
    std::vector<std::thread> workers;
    std::vector<int> ok(4, 0);
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            for (int i = 0; i < 200; ++i) ok[w] += parse(print(dual(dual(shared)))) == shared;
        });
    }
    for (auto& t : workers) t.join();
    for (int v : ok) EXPECT_EQ(v, 200);
}

}  // namespace
