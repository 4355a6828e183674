#include <doctest.h>

#include "alw/formula.hpp"

using namespace alw;

TEST_CASE("precedence and associativity from the grammar") {
  // all brackets redundant here
  FormulaPtr f = parse_formula("A * B^ -> C -> D * F");
  CHECK(f->kind == FKind::Lolly);
  CHECK(f->left->kind == FKind::Tensor);
  CHECK(f->left->right->kind == FKind::Neg);
  CHECK(f->right->kind == FKind::Lolly);
  CHECK(f->right->right->kind == FKind::Tensor);
  CHECK(to_string(f) == "A * B^ -> C -> D * F");

  // all brackets required here
  FormulaPtr g = parse_formula("(((A -> B) -> C) * D)^");
  CHECK(g->kind == FKind::Neg);
  CHECK(g->left->kind == FKind::Tensor);
  CHECK(g->left->left->kind == FKind::Lolly);
  CHECK(to_string(g) == "(((A -> B) -> C) * D)^");

  CHECK(parse_formula("bot")->kind == FKind::Bottom);
  CHECK(equal(parse_formula("A -> B -> C"),
              f_lolly(f_atom("A"), f_lolly(f_atom("B"), f_atom("C")))));
  CHECK(equal(parse_formula("A * B * C"),
              f_tensor(f_tensor(f_atom("A"), f_atom("B")), f_atom("C"))));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula("((A -> B) -> C) * D)^"), ParseError);  // unbalanced
  CHECK_THROWS_AS(parse_formula("A & B | C"), ParseError);  // mixing needs parens
  CHECK_THROWS_AS(parse_formula("A & B & C"), ParseError);  // non-associative
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("A -"), ParseError);
  CHECK_THROWS_AS(parse_formula("A B"), ParseError);
  CHECK_NOTHROW(parse_formula("(A & B) | C"));
  // position is reported
  try {
    parse_formula("A -> $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("printing modes") {
  CHECK(to_string(f_lolly(f_atom("A"), f_lolly(f_atom("B"), f_atom("C")))) == "A -> B -> C");
  CHECK(to_string(f_tensor(f_atom("A"), f_tensor(f_atom("B"), f_atom("C"))),
                  PrintMode::FullParens) == "(A * (B * C))");
  CHECK(to_string(f_tensor(f_atom("A"), f_tensor(f_atom("B"), f_atom("C")))) ==
        "A * (B * C)");
  CHECK(to_string(f_neg(f_neg(f_atom("A")))) == "A^^");
  CHECK(to_string_core(f_dneg(f_atom("P"))) == "P^^");
  CHECK(to_string_core(f_dneg(f_bot())) == "bot^^");
}

TEST_CASE("desugaring table") {
  auto A = f_atom("A"), B = f_atom("B");
  CHECK(equal(desugar(f_cap(A, B)), f_tensor(A, f_lolly(A, B))));
  CHECK(equal(desugar(f_cup(A, B)), f_lolly(f_lolly(B, A), A)));
  CHECK(equal(desugar(f_simp(A, B)), f_lolly(A, f_tensor(A, B))));
  CHECK(equal(desugar(f_nor(A, B)),
              f_tensor(f_lolly(A, f_bot()), f_lolly(B, A))));
  CHECK(equal(desugar(f_neg(f_bot())), f_lolly(f_bot(), f_bot())));
  CHECK(equal(desugar(f_top()), f_lolly(f_bot(), f_bot())));
  // idempotent on core formulas
  FormulaPtr core = desugar(parse_formula("(A & B) | C^"));
  CHECK(is_core(core));
  CHECK(equal(desugar(core), core));
}

TEST_CASE("substitution") {
  auto P = f_atom("P"), Q = f_atom("Q"), R = f_atom("R");
  FormulaPtr f = f_lolly(P, P);
  FormulaPtr g = f_tensor(Q, R);
  CHECK(equal(substitute(f, "P", g), f_lolly(g, g)));
  CHECK(equal(substitute(f_bot(), "P", f_atom("A")), f_bot()));
  CHECK(equal(substitute(f_lolly(P, Q), "Q", f_bot()), f_lolly(P, f_bot())));
  // desugar commutes with substitution on surface formulas
  FormulaPtr s = parse_formula("P & (Q | P)");
  SubstMap sigma{{"P", parse_formula("Q * R")}};
  CHECK(equal(desugar(substitute(s, sigma)), substitute(desugar(s), sigma)));
}

TEST_CASE("negative formula class") {
  CHECK(is_negative(f_bot()));
  CHECK(is_negative(desugar(parse_formula("P^^"))));
  CHECK_FALSE(is_negative(f_atom("P")));
  CHECK_FALSE(is_negative(desugar(parse_formula("P * bot"))));
  CHECK(is_negative(desugar(parse_formula("(P -> bot) * (Q -> R -> bot)"))));
  auto w = negative_witness(desugar(parse_formula("P^^")));
  REQUIRE(w.has_value());
  CHECK(w->clause == NegWitness::Clause::LollyIntoMember);
  // closure properties
  auto f = desugar(parse_formula("P^ * (Q -> bot)"));
  auto g = f_lolly(f_atom("H"), f);
  CHECK(is_negative(f_tensor(f, f)));
  CHECK(is_negative(g));
}

TEST_CASE("random formulas are deterministic and budget-bounded") {
  std::vector<std::string> vars{"P", "Q", "R"};
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    FormulaPtr a = random_formula(seed, 8, vars);
    FormulaPtr b = random_formula(seed, 8, vars);
    CHECK(equal(a, b));
    CHECK(connective_count(a) <= 8);
    // round-trip through the printer
    CHECK(equal(desugar(parse_formula(to_string_core(a))), a));
    FormulaPtr n = random_negative_formula(seed, 6, vars);
    CHECK(is_negative(n));
    CHECK(connective_count(n) <= 6);
  }
  CHECK(connective_count(random_formula(1, 0, {"P"})) == 0);
}
