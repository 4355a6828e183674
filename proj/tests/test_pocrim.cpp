#include <doctest.h>

#include "alw/pocrim.hpp"

using namespace alw;

namespace {
FormulaPtr fm(const std::string& s) { return desugar(parse_formula(s)); }
int el(const Pocrim& m, const std::string& n) { return m.element_index(n); }
}  // namespace

TEST_CASE("builtin tables validate and match the appendix") {
  for (const auto& name : builtin_model_names()) CHECK_NOTHROW(builtin_model(name));
  const Pocrim& q4 = builtin_model("Q4");
  CHECK(q4.mult(el(q4, "p"), el(q4, "q")) == el(q4, "0"));
  const Pocrim& q6 = builtin_model("Q6");
  CHECK(q6.imp(el(q6, "s"), el(q6, "t")) == el(q6, "r"));
  const Pocrim& p4 = builtin_model("P4");
  CHECK(p4.imp(el(p4, "c"), el(p4, "0")) == el(p4, "b"));
  CHECK_THROWS_AS(builtin_model("X9"), std::invalid_argument);
}

TEST_CASE("classification of the built-ins") {
  auto l3 = classify(builtin_model("L3"));
  CHECK(l3.is_hoop);
  CHECK(l3.is_involutive);
  CHECK_FALSE(l3.is_idempotent);

  const Pocrim& p4m = builtin_model("P4");
  auto p4 = classify(p4m);
  CHECK_FALSE(p4.is_hoop);
  CHECK(p4.hoop_witness == std::pair{el(p4m, "b"), el(p4m, "c")});
  CHECK_FALSE(p4.is_involutive);
  CHECK(p4.involutive_witness == el(p4m, "c"));
  CHECK(p4m.delta(el(p4m, "c")) == el(p4m, "b"));

  const Pocrim& q4m = builtin_model("Q4");
  auto q4 = classify(q4m);
  CHECK_FALSE(q4.is_hoop);
  CHECK(q4.hoop_witness == std::pair{el(q4m, "p"), el(q4m, "q")});
  CHECK(q4.is_involutive);

  const Pocrim& q6m = builtin_model("Q6");
  auto q6 = classify(q6m);
  CHECK_FALSE(q6.is_hoop);
  CHECK_FALSE(q6.is_involutive);
  // the operation tables force delta(r) = 1 (not 0: the negation of r is
  // already 0, and 0 -> 0 = 1)
  CHECK(q6.involutive_witness == el(q6m, "r"));
  CHECK(q6m.delta(el(q6m, "r")) == q6m.unit());
}

TEST_CASE("a perturbed table is rejected with a law and witness") {
  // L3 with a·a = a but the -> table left claiming a -> 0 = a
  RawModel raw;
  raw.name = "L3broken";
  raw.elements = {"1", "a", "0"};
  raw.unit = "1";
  raw.zero = "0";
  raw.leq = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  raw.mult = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};  // a·a = a
  raw.imp = std::vector<std::vector<int>>{{0, 1, 2}, {0, 0, 1}, {0, 0, 0}};
  // ... but a -> 0 kept as a, which is no longer the residual
  try {
    Pocrim::validate(raw);
    CHECK(false);
  } catch (const ModelError& e) {
    CHECK(e.law == "imp-table");
  }
  // and with the imp table omitted, the residual is simply recomputed
  raw.imp.reset();
  Pocrim fixed = Pocrim::validate(raw);
  CHECK(fixed.imp(1, 2) == 2);  // a -> 0 = 0 in the idempotent chain

  // breaking associativity is caught
  RawModel bad = raw;
  bad.mult = {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}};
  bad.mult[1][2] = 1;  // a·0 = a
  CHECK_THROWS_AS(Pocrim::validate(bad), ModelError);
}

TEST_CASE("evaluation") {
  const Pocrim& p4 = builtin_model("P4");
  Interpretation i{{"P", el(p4, "c")}};
  CHECK(eval(fm("P^^"), p4, i) == el(p4, "b"));
  CHECK(eval(fm("(P^^ -> P)^^"), p4, i) == el(p4, "b"));
  for (const auto& name : builtin_model_names()) {
    const Pocrim& m = builtin_model(name);
    for (int x = 0; x < m.order(); ++x)
      CHECK(eval(fm("P -> P"), m, {{"P", x}}) == m.unit());
  }
  CHECK_THROWS_AS(eval(fm("P -> Q"), p4, i), std::invalid_argument);
}

TEST_CASE("validity and countermodels") {
  const Pocrim& l3 = builtin_model("L3");
  const Pocrim& p4 = builtin_model("P4");
  CHECK(satisfies(l3, fm("(P & Q) -> (Q & P)")));
  auto cm = find_countermodel(p4, fm("(P^^ -> P)^^"));
  REQUIRE(cm.has_value());
  CHECK(cm->interp == Interpretation{{"P", el(p4, "c")}});
  CHECK(cm->value == el(p4, "b"));

  // CWC as a sequent: valid in L3, refuted in P4
  Sequent cwc = parse_sequent("A, A -> B |- B * (B -> A)");
  CHECK(sequent_valid(l3, cwc));
  auto scm = sequent_countermodel(p4, cwc);
  REQUIRE(scm.has_value());
  CHECK(scm->interp == Interpretation{{"A", el(p4, "c")}, {"B", el(p4, "b")}});

  CHECK(sequent_valid(p4, parse_sequent("A |- A")));
  CHECK(sequent_valid(p4, parse_sequent("bot |- P")));
}

TEST_CASE("axiom schema validity matches the classification") {
  for (const auto& name : builtin_model_names()) {
    const Pocrim& m = builtin_model(name);
    auto c = classify(m);
    CHECK(axiom_schema_valid(m, Schema::ASM));
    CHECK(axiom_schema_valid(m, Schema::EFQ));
    CHECK(axiom_schema_valid(m, Schema::CWC) == c.is_hoop);
    CHECK(axiom_schema_valid(m, Schema::DNE) == c.is_involutive);
    CHECK(axiom_schema_valid(m, Schema::CON) == c.is_idempotent);
  }
  CHECK(axiom_schema_valid(builtin_model("L3"), Schema::DNE));
  CHECK_FALSE(axiom_schema_valid(builtin_model("P4"), Schema::CWC));
  CHECK_FALSE(axiom_schema_valid(builtin_model("Q6"), Schema::DNE));
}

TEST_CASE("which calculi each builtin models") {
  using C = CalculusId;
  CHECK(models_calculus(builtin_model("L3")) ==
        std::set<C>{C::ALi, C::ALc, C::LLi, C::LLc});
  CHECK(models_calculus(builtin_model("P4")) == std::set<C>{C::ALi});
  CHECK(models_calculus(builtin_model("Q4")) == std::set<C>{C::ALi, C::ALc});
  CHECK(models_calculus(builtin_model("Q6")) == std::set<C>{C::ALi});
}

TEST_CASE("homomorphism Q6 -> Q4") {
  const Pocrim& q6 = builtin_model("Q6");
  const Pocrim& q4 = builtin_model("Q4");
  auto h = [&](std::map<std::string, std::string> m) {
    std::vector<int> out(q6.order());
    for (auto& [src, dst] : m) out[el(q6, src)] = el(q4, dst);
    return out;
  };
  std::vector<int> good = h({{"1", "1"}, {"r", "1"}, {"s", "p"}, {"t", "p"},
                             {"u", "q"}, {"0", "0"}});
  CHECK_FALSE(check_homomorphism(good, q6, q4).has_value());

  // the identity is a homomorphism L3 -> L3
  const Pocrim& l3 = builtin_model("L3");
  CHECK_FALSE(check_homomorphism({0, 1, 2}, l3, l3).has_value());

  // swapping p and q in the target breaks a product
  std::vector<int> swapped = h({{"1", "1"}, {"r", "1"}, {"s", "q"}, {"t", "q"},
                                {"u", "p"}, {"0", "0"}});
  CHECK(check_homomorphism(swapped, q6, q4).has_value());
  // every transposition that actually changes the map fails (h is not
  // injective, so swapping two equal images is a no-op)
  for (int i = 0; i < q6.order(); ++i)
    for (int j = i + 1; j < q6.order(); ++j) {
      if (good[i] == good[j]) continue;
      std::vector<int> t = good;
      std::swap(t[i], t[j]);
      CHECK(check_homomorphism(t, q6, q4).has_value());
    }
}

TEST_CASE("model file round trip") {
  for (const auto& name : builtin_model_names()) {
    const Pocrim& m = builtin_model(name);
    std::string text = to_string(m);
    Pocrim back = Pocrim::validate(parse_model(text));
    CHECK(back.order() == m.order());
    for (int x = 0; x < m.order(); ++x)
      for (int y = 0; y < m.order(); ++y) {
        CHECK(back.mult(x, y) == m.mult(x, y));
        CHECK(back.imp(x, y) == m.imp(x, y));
        CHECK(back.leq(x, y) == m.leq(x, y));
      }
    CHECK(to_string(back) == text);
  }
  // comments and missing imp are fine
  std::string text = "# comment\nmodel two\nelements 1 0\nunit 1\nzero 0\n"
                     "leq\n1: 1\n0: 0 1\nmult\n1: 1 0\n0: 0 0\n";
  Pocrim two = Pocrim::validate(parse_model(text));
  CHECK(two.order() == 2);
  CHECK(two.imp(0, 1) == 1);
}

TEST_CASE("delta facts used throughout") {
  for (const auto& name : builtin_model_names()) {
    const Pocrim& m = builtin_model(name);
    for (int x = 0; x < m.order(); ++x) {
      CHECK(m.leq(x, m.delta(x)));                    // x <= ~~x
      CHECK(m.neg(m.delta(x)) == m.neg(x));           // ~~~x = ~x
      CHECK(m.delta(m.delta(x)) == m.delta(x));
    }
  }
}
