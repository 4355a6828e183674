#include <doctest.h>

#include "alw/search.hpp"

using namespace alw;

namespace {
FormulaPtr fm(const std::string& s) { return desugar(parse_formula(s)); }

std::vector<Pocrim> enumerate(int order, ModelClass cls = ModelClass::Pocrim,
                              bool dedup = true) {
  EnumerationTask t;
  t.order = order;
  t.cls = cls;
  t.dedup = dedup;
  return enumerate_pocrims(t);
}
}  // namespace

TEST_CASE("enumeration counts at small orders") {
  CHECK(enumerate(1).size() == 1);
  CHECK(enumerate(2).size() == 1);
  CHECK(enumerate(3).size() == 2);
  CHECK(enumerate(4).size() == 7);
  CHECK(enumerate(4, ModelClass::Hoop).size() == 5);
  CHECK(enumerate(4, ModelClass::Idempotent).size() == 2);
  CHECK(enumerate(4, ModelClass::InvolutivePocrim).size() == 3);
  CHECK(enumerate(3, ModelClass::Hoop).size() == 2);
}

TEST_CASE("the order-4 non-hoops are P4 and Q4") {
  std::vector<Pocrim> nonhoops;
  for (const Pocrim& m : enumerate(4))
    if (!classify(m).is_hoop) nonhoops.push_back(m);
  REQUIRE(nonhoops.size() == 2);
  int p4 = 0, q4 = 0;
  for (const Pocrim& m : nonhoops) {
    if (find_isomorphism(m, builtin_model("P4"))) ++p4;
    if (find_isomorphism(m, builtin_model("Q4"))) ++q4;
  }
  CHECK(p4 == 1);
  CHECK(q4 == 1);
}

TEST_CASE("the only non-idempotent order-3 pocrim is L3") {
  std::vector<Pocrim> nonidem;
  for (const Pocrim& m : enumerate(3))
    if (!classify(m).is_idempotent) nonidem.push_back(m);
  REQUIRE(nonidem.size() == 1);
  CHECK(find_isomorphism(nonidem[0], builtin_model("L3")).has_value());
}

TEST_CASE("every enumerated table validates; dedup is sound at order 3") {
  for (int order = 1; order <= 4; ++order)
    for (const Pocrim& m : enumerate(order))
      CHECK_NOTHROW(Pocrim::validate(parse_model(to_string(m))));

  // brute force without dedup, then group by isomorphism: the classes match
  std::vector<Pocrim> raw = enumerate(3, ModelClass::Pocrim, false);
  std::vector<Pocrim> reps = enumerate(3);
  CHECK(raw.size() >= reps.size());
  for (const Pocrim& m : raw) {
    int matches = 0;
    for (const Pocrim& r : reps)
      if (find_isomorphism(m, r)) ++matches;
    CHECK(matches == 1);  // exactly one representative per table
  }
  // no two representatives are isomorphic
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(find_isomorphism(reps[i], reps[j]).has_value());
}

TEST_CASE("enumeration output is deterministic byte for byte") {
  auto a = enumerate(4);
  auto b = enumerate(4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(to_string(a[i]) == to_string(b[i]));
}

TEST_CASE("isomorphism finds renamings and rejects distinct models") {
  const Pocrim& l3 = builtin_model("L3");
  RawModel renamed = parse_model(to_string(l3));
  renamed.elements = {"top", "mid", "bottom"};
  renamed.unit = "top";
  renamed.zero = "bottom";
  Pocrim r = Pocrim::validate(renamed);
  CHECK(find_isomorphism(l3, r).has_value());
  CHECK_FALSE(find_isomorphism(builtin_model("P4"), builtin_model("Q4")).has_value());
  CHECK_FALSE(find_isomorphism(l3, builtin_model("P4")).has_value());
}

TEST_CASE("countermodel search") {
  CountermodelQuery q;
  q.goal = fm("(P^^ -> P)^^");
  q.cls = ModelClass::Pocrim;
  q.max_order = 4;
  auto r = find_countermodel(q);
  REQUIRE(r.has_value());
  CHECK(find_isomorphism(r->model, builtin_model("P4")).has_value());

  // over the named bank, the gentzen translate of DNE on a tensor fails
  // first in Q6, at P = s, Q = s with value r
  CountermodelQuery q2;
  q2.goal = fm("(P^^ * Q^^)^^ -> P^^ * Q^^");
  for (const auto& n : builtin_model_names()) q2.bank.push_back(builtin_model(n));
  auto r2 = find_countermodel(q2);
  REQUIRE(r2.has_value());
  CHECK(r2->model.name() == "Q6");
  const Pocrim& q6 = r2->model;
  CHECK(r2->interp == Interpretation{{"P", q6.element_index("s")},
                                     {"Q", q6.element_index("s")}});
  CHECK(r2->value == q6.element_index("r"));

  CountermodelQuery q3;
  q3.goal = fm("P -> P");
  q3.max_order = 4;
  CHECK_FALSE(find_countermodel(q3).has_value());
}

TEST_CASE("theory implication checks") {
  const Pocrim& q4 = builtin_model("Q4");
  const Pocrim& q6 = builtin_model("Q6");
  const Pocrim& l3 = builtin_model("L3");
  const Pocrim& p4 = builtin_model("P4");

  std::vector<FormulaPtr> stream;
  for (uint64_t seed = 0; seed < 200; ++seed)
    stream.push_back(random_formula(seed, 8, {"P", "Q", "R"}));
  FormulaPtr wit2 = fm("P^^ -> P");
  FormulaPtr wit3 = fm("(P * Q)^^ -> P * Q");
  stream.push_back(wit2);
  stream.push_back(wit3);

  CHECK(theory_implication_check(q4, q6, Scheme::Glivenko, stream).violations.empty());
  CHECK(theory_implication_check(l3, p4, Scheme::Gentzen, stream).violations.empty());

  auto rep1 = theory_implication_check(q4, q6, Scheme::Gentzen, stream);
  REQUIRE_FALSE(rep1.violations.empty());
  bool has_wit3 = false;
  for (const auto& v : rep1.violations)
    if (equal(v.formula, wit3)) has_wit3 = true;
  CHECK(has_wit3);

  auto rep2 = theory_implication_check(l3, p4, Scheme::Glivenko, stream);
  REQUIRE_FALSE(rep2.violations.empty());
  bool has_wit2 = false;
  for (const auto& v : rep2.violations)
    if (equal(v.formula, wit2)) has_wit2 = true;
  CHECK(has_wit2);
}

TEST_CASE("order bounds") {
  EnumerationTask t;
  t.order = 7;
  CHECK_THROWS_AS(enumerate_pocrims(t), std::invalid_argument);
  t.order = 0;
  CHECK_THROWS_AS(enumerate_pocrims(t), std::invalid_argument);
}
