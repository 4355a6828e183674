#include <doctest.h>

#include "alw/pocrim.hpp"
#include "alw/translate.hpp"

using namespace alw;

namespace {
FormulaPtr fm(const std::string& s) { return desugar(parse_formula(s)); }
std::string tr(Scheme s, const std::string& text) {
  return to_string_core(translate(s, fm(text)));
}
}  // namespace

TEST_CASE("clause tables") {
  CHECK(tr(Scheme::Kolmogorov, "P * Q") == "(P^^ * Q^^)^^");
  CHECK(tr(Scheme::Kolmogorov, "P") == "P^^");
  CHECK(tr(Scheme::Kolmogorov, "bot") == "bot");
  CHECK(tr(Scheme::Gentzen, "(P * Q)^^ -> P * Q") ==
        "(P^^ * Q^^)^^ -> P^^ * Q^^");
  CHECK(tr(Scheme::Glivenko, "bot") == "bot^^");
  CHECK(equal(translate(Scheme::Glivenko, fm("bot")),
              fm("(bot -> bot) -> bot")));
  CHECK(tr(Scheme::Krivine, "P") == "P^^");
  CHECK(tr(Scheme::Goedel, "P") == "P^^");
  CHECK(tr(Scheme::GoedelPre, "P") == "P");
  CHECK(tr(Scheme::GoedelPre, "P -> Q") == "P -> Q^^");
  CHECK(tr(Scheme::Goedel, "P -> Q") == "(P -> Q^^)^^");
  CHECK(tr(Scheme::GoedelSimplified, "P^ -> Q") == "(P^ -> Q^^)^^");
  // the simplified variant keeps the premise untranslated
  CHECK(tr(Scheme::GoedelSimplified, "(P -> Q) -> Q") == "((P -> Q) -> Q^^)^^");
  CHECK(tr(Scheme::Goedel, "(P -> Q) -> Q") == "((P -> Q^^) -> Q^^)^^");
  CHECK(tr(Scheme::KrivinePre, "bot") == "bot^");
  CHECK(tr(Scheme::Krivine, "P * Q") == "(P^^ -> Q^)^");
}

TEST_CASE("NT1: the full schemes land in the negative class") {
  std::vector<std::string> vars{"P", "Q", "R"};
  for (uint64_t seed = 0; seed < 500; ++seed) {
    FormulaPtr f = random_formula(seed, 8, vars);
    for (Scheme s : {Scheme::Kolmogorov, Scheme::Goedel, Scheme::GoedelSimplified,
                     Scheme::Gentzen, Scheme::Glivenko, Scheme::Krivine, Scheme::KrivinePre})
      CHECK(nt1_witness(s, f).has_value());
  }
  // GoedelPre leaves atoms bare, so NT1 fails for it syntactically
  CHECK_FALSE(nt1_witness(Scheme::GoedelPre, fm("P")).has_value());
  CHECK(nt1_witness(Scheme::GoedelPre, fm("bot")).has_value());
}

TEST_CASE("gentzen commutes with negation syntactically") {
  CHECK(gentzen_neg_commutes(fm("P")).equal);
  CHECK(gentzen_neg_commutes(fm("P * Q")).equal);
  std::vector<std::string> vars{"P", "Q", "R"};
  for (uint64_t seed = 0; seed < 1000; ++seed)
    CHECK(gentzen_neg_commutes(random_formula(seed, 8, vars)).equal);
}

TEST_CASE("kolmogorov and goedel agree in every small pocrim") {
  std::vector<std::string> vars{"P", "Q"};
  std::vector<Pocrim> models;
  for (const auto& n : builtin_model_names()) models.push_back(builtin_model(n));
  for (uint64_t seed = 0; seed < 60; ++seed) {
    FormulaPtr f = random_formula(seed, 6, vars);
    FormulaPtr k = translate(Scheme::Kolmogorov, f);
    FormulaPtr g = translate(Scheme::Goedel, f);
    for (const Pocrim& m : models) {
      for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b) {
          Interpretation i{{"P", a}, {"Q", b}};
          CHECK(eval(k, m, i) == eval(g, m, i));
        }
    }
  }
}
