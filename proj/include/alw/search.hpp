// ============================================================================
// alw/search.hpp — exhaustive enumeration of small pocrims and countermodel
// search (with finite-theory implication checks)
// ============================================================================

#ifndef ALW_SEARCH_HPP
#define ALW_SEARCH_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "alw/pocrim.hpp"
#include "alw/translate.hpp"

namespace alw {

enum class ModelClass { Pocrim, Hoop, InvolutivePocrim, InvolutiveHoop, Idempotent };

std::string to_string(ModelClass c);
std::optional<ModelClass> model_class_from_string(const std::string& s);
bool in_model_class(const Pocrim& m, ModelClass c);

struct EnumerationTask {
  int order = 2;
  ModelClass cls = ModelClass::Pocrim;
  bool dedup = true;  // up to isomorphism
  // Anything past the practical bound (5) is slow; enumerate() accepts up to
  // the hard bound (6) and reports the overrun through `warning`.
  int practical_bound = 5;
  int hard_bound = 6;
  std::function<void(const std::string&)> warning;
};

// Generates all bounded posets on `order` labeled elements with a top unit
// and bottom zero, then all commutative associative monotone unit-1
// operations whose residuals all exist, filters, deduplicates up to
// isomorphism and emits in canonical (lexicographically minimal table)
// order.  Throws std::invalid_argument past the hard bound.
std::vector<Pocrim> enumerate_pocrims(const EnumerationTask& task);

// Bijection (src index -> dst index) fixing unit and zero and preserving leq
// and mult; imp is then preserved automatically.
std::optional<std::vector<int>> find_isomorphism(const Pocrim& a, const Pocrim& b);

struct CountermodelQuery {
  FormulaPtr goal;  // core
  ModelClass cls = ModelClass::Pocrim;
  int max_order = 4;
  std::vector<Pocrim> bank;  // scanned instead of enumerating when non-empty
};

struct FoundCountermodel {
  Pocrim model;
  Interpretation interp;
  int value;
};

// First failing model in bank order (or canonical enumeration order over
// orders 2..max_order), with the first failing interpretation.
std::optional<FoundCountermodel> find_countermodel(const CountermodelQuery& q);

// --------------------------------------------------- finite theory shadows

struct TheoryViolation {
  FormulaPtr formula;       // premise-valid formula whose translation fails
  Interpretation interp;    // countermodel in the goal model
  int value;
};

struct TheoryCheckReport {
  size_t checked = 0;        // formulas valid in the premise model
  size_t total = 0;
  std::vector<TheoryViolation> violations;
};

// For each sample f: if premise |= f then goal |= translate(scheme, f) must
// hold; violations are reported with their goal-model countermodel.
TheoryCheckReport theory_implication_check(const Pocrim& premise, const Pocrim& goal,
                                           Scheme scheme, std::span<const FormulaPtr> samples);

}  // namespace alw

#endif
