// ============================================================================
// alw/formula.hpp — the formula language
// ============================================================================
//
// Core connectives are {atoms, bot, * (tensor), -> (lolly)}.  The surface
// layer adds the derived connectives, which desugar into the core:
//
//   A^      =  A -> bot            (negation, postfix)
//   top     =  bot -> bot
//   A & B   =  A * (A -> B)        (pre-conjunction)
//   A | B   =  (B -> A) -> A       (pre-disjunction)
//   A => B  =  A -> A * B          (strong implication)
//   A # B   =  A^ * (B -> A)       (NOR)
//
// Formulas are immutable shared trees; structural equality is the equality
// used everywhere downstream.
// ============================================================================

#ifndef ALW_FORMULA_HPP
#define ALW_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace alw {

enum class FKind : uint8_t {
  Atom, Bottom, Tensor, Lolly,      // core
  Neg, Top, Cap, Cup, Simp, Nor     // surface sugar
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string atom;        // Atom only
  FormulaPtr left, right;  // binary connectives; Neg uses left only
};

FormulaPtr f_atom(std::string name);
FormulaPtr f_bot();
FormulaPtr f_top();
FormulaPtr f_tensor(FormulaPtr l, FormulaPtr r);
FormulaPtr f_lolly(FormulaPtr l, FormulaPtr r);
FormulaPtr f_neg(FormulaPtr a);
FormulaPtr f_dneg(FormulaPtr a);          // core double negation (A -> bot) -> bot
FormulaPtr f_cap(FormulaPtr l, FormulaPtr r);
FormulaPtr f_cup(FormulaPtr l, FormulaPtr r);
FormulaPtr f_simp(FormulaPtr l, FormulaPtr r);
FormulaPtr f_nor(FormulaPtr l, FormulaPtr r);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
// Total structural order; fixes the canonical multiset order used by sequents.
int compare(const FormulaPtr& a, const FormulaPtr& b);

bool is_core(const FormulaPtr& f);
FormulaPtr desugar(const FormulaPtr& f);

// Variables of f, sorted by name.
std::vector<std::string> variables(const FormulaPtr& f);

using SubstMap = std::map<std::string, FormulaPtr>;
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const FormulaPtr& g);
FormulaPtr substitute(const FormulaPtr& f, const SubstMap& sigma);

size_t connective_count(const FormulaPtr& f);

// --------------------------------------------------------------- negatives
// The class N of negative formulas: bot is in N; a tensor of members is in N;
// a lolly whose conclusion is in N is in N.
struct NegWitness {
  enum class Clause { IsBottom, TensorOfMembers, LollyIntoMember };
  Clause clause;
  FormulaPtr formula;
  std::vector<NegWitness> children;
};

std::optional<NegWitness> negative_witness(const FormulaPtr& f);
bool is_negative(const FormulaPtr& f);
std::string to_string(const NegWitness& w);  // indented clause-by-clause trace

// ---------------------------------------------------------------- printing
enum class PrintMode { MinimalParens, FullParens };

std::string to_string(const FormulaPtr& f, PrintMode mode = PrintMode::MinimalParens);
// Rewrites X -> bot as X^ (recursively) before printing; used to display
// core formulas compactly.  Re-parsing + desugaring gives back the input.
std::string to_string_core(const FormulaPtr& f, PrintMode mode = PrintMode::MinimalParens);

// ----------------------------------------------------------------- parsing
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what), position(pos) {}
};

// Grammar (whitespace insignificant between tokens):
//   formula := imp
//   imp     := mid (("->"|"=>") imp)?            right-associative
//   mid     := ten (("&"|"|"|"#") ten)?          non-associative
//   ten     := post ("*" post)*                  left-associative
//   post    := atom "^"*
//   atom    := ident | "bot" | "top" | "(" formula ")"
FormulaPtr parse_formula(const std::string& text);

// ------------------------------------------------------------ random trees
// Deterministic for a fixed seed (splitmix-fed mt19937_64, modulo reduction).
// Distribution: at each step a leaf with probability 1/4 (uniform over
// vars + bot), otherwise tensor/lolly evenly with a uniform budget split;
// budget 0 forces a leaf, so the connective count never exceeds the budget.
FormulaPtr random_formula(uint64_t seed, size_t max_connectives,
                          const std::vector<std::string>& vars);
// Same, but the result always lies in the negative class N.
FormulaPtr random_negative_formula(uint64_t seed, size_t max_connectives,
                                   const std::vector<std::string>& vars);

}  // namespace alw

#endif
