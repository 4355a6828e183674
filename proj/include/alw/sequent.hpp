// alw/sequent.hpp — multiset-context sequents and the Hilbert-style bridge.

#ifndef ALW_SEQUENT_HPP
#define ALW_SEQUENT_HPP

#include <span>
#include <string>
#include <vector>

#include "alw/formula.hpp"

namespace alw {

// Context is a multiset: multiplicity matters, order does not.  It is kept
// sorted in the canonical structural order, so vector equality is multiset
// equality.
struct Sequent {
  std::vector<FormulaPtr> context;
  FormulaPtr conclusion;

  Sequent() = default;
  Sequent(std::vector<FormulaPtr> ctx, FormulaPtr concl);
};

bool operator==(const Sequent& a, const Sequent& b);

// Multiset helpers over canonically sorted vectors.
std::vector<FormulaPtr> ms_union(const std::vector<FormulaPtr>& a,
                                 const std::vector<FormulaPtr>& b);
// Removes one occurrence; false if absent.
bool ms_remove_one(std::vector<FormulaPtr>& v, const FormulaPtr& f);
bool ms_contains(const std::vector<FormulaPtr>& v, const FormulaPtr& f);

std::string to_string(const Sequent& s);
// "A, B |- C"; an empty context is written with nothing before "|-".
Sequent parse_sequent(const std::string& text);

// A1 -> A2 -> ... -> An -> conclusion for the given enumeration of the
// context.  Throws std::invalid_argument if order does not enumerate the
// context multiset exactly.
FormulaPtr sequent_to_formula(const Sequent& s, std::span<const FormulaPtr> order);
// Same with the canonical (sorted) enumeration.
FormulaPtr closed_form(const Sequent& s);

}  // namespace alw

#endif
