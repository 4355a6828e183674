// ============================================================================
// alw/pocrim.hpp — finite pocrims and hoops given by explicit tables
// ============================================================================
//
// A (bounded) pocrim is (P, 1, 0, ·, ->; <=) where (1, ·, <=) is an ordered
// commutative monoid with 0 <= x <= 1, x <= y iff x -> y = 1, and the
// residuation property x·y <= z iff x <= y -> z holds.  -> is determined:
// y -> z is the maximum of {x : x·y <= z}, which must exist.
//
// A hoop additionally satisfies x·(x -> y) = y·(y -> x).  With ~x = x -> 0
// and d(x) = ~~x, a pocrim is involutive when d(x) = x and idempotent when
// x·x = x.
//
// Elements are indexed in declaration order; all reported witnesses are the
// first in that order, so results are deterministic.
// ============================================================================

#ifndef ALW_POCRIM_HPP
#define ALW_POCRIM_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alw/calculus.hpp"
#include "alw/sequent.hpp"

namespace alw {

struct ModelError : std::runtime_error {
  std::string law;
  std::vector<std::string> witness;
  ModelError(std::string l, std::vector<std::string> w, const std::string& msg)
      : std::runtime_error(msg), law(std::move(l)), witness(std::move(w)) {}
};

// Tables as read from a model file, unvalidated.
struct RawModel {
  std::string name;
  std::vector<std::string> elements;
  std::string unit, zero;
  std::vector<std::vector<uint8_t>> leq;  // full reflexive matrix
  std::vector<std::vector<int>> mult;
  std::optional<std::vector<std::vector<int>>> imp;  // cross-checked if present
};

class Pocrim {
 public:
  // Checks every law exhaustively; derives -> from residuals (or cross-checks
  // a supplied table).  Throws ModelError naming the violated law and the
  // first witness tuple.
  static Pocrim validate(const RawModel& raw);

  const std::string& name() const { return name_; }
  int order() const { return (int)names_.size(); }
  int unit() const { return unit_; }
  int zero() const { return zero_; }
  bool leq(int x, int y) const { return leq_[x][y] != 0; }
  int mult(int x, int y) const { return mult_[x][y]; }
  int imp(int x, int y) const { return imp_[x][y]; }
  int neg(int x) const { return imp_[x][zero_]; }
  int delta(int x) const { return neg(neg(x)); }

  const std::string& element_name(int i) const { return names_[i]; }
  // -1 when absent
  int element_index(const std::string& n) const;

  void rename(std::string name) { name_ = std::move(name); }

 private:
  friend Pocrim make_pocrim_unchecked(std::string, std::vector<std::string>, int, int,
                                      std::vector<std::vector<uint8_t>>,
                                      std::vector<std::vector<int>>,
                                      std::vector<std::vector<int>>);
  Pocrim() = default;
  std::string name_;
  std::vector<std::string> names_;
  int unit_ = 0, zero_ = 0;
  std::vector<std::vector<uint8_t>> leq_;
  std::vector<std::vector<int>> mult_, imp_;
};

// For the enumerator, which establishes the laws itself.
Pocrim make_pocrim_unchecked(std::string name, std::vector<std::string> names, int unit,
                             int zero, std::vector<std::vector<uint8_t>> leq,
                             std::vector<std::vector<int>> mult,
                             std::vector<std::vector<int>> imp);

// ----------------------------------------------------------- classification

struct Classification {
  bool is_hoop = false, is_involutive = false, is_idempotent = false;
  std::optional<std::pair<int, int>> hoop_witness;  // first (x, y) violating
  std::optional<int> involutive_witness;            // first x with d(x) != x
  std::optional<int> idempotent_witness;            // first x with x·x != x
};

Classification classify(const Pocrim& m);

// ----------------------------------------------------------------- semantics

// variable -> element index; must cover the formula's variables.
using Interpretation = std::map<std::string, int>;

// V(bot) = 0, V(A*B) = V(A)·V(B), V(A->B) = V(A)->V(B).  The formula must be
// core; throws std::invalid_argument on an unassigned variable.
int eval(const FormulaPtr& f, const Pocrim& m, const Interpretation& i);

struct Countermodel {
  Interpretation interp;
  int value;
};

// Exhaustive over |P|^k interpretations (variables sorted by name, elements
// in declaration order, first variable varying slowest); reports the first
// failure.  nullopt = valid.
std::optional<Countermodel> find_countermodel(const Pocrim& m, const FormulaPtr& goal);
inline bool satisfies(const Pocrim& m, const FormulaPtr& f) {
  return !find_countermodel(m, f).has_value();
}

// Product of the context <= conclusion under every interpretation.
std::optional<Countermodel> sequent_countermodel(const Pocrim& m, const Sequent& s);
inline bool sequent_valid(const Pocrim& m, const Sequent& s) {
  return !sequent_countermodel(m, s).has_value();
}

// ASM/EFQ hold everywhere; CWC iff hoop, DNE iff involutive, CON iff
// idempotent.  Checked both as a schema instance over all element pairs and
// via the algebraic identity; the two routes must agree.
bool axiom_schema_valid(const Pocrim& m, Schema s);

// All calculi whose (admitted) schema set is valid in m.
std::set<CalculusId> models_calculus(const Pocrim& m);

// -------------------------------------------------------------- built-ins

// L3, P4, Q4, Q6 with the appendix operation tables; throws on unknown name.
const Pocrim& builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

// ------------------------------------------------------------ homomorphism

struct HomViolation {
  std::string what;  // "unit" | "zero" | "mult" | "imp"
  int x = -1, y = -1;
};

// h maps src element index -> dst element index, total on src.
std::optional<HomViolation> check_homomorphism(const std::vector<int>& h, const Pocrim& src,
                                               const Pocrim& dst);

// ------------------------------------------------------------------ file IO
//
//   model <name>
//   elements e1 e2 ...
//   unit e
//   zero e
//   leq        (one line per element: "x: y1 y2 ..." — the full up-set of x)
//   mult       (one line per element: "x: v1 v2 ..." — x·ej in element order)
//   imp        (optional, same row format)
//
// Lines beginning with '#' are comments.

RawModel parse_model(const std::string& text);
RawModel read_model_file(const std::string& path);
std::string to_string(const Pocrim& m);

// "builtin:NAME" or a file path.
Pocrim load_model_spec(const std::string& spec);

}  // namespace alw

#endif
