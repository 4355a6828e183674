// ============================================================================
// alw/translate.hpp — the negative translations as formula maps
// ============================================================================
//
//   kolmogorov   P -> P^^ | bot -> bot | (A*B) -> (kA * kB)^^
//                                      | (A->B) -> (kA -> kB)^^
//   goedel-pre   P -> P   | bot -> bot | (A*B) -> gA * gB
//                                      | (A->B) -> gA -> gB^^
//   goedel       (goedel-pre)^^
//   goedel-simplified   like goedel-pre but (A->B) -> A -> gB^^ (premise kept),
//                       then ^^ outside
//   gentzen      P -> P^^ | bot -> bot | homomorphic on * and ->
//   glivenko     A -> A^^
//   krivine-pre  P -> P^  | bot -> top | (A*B) -> (kA)^ -> kB
//                                      | (A->B) -> (kA)^ * kB
//   krivine      (krivine-pre)^
//
// krivine-pre builds the refutation of A, so V(kA) = ~V(A) in involutive
// hoops.  (Some sources print the inner negation on the second component;
// that variant does not satisfy NT2, which is easy to check in the
// three-element Lukasiewicz chain.)
// ============================================================================

#ifndef ALW_TRANSLATE_HPP
#define ALW_TRANSLATE_HPP

#include <optional>
#include <string>

#include "alw/formula.hpp"

namespace alw {

enum class Scheme {
  Kolmogorov,
  GoedelPre,
  Goedel,
  GoedelSimplified,
  Gentzen,
  Glivenko,
  KrivinePre,
  Krivine,
};

// Structural recursion per the clause tables above; f must be core.
FormulaPtr translate(Scheme s, const FormulaPtr& f);

// Negative-class membership witness for translate(s, f).  Every scheme but
// GoedelPre and, on bot-free formulas, goedel-pre-like cases always lands in
// N; GoedelPre leaves atoms untouched and can fall outside.
std::optional<NegWitness> nt1_witness(Scheme s, const FormulaPtr& f);

struct NegCommuteReport {
  bool equal;
  FormulaPtr lhs, rhs;  // gentzen(A^) and (gentzen A)^
};

// The Gentzen translation commutes with negation syntactically.
NegCommuteReport gentzen_neg_commutes(const FormulaPtr& f);

std::string to_string(Scheme s);
std::optional<Scheme> scheme_from_string(const std::string& s);
std::vector<Scheme> all_schemes();

}  // namespace alw

#endif
