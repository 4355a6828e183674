// ============================================================================
// alw/proof.hpp — natural-deduction proof trees and the checker
// ============================================================================
//
// Rules (sequent style):
//
//   [->I]  G, A |- B  /  G |- A -> B
//   [->E]  G |- A   D |- A -> B  /  G, D |- B
//   [*I]   G |- A   D |- B  /  G, D |- A * B
//   [*E]   G |- A * B   D, A, B |- C  /  G, D |- C
//
// Axiom schemata (G absorbs any extra context):
//
//   [ASM]  G, A |- A
//   [CON]  G, A |- A * A
//   [EFQ]  G, bot |- A
//   [DNE]  G, A^^ |- A
//   [CWC]  G, A, A -> B |- B * (B -> A)
//
// Every node stores its conclusion; checking verifies it rather than trusting
// it, so errors can point at the first divergent node.
// ============================================================================

#ifndef ALW_PROOF_HPP
#define ALW_PROOF_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alw/calculus.hpp"
#include "alw/sequent.hpp"

namespace alw {

enum class RuleName { LollyI, LollyE, TensorI, TensorE };

std::string to_string(RuleName r);
std::optional<RuleName> rule_from_string(const std::string& s);

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  enum class Kind { Rule, Axiom, Lemma };
  Kind kind;
  RuleName rule{};                 // Kind::Rule
  Schema schema{};                 // Kind::Axiom
  std::string lemma_id;            // Kind::Lemma
  SubstMap subst;                  // Kind::Lemma, total on the theorem's vars
  Sequent conclusion;
  std::vector<ProofPtr> premises;  // Kind::Rule only
};

ProofPtr rule_node(RuleName r, Sequent concl, std::vector<ProofPtr> premises);
ProofPtr axiom_node(Schema s, Sequent concl);
ProofPtr lemma_node(std::string id, SubstMap subst, Sequent concl);

// A lemma bank entry is a closed theorem |- formula verified in a calculus.
struct LemmaInfo {
  FormulaPtr theorem;
  CalculusId calculus;
};
using LemmaBank = std::map<std::string, LemmaInfo>;

// ---------------------------------------------------------------- checking

struct AxiomMatch {
  FormulaPtr a;                    // the distinguished formula(s) of the schema
  FormulaPtr b;                    // CWC only
  std::vector<FormulaPtr> gamma;   // absorbed context
};

std::optional<AxiomMatch> match_axiom(const Sequent& s, Schema schema);

struct CheckError {
  std::vector<size_t> path;  // premise indices from the root
  std::string kind;          // wrong-arity | context-mismatch | rule-mismatch |
                             // schema-not-in-calculus | axiom-mismatch |
                             // unknown-lemma | lemma-calculus | substitution-mismatch
  std::string detail;
};

std::string to_string(const CheckError& e);

// nullopt = proof is accepted.
std::optional<CheckError> check_proof(const ProofPtr& t, CalculusId c,
                                      const LemmaBank& bank = {});

// ------------------------------------------------------------ transformers

// Adds one copy of a to the context of every sequent along one root-to-leaf
// path (axiom/lemma leaves absorb it); the result checks whenever t does.
ProofPtr weaken_proof(const ProofPtr& t, const FormulaPtr& a);

// Node-wise substitution; preserves checkability.  Lemma substitutions are
// composed, so they must be total on their theorem's variables.
ProofPtr substitute_proof(const ProofPtr& t, const SubstMap& sigma);

// From a proof of G, A, A |- B builds a proof of G, A |- B via the CON axiom
// and [*E].  Throws std::invalid_argument if c lacks CON or A is not present
// twice in the root context.
ProofPtr derived_rule_contraction(const ProofPtr& t, const FormulaPtr& a, CalculusId c);

// ------------------------------------------------------------------ file IO
//
// (proof id "<id>" calculus <C> (concl "<sequent>") <node>)
// node := (rule <R> (concl "<sequent>") node ...)
//       | (axiom <S> (concl "<sequent>"))
//       | (lemma "<id>" ((<var> "<formula>") ...) (concl "<sequent>"))

struct ProofFile {
  std::string id;
  CalculusId calculus{};
  Sequent statement;
  ProofPtr root;
};

ProofFile parse_proof_file(const std::string& text);
ProofFile read_proof_file(const std::string& path);
std::string to_string(const ProofFile& pf);

}  // namespace alw

#endif
