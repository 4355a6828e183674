// ============================================================================
// alw/build.hpp — combinators for constructing proof trees
// ============================================================================
//
// Each combinator computes its conclusion bottom-up and throws
// std::logic_error on a resource mismatch, so authoring errors surface at
// construction time.  The checker stays the final judge: everything built
// here is meant to be re-verified with check_proof.
//
// cut is the admissible composition  (G |- A) + (D, A |- B)  ~>  (G, D |- B),
// implemented with [->I] + [->E]; the calculi themselves have no cut rule.
// ============================================================================

#ifndef ALW_BUILD_HPP
#define ALW_BUILD_HPP

#include "alw/proof.hpp"

namespace alw::build {

// -------- axioms
ProofPtr hyp(const FormulaPtr& a);                                   // {a} |- a
ProofPtr assume(std::vector<FormulaPtr> extra, const FormulaPtr& a); // extra,a |- a
ProofPtr axiom_efq(const FormulaPtr& concl);                         // {bot} |- concl
ProofPtr axiom_con(const FormulaPtr& a);                             // {a} |- a*a
ProofPtr axiom_dne(const FormulaPtr& a);                             // {a^^} |- a
ProofPtr axiom_cwc(const FormulaPtr& a, const FormulaPtr& b);        // {a, a->b} |- b*(b->a)

// -------- the four rules
ProofPtr lolly_i(const FormulaPtr& a, const ProofPtr& t);  // discharge one copy of a
ProofPtr mp(const ProofPtr& arg, const ProofPtr& fn);      // [->E]
ProofPtr tensor_i(const ProofPtr& l, const ProofPtr& r);
// components are read off tens's conclusion; cont must hold both in context
ProofPtr tensor_e(const ProofPtr& tens, const ProofPtr& cont);

// -------- derived combinators (all admissible in ALi)
ProofPtr cut(const ProofPtr& ta, const ProofPtr& user);
ProofPtr identity(const FormulaPtr& a);                          // |- a -> a
ProofPtr k_comb(const FormulaPtr& a, const FormulaPtr& b);       // |- a -> b -> a
ProofPtr compose(const ProofPtr& tab, const ProofPtr& tbc);      // ... |- a -> c
ProofPtr flip(const ProofPtr& t);                                // a->b->c ~> b->a->c
ProofPtr dni(const FormulaPtr& a);                               // |- a -> a^^
ProofPtr dni_of(const ProofPtr& t);                              // G |- a ~> G |- a^^
ProofPtr efq_impl(const FormulaPtr& c);                          // |- bot -> c
ProofPtr efq_to(const ProofPtr& bot_proof, const FormulaPtr& c); // G |- bot ~> G |- c
ProofPtr contrapose(const ProofPtr& t);                          // a->b ~> b^ -> a^
ProofPtr curry(const ProofPtr& t);                               // (a*b)->c ~> a->b->c
ProofPtr uncurry(const ProofPtr& t);                             // a->b->c ~> (a*b)->c
ProofPtr tensor_comm(const FormulaPtr& a, const FormulaPtr& b);  // |- a*b -> b*a

// CWC as a closed theorem and as a two-argument rule (needs LLi or above)
ProofPtr cwc_thm(const FormulaPtr& a, const FormulaPtr& b);      // |- a->(a->b)->b*(b->a)
ProofPtr cwc_pair(const ProofPtr& ta, const ProofPtr& tab);      // ... |- b*(b->a)

// -------- lemma citation: {} |- sigma(theorem)
ProofPtr cite(const LemmaBank& bank, const std::string& id, const SubstMap& sigma);

// -------- equivalences, for equational chains
struct Equiv {
  FormulaPtr lhs, rhs;
  ProofPtr lr, rl;  // G |- lhs -> rhs and G |- rhs -> lhs (usually closed)
};

Equiv equiv(const ProofPtr& lr, const ProofPtr& rl);
Equiv equiv_refl(const FormulaPtr& a);
Equiv equiv_sym(const Equiv& e);
Equiv equiv_trans(const Equiv& a, const Equiv& b);
Equiv equiv_neg(const Equiv& e);                       // lhs^ == rhs^
Equiv equiv_tensor(const Equiv& l, const Equiv& r);    // congruence under *
Equiv equiv_lolly(const Equiv& l, const Equiv& r);     // congruence under ->

}  // namespace alw::build

#endif
