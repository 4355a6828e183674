#include "alw/build.hpp"

#include <stdexcept>

namespace alw::build {

namespace {
[[noreturn]] void misuse(const std::string& what) { throw std::logic_error("build: " + what); }

const FormulaPtr& concl_of(const ProofPtr& t) { return t->conclusion.conclusion; }
}  // namespace

ProofPtr hyp(const FormulaPtr& a) { return axiom_node(Schema::ASM, Sequent({a}, a)); }

ProofPtr assume(std::vector<FormulaPtr> extra, const FormulaPtr& a) {
  extra.push_back(a);
  return axiom_node(Schema::ASM, Sequent(std::move(extra), a));
}

ProofPtr axiom_efq(const FormulaPtr& concl) {
  return axiom_node(Schema::EFQ, Sequent({f_bot()}, concl));
}

ProofPtr axiom_con(const FormulaPtr& a) {
  return axiom_node(Schema::CON, Sequent({a}, f_tensor(a, a)));
}

ProofPtr axiom_dne(const FormulaPtr& a) {
  return axiom_node(Schema::DNE, Sequent({f_dneg(a)}, a));
}

ProofPtr axiom_cwc(const FormulaPtr& a, const FormulaPtr& b) {
  return axiom_node(Schema::CWC,
                    Sequent({a, f_lolly(a, b)}, f_tensor(b, f_lolly(b, a))));
}

ProofPtr lolly_i(const FormulaPtr& a, const ProofPtr& t) {
  std::vector<FormulaPtr> ctx = t->conclusion.context;
  if (!ms_remove_one(ctx, a))
    misuse("lolly_i: " + to_string(a) + " is not in the context of " +
           to_string(t->conclusion));
  return rule_node(RuleName::LollyI, Sequent(std::move(ctx), f_lolly(a, concl_of(t))), {t});
}

ProofPtr mp(const ProofPtr& arg, const ProofPtr& fn) {
  const FormulaPtr& f = concl_of(fn);
  if (f->kind != FKind::Lolly || !equal(f->left, concl_of(arg)))
    misuse("mp: " + to_string(concl_of(arg)) + " does not feed " + to_string(f));
  return rule_node(RuleName::LollyE,
                   Sequent(ms_union(arg->conclusion.context, fn->conclusion.context), f->right),
                   {arg, fn});
}

ProofPtr tensor_i(const ProofPtr& l, const ProofPtr& r) {
  return rule_node(RuleName::TensorI,
                   Sequent(ms_union(l->conclusion.context, r->conclusion.context),
                           f_tensor(concl_of(l), concl_of(r))),
                   {l, r});
}

ProofPtr tensor_e(const ProofPtr& tens, const ProofPtr& cont) {
  const FormulaPtr& t = concl_of(tens);
  if (t->kind != FKind::Tensor) misuse("tensor_e: premise proves no tensor");
  std::vector<FormulaPtr> delta = cont->conclusion.context;
  if (!ms_remove_one(delta, t->left) || !ms_remove_one(delta, t->right))
    misuse("tensor_e: continuation lacks the components of " + to_string(t));
  return rule_node(RuleName::TensorE,
                   Sequent(ms_union(tens->conclusion.context, delta), concl_of(cont)),
                   {tens, cont});
}

ProofPtr cut(const ProofPtr& ta, const ProofPtr& user) {
  return mp(ta, lolly_i(concl_of(ta), user));
}

ProofPtr identity(const FormulaPtr& a) { return lolly_i(a, hyp(a)); }

ProofPtr k_comb(const FormulaPtr& a, const FormulaPtr& b) {
  return lolly_i(a, lolly_i(b, assume({b}, a)));
}

ProofPtr compose(const ProofPtr& tab, const ProofPtr& tbc) {
  const FormulaPtr& f = concl_of(tab);
  if (f->kind != FKind::Lolly) misuse("compose: first argument proves no implication");
  const FormulaPtr& a = f->left;
  return lolly_i(a, mp(mp(hyp(a), tab), tbc));
}

ProofPtr flip(const ProofPtr& t) {
  const FormulaPtr& f = concl_of(t);
  if (f->kind != FKind::Lolly || f->right->kind != FKind::Lolly)
    misuse("flip needs a -> b -> c");
  const FormulaPtr& a = f->left;
  const FormulaPtr& b = f->right->left;
  return lolly_i(b, lolly_i(a, mp(hyp(b), mp(hyp(a), t))));
}

ProofPtr dni(const FormulaPtr& a) {
  FormulaPtr na = f_lolly(a, f_bot());
  return lolly_i(a, lolly_i(na, mp(hyp(a), hyp(na))));
}

ProofPtr dni_of(const ProofPtr& t) { return mp(t, dni(concl_of(t))); }

ProofPtr efq_impl(const FormulaPtr& c) { return lolly_i(f_bot(), axiom_efq(c)); }

ProofPtr efq_to(const ProofPtr& bot_proof, const FormulaPtr& c) {
  if (concl_of(bot_proof)->kind != FKind::Bottom) misuse("efq_to wants a proof of bot");
  return mp(bot_proof, efq_impl(c));
}

ProofPtr contrapose(const ProofPtr& t) {
  const FormulaPtr& f = concl_of(t);
  if (f->kind != FKind::Lolly) misuse("contrapose needs an implication");
  FormulaPtr nb = f_lolly(f->right, f_bot());
  return lolly_i(nb, lolly_i(f->left, mp(mp(hyp(f->left), t), hyp(nb))));
}

ProofPtr curry(const ProofPtr& t) {
  const FormulaPtr& f = concl_of(t);
  if (f->kind != FKind::Lolly || f->left->kind != FKind::Tensor)
    misuse("curry needs (a*b) -> c");
  const FormulaPtr& a = f->left->left;
  const FormulaPtr& b = f->left->right;
  return lolly_i(a, lolly_i(b, mp(tensor_i(hyp(a), hyp(b)), t)));
}

ProofPtr uncurry(const ProofPtr& t) {
  const FormulaPtr& f = concl_of(t);
  if (f->kind != FKind::Lolly || f->right->kind != FKind::Lolly)
    misuse("uncurry needs a -> b -> c");
  const FormulaPtr& a = f->left;
  const FormulaPtr& b = f->right->left;
  FormulaPtr ab = f_tensor(a, b);
  return lolly_i(ab, tensor_e(hyp(ab), mp(hyp(b), mp(hyp(a), t))));
}

ProofPtr tensor_comm(const FormulaPtr& a, const FormulaPtr& b) {
  FormulaPtr ab = f_tensor(a, b);
  return lolly_i(ab, tensor_e(hyp(ab), tensor_i(hyp(b), hyp(a))));
}

ProofPtr cwc_thm(const FormulaPtr& a, const FormulaPtr& b) {
  return lolly_i(a, lolly_i(f_lolly(a, b), axiom_cwc(a, b)));
}

ProofPtr cwc_pair(const ProofPtr& ta, const ProofPtr& tab) {
  const FormulaPtr& f = concl_of(tab);
  if (f->kind != FKind::Lolly || !equal(f->left, concl_of(ta)))
    misuse("cwc_pair: second argument must prove a -> b for the first's a");
  return mp(tab, mp(ta, cwc_thm(f->left, f->right)));
}

ProofPtr cite(const LemmaBank& bank, const std::string& id, const SubstMap& sigma) {
  auto it = bank.find(id);
  if (it == bank.end()) misuse("cite: unknown lemma " + id);
  // record a substitution total on the theorem's variables, so that proof
  // substitution composes by rewriting the recorded ranges
  SubstMap total = sigma;
  for (const auto& v : variables(it->second.theorem))
    if (!total.count(v)) total[v] = f_atom(v);
  return lemma_node(id, std::move(total), Sequent({}, substitute(it->second.theorem, sigma)));
}

// ------------------------------------------------------------- equivalences

Equiv equiv(const ProofPtr& lr, const ProofPtr& rl) {
  const FormulaPtr& f = concl_of(lr);
  const FormulaPtr& g = concl_of(rl);
  if (f->kind != FKind::Lolly || g->kind != FKind::Lolly || !equal(f->left, g->right) ||
      !equal(f->right, g->left))
    misuse("equiv: the two directions do not match");
  return Equiv{f->left, f->right, lr, rl};
}

Equiv equiv_refl(const FormulaPtr& a) { return Equiv{a, a, identity(a), identity(a)}; }

Equiv equiv_sym(const Equiv& e) { return Equiv{e.rhs, e.lhs, e.rl, e.lr}; }

Equiv equiv_trans(const Equiv& a, const Equiv& b) {
  if (!equal(a.rhs, b.lhs)) misuse("equiv_trans: endpoints do not meet");
  return Equiv{a.lhs, b.rhs, compose(a.lr, b.lr), compose(b.rl, a.rl)};
}

Equiv equiv_neg(const Equiv& e) {
  return Equiv{f_lolly(e.lhs, f_bot()), f_lolly(e.rhs, f_bot()), contrapose(e.rl),
               contrapose(e.lr)};
}

namespace {
ProofPtr tensor_mono(const Equiv& l, const Equiv& r, bool forward) {
  const FormulaPtr& la = forward ? l.lhs : l.rhs;
  const FormulaPtr& ra = forward ? r.lhs : r.rhs;
  const ProofPtr& lt = forward ? l.lr : l.rl;
  const ProofPtr& rt = forward ? r.lr : r.rl;
  FormulaPtr from = f_tensor(la, ra);
  return lolly_i(from,
                 tensor_e(hyp(from), tensor_i(mp(hyp(la), lt), mp(hyp(ra), rt))));
}
}  // namespace

Equiv equiv_tensor(const Equiv& l, const Equiv& r) {
  return Equiv{f_tensor(l.lhs, r.lhs), f_tensor(l.rhs, r.rhs), tensor_mono(l, r, true),
               tensor_mono(l, r, false)};
}

namespace {
// (la -> ra) -> (lb -> rb) given lb ~ la (contravariant) and ra ~ rb
ProofPtr lolly_mono(const FormulaPtr& la, const FormulaPtr& ra, const FormulaPtr& lb,
                    const FormulaPtr& rb, const ProofPtr& left_back, const ProofPtr& right_fwd) {
  FormulaPtr from = f_lolly(la, ra);
  return lolly_i(from,
                 lolly_i(lb, mp(mp(mp(hyp(lb), left_back), hyp(from)), right_fwd)));
}
}  // namespace

Equiv equiv_lolly(const Equiv& l, const Equiv& r) {
  return Equiv{f_lolly(l.lhs, r.lhs), f_lolly(l.rhs, r.rhs),
               lolly_mono(l.lhs, r.lhs, l.rhs, r.rhs, l.rl, r.lr),
               lolly_mono(l.rhs, r.rhs, l.lhs, r.lhs, l.lr, r.rl)};
}

}  // namespace alw::build
