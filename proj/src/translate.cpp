#include "alw/translate.hpp"

#include <stdexcept>

namespace alw {

namespace {

FormulaPtr kolmogorov(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom: return f_dneg(f);
    case FKind::Bottom: return f;
    case FKind::Tensor: return f_dneg(f_tensor(kolmogorov(f->left), kolmogorov(f->right)));
    case FKind::Lolly: return f_dneg(f_lolly(kolmogorov(f->left), kolmogorov(f->right)));
    default: throw std::invalid_argument("translate expects a core formula");
  }
}

FormulaPtr goedel_pre(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Bottom: return f;
    case FKind::Tensor: return f_tensor(goedel_pre(f->left), goedel_pre(f->right));
    case FKind::Lolly: return f_lolly(goedel_pre(f->left), f_dneg(goedel_pre(f->right)));
    default: throw std::invalid_argument("translate expects a core formula");
  }
}

FormulaPtr goedel_simplified_pre(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Bottom: return f;
    case FKind::Tensor:
      return f_tensor(goedel_simplified_pre(f->left), goedel_simplified_pre(f->right));
    case FKind::Lolly:
      // the premise is not inductively translated
      return f_lolly(f->left, f_dneg(goedel_simplified_pre(f->right)));
    default: throw std::invalid_argument("translate expects a core formula");
  }
}

FormulaPtr gentzen(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom: return f_dneg(f);
    case FKind::Bottom: return f;
    case FKind::Tensor: return f_tensor(gentzen(f->left), gentzen(f->right));
    case FKind::Lolly: return f_lolly(gentzen(f->left), gentzen(f->right));
    default: throw std::invalid_argument("translate expects a core formula");
  }
}

FormulaPtr krivine_pre(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom: return f_lolly(f, f_bot());
    case FKind::Bottom: return f_lolly(f_bot(), f_bot());
    case FKind::Tensor:
      return f_lolly(f_lolly(krivine_pre(f->left), f_bot()), krivine_pre(f->right));
    case FKind::Lolly:
      return f_tensor(f_lolly(krivine_pre(f->left), f_bot()), krivine_pre(f->right));
    default: throw std::invalid_argument("translate expects a core formula");
  }
}

}  // namespace

FormulaPtr translate(Scheme s, const FormulaPtr& f) {
  switch (s) {
    case Scheme::Kolmogorov: return kolmogorov(f);
    case Scheme::GoedelPre: return goedel_pre(f);
    case Scheme::Goedel: return f_dneg(goedel_pre(f));
    case Scheme::GoedelSimplified: return f_dneg(goedel_simplified_pre(f));
    case Scheme::Gentzen: return gentzen(f);
    case Scheme::Glivenko: return f_dneg(f);
    case Scheme::KrivinePre: return krivine_pre(f);
    case Scheme::Krivine: return f_lolly(krivine_pre(f), f_bot());
  }
  throw std::logic_error("bad scheme");
}

std::optional<NegWitness> nt1_witness(Scheme s, const FormulaPtr& f) {
  return negative_witness(translate(s, f));
}

NegCommuteReport gentzen_neg_commutes(const FormulaPtr& f) {
  FormulaPtr lhs = translate(Scheme::Gentzen, f_lolly(f, f_bot()));
  FormulaPtr rhs = f_lolly(translate(Scheme::Gentzen, f), f_bot());
  return {equal(lhs, rhs), lhs, rhs};
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Kolmogorov: return "kolmogorov";
    case Scheme::GoedelPre: return "goedel-pre";
    case Scheme::Goedel: return "goedel";
    case Scheme::GoedelSimplified: return "goedel-simplified";
    case Scheme::Gentzen: return "gentzen";
    case Scheme::Glivenko: return "glivenko";
    case Scheme::KrivinePre: return "krivine-pre";
    case Scheme::Krivine: return "krivine";
  }
  return "?";
}

std::optional<Scheme> scheme_from_string(const std::string& s) {
  if (s == "kolmogorov" || s == "k") return Scheme::Kolmogorov;
  if (s == "goedel-pre") return Scheme::GoedelPre;
  if (s == "goedel") return Scheme::Goedel;
  if (s == "goedel-simplified") return Scheme::GoedelSimplified;
  if (s == "gentzen") return Scheme::Gentzen;
  if (s == "glivenko") return Scheme::Glivenko;
  if (s == "krivine-pre") return Scheme::KrivinePre;
  if (s == "krivine") return Scheme::Krivine;
  return std::nullopt;
}

std::vector<Scheme> all_schemes() {
  return {Scheme::Kolmogorov, Scheme::GoedelPre,  Scheme::Goedel, Scheme::GoedelSimplified,
          Scheme::Gentzen,    Scheme::Glivenko,   Scheme::KrivinePre, Scheme::Krivine};
}

}  // namespace alw
