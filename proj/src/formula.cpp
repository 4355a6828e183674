#include "alw/formula.hpp"

#include <random>
#include <sstream>

namespace alw {

namespace {
FormulaPtr make(FKind k, std::string a, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->atom = std::move(a);
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}
}  // namespace

FormulaPtr f_atom(std::string name) { return make(FKind::Atom, std::move(name), nullptr, nullptr); }
FormulaPtr f_bot() {
  static const FormulaPtr b = make(FKind::Bottom, "", nullptr, nullptr);
  return b;
}
FormulaPtr f_top() {
  static const FormulaPtr t = make(FKind::Top, "", nullptr, nullptr);
  return t;
}
FormulaPtr f_tensor(FormulaPtr l, FormulaPtr r) { return make(FKind::Tensor, "", std::move(l), std::move(r)); }
FormulaPtr f_lolly(FormulaPtr l, FormulaPtr r) { return make(FKind::Lolly, "", std::move(l), std::move(r)); }
FormulaPtr f_neg(FormulaPtr a) { return make(FKind::Neg, "", std::move(a), nullptr); }
FormulaPtr f_dneg(FormulaPtr a) {
  return f_lolly(f_lolly(std::move(a), f_bot()), f_bot());
}
FormulaPtr f_cap(FormulaPtr l, FormulaPtr r) { return make(FKind::Cap, "", std::move(l), std::move(r)); }
FormulaPtr f_cup(FormulaPtr l, FormulaPtr r) { return make(FKind::Cup, "", std::move(l), std::move(r)); }
FormulaPtr f_simp(FormulaPtr l, FormulaPtr r) { return make(FKind::Simp, "", std::move(l), std::move(r)); }
FormulaPtr f_nor(FormulaPtr l, FormulaPtr r) { return make(FKind::Nor, "", std::move(l), std::move(r)); }

int compare(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == FKind::Atom) return a->atom.compare(b->atom);
  if (a->left) {
    if (int c = compare(a->left, b->left)) return c;
  }
  if (a->right) {
    if (int c = compare(a->right, b->right)) return c;
  }
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }

bool is_core(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Bottom:
      return true;
    case FKind::Tensor:
    case FKind::Lolly:
      return is_core(f->left) && is_core(f->right);
    default:
      return false;
  }
}

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Bottom:
      return f;
    case FKind::Tensor: {
      auto l = desugar(f->left), r = desugar(f->right);
      if (l == f->left && r == f->right) return f;
      return f_tensor(l, r);
    }
    case FKind::Lolly: {
      auto l = desugar(f->left), r = desugar(f->right);
      if (l == f->left && r == f->right) return f;
      return f_lolly(l, r);
    }
    case FKind::Neg:
      return f_lolly(desugar(f->left), f_bot());
    case FKind::Top:
      return f_lolly(f_bot(), f_bot());
    case FKind::Cap: {
      auto l = desugar(f->left), r = desugar(f->right);
      return f_tensor(l, f_lolly(l, r));
    }
    case FKind::Cup: {
      auto l = desugar(f->left), r = desugar(f->right);
      return f_lolly(f_lolly(r, l), l);
    }
    case FKind::Simp: {
      auto l = desugar(f->left), r = desugar(f->right);
      return f_lolly(l, f_tensor(l, r));
    }
    case FKind::Nor: {
      auto l = desugar(f->left), r = desugar(f->right);
      return f_tensor(f_lolly(l, f_bot()), f_lolly(r, l));
    }
  }
  return f;  // unreachable
}

namespace {
void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->kind == FKind::Atom) { out.insert(f->atom); return; }
  if (f->left) collect_vars(f->left, out);
  if (f->right) collect_vars(f->right, out);
}
}  // namespace

std::vector<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

FormulaPtr substitute(const FormulaPtr& f, const SubstMap& sigma) {
  switch (f->kind) {
    case FKind::Atom: {
      auto it = sigma.find(f->atom);
      return it == sigma.end() ? f : it->second;
    }
    case FKind::Bottom:
    case FKind::Top:
      return f;
    case FKind::Neg: {
      auto l = substitute(f->left, sigma);
      return l == f->left ? f : f_neg(l);
    }
    default: {
      auto l = substitute(f->left, sigma);
      auto r = substitute(f->right, sigma);
      if (l == f->left && r == f->right) return f;
      return make(f->kind, "", l, r);
    }
  }
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const FormulaPtr& g) {
  return substitute(f, SubstMap{{var, g}});
}

size_t connective_count(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Bottom:
    case FKind::Top:
      return 0;
    case FKind::Neg:
      return 1 + connective_count(f->left);
    default:
      return 1 + connective_count(f->left) + connective_count(f->right);
  }
}

// ---------------------------------------------------------------- negatives

std::optional<NegWitness> negative_witness(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Bottom:
      return NegWitness{NegWitness::Clause::IsBottom, f, {}};
    case FKind::Tensor: {
      auto l = negative_witness(f->left);
      if (!l) return std::nullopt;
      auto r = negative_witness(f->right);
      if (!r) return std::nullopt;
      return NegWitness{NegWitness::Clause::TensorOfMembers, f, {*l, *r}};
    }
    case FKind::Lolly: {
      auto r = negative_witness(f->right);
      if (!r) return std::nullopt;
      return NegWitness{NegWitness::Clause::LollyIntoMember, f, {*r}};
    }
    default:
      return std::nullopt;
  }
}

bool is_negative(const FormulaPtr& f) { return negative_witness(f).has_value(); }

namespace {
void witness_lines(const NegWitness& w, int depth, std::ostringstream& os) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << to_string(w.formula) << "  [";
  switch (w.clause) {
    case NegWitness::Clause::IsBottom: os << "bot"; break;
    case NegWitness::Clause::TensorOfMembers: os << "tensor of members"; break;
    case NegWitness::Clause::LollyIntoMember: os << "implication into member"; break;
  }
  os << "]\n";
  for (const auto& c : w.children) witness_lines(c, depth + 1, os);
}
}  // namespace

std::string to_string(const NegWitness& w) {
  std::ostringstream os;
  witness_lines(w, 0, os);
  return os.str();
}

// ---------------------------------------------------------------- printing

namespace {
// grammar levels: 0 = imp, 1 = mid, 2 = ten, 3 = post
int level_of(FKind k) {
  switch (k) {
    case FKind::Lolly:
    case FKind::Simp:
      return 0;
    case FKind::Cap:
    case FKind::Cup:
    case FKind::Nor:
      return 1;
    case FKind::Tensor:
      return 2;
    case FKind::Neg:
      return 3;
    default:
      return 4;  // atoms and constants
  }
}

void print_rec(const FormulaPtr& f, int required, bool full, std::ostringstream& os) {
  int lvl = level_of(f->kind);
  bool parens = full ? (lvl < 4) : (lvl < required);
  if (parens) os << '(';
  switch (f->kind) {
    case FKind::Atom: os << f->atom; break;
    case FKind::Bottom: os << "bot"; break;
    case FKind::Top: os << "top"; break;
    case FKind::Neg:
      print_rec(f->left, 3, full, os);  // "^" stacks: A^^ needs no parens
      os << '^';
      break;
    case FKind::Tensor:
      print_rec(f->left, 2, full, os);
      os << " * ";
      print_rec(f->right, 3, full, os);
      break;
    case FKind::Cap:
    case FKind::Cup:
    case FKind::Nor:
      print_rec(f->left, 2, full, os);
      os << (f->kind == FKind::Cap ? " & " : f->kind == FKind::Cup ? " | " : " # ");
      print_rec(f->right, 2, full, os);
      break;
    case FKind::Lolly:
    case FKind::Simp:
      print_rec(f->left, 1, full, os);
      os << (f->kind == FKind::Lolly ? " -> " : " => ");
      print_rec(f->right, 0, full, os);
      break;
  }
  if (parens) os << ')';
}

FormulaPtr resugar_neg(const FormulaPtr& f) {
  if (f->kind == FKind::Lolly && f->right->kind == FKind::Bottom)
    return f_neg(resugar_neg(f->left));
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Bottom:
    case FKind::Top:
      return f;
    case FKind::Neg:
      return f_neg(resugar_neg(f->left));
    default:
      return make(f->kind, "", resugar_neg(f->left), resugar_neg(f->right));
  }
}
}  // namespace

std::string to_string(const FormulaPtr& f, PrintMode mode) {
  std::ostringstream os;
  print_rec(f, 0, mode == PrintMode::FullParens, os);
  return os.str();
}

std::string to_string_core(const FormulaPtr& f, PrintMode mode) {
  return to_string(resugar_neg(f), mode);
}

// ------------------------------------------------------------ random trees

namespace {
struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  uint64_t below(uint64_t n) { return g() % n; }  // tiny bias, irrelevant here
  bool chance(int num, int den) { return below(den) < (uint64_t)num; }
};

FormulaPtr random_leaf(Rng& rng, const std::vector<std::string>& vars) {
  uint64_t k = rng.below(vars.size() + 1);
  if (k == vars.size()) return f_bot();
  return f_atom(vars[k]);
}

FormulaPtr random_rec(Rng& rng, size_t budget, const std::vector<std::string>& vars) {
  if (budget == 0 || rng.chance(1, 4)) return random_leaf(rng, vars);
  size_t l = rng.below(budget);
  size_t r = budget - 1 - l;
  auto a = random_rec(rng, l, vars);
  auto b = random_rec(rng, r, vars);
  return rng.chance(1, 2) ? f_tensor(a, b) : f_lolly(a, b);
}

FormulaPtr random_neg_rec(Rng& rng, size_t budget, const std::vector<std::string>& vars) {
  if (budget == 0) return f_bot();
  switch (rng.below(3)) {
    case 0:
      return f_bot();
    case 1: {
      size_t l = rng.below(budget);
      return f_tensor(random_neg_rec(rng, l, vars),
                      random_neg_rec(rng, budget - 1 - l, vars));
    }
    default: {
      size_t l = rng.below(budget);
      return f_lolly(random_rec(rng, l, vars),
                     random_neg_rec(rng, budget - 1 - l, vars));
    }
  }
}
}  // namespace

FormulaPtr random_formula(uint64_t seed, size_t max_connectives,
                          const std::vector<std::string>& vars) {
  Rng rng(seed);
  return random_rec(rng, max_connectives, vars);
}

FormulaPtr random_negative_formula(uint64_t seed, size_t max_connectives,
                                   const std::vector<std::string>& vars) {
  Rng rng(seed);
  return random_neg_rec(rng, max_connectives, vars);
}

}  // namespace alw
