#include "alw/proof.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace alw {

std::string to_string(RuleName r) {
  switch (r) {
    case RuleName::LollyI: return "LollyI";
    case RuleName::LollyE: return "LollyE";
    case RuleName::TensorI: return "TensorI";
    case RuleName::TensorE: return "TensorE";
  }
  return "?";
}

std::optional<RuleName> rule_from_string(const std::string& s) {
  if (s == "LollyI") return RuleName::LollyI;
  if (s == "LollyE") return RuleName::LollyE;
  if (s == "TensorI") return RuleName::TensorI;
  if (s == "TensorE") return RuleName::TensorE;
  return std::nullopt;
}

ProofPtr rule_node(RuleName r, Sequent concl, std::vector<ProofPtr> premises) {
  auto n = std::make_shared<ProofNode>();
  n->kind = ProofNode::Kind::Rule;
  n->rule = r;
  n->conclusion = std::move(concl);
  n->premises = std::move(premises);
  return n;
}

ProofPtr axiom_node(Schema s, Sequent concl) {
  auto n = std::make_shared<ProofNode>();
  n->kind = ProofNode::Kind::Axiom;
  n->schema = s;
  n->conclusion = std::move(concl);
  return n;
}

ProofPtr lemma_node(std::string id, SubstMap subst, Sequent concl) {
  auto n = std::make_shared<ProofNode>();
  n->kind = ProofNode::Kind::Lemma;
  n->lemma_id = std::move(id);
  n->subst = std::move(subst);
  n->conclusion = std::move(concl);
  return n;
}

// ---------------------------------------------------------------- matching

std::optional<AxiomMatch> match_axiom(const Sequent& s, Schema schema) {
  auto gamma_minus = [&](std::initializer_list<FormulaPtr> used)
      -> std::optional<std::vector<FormulaPtr>> {
    std::vector<FormulaPtr> g = s.context;
    for (const auto& f : used)
      if (!ms_remove_one(g, f)) return std::nullopt;
    return g;
  };
  const FormulaPtr& c = s.conclusion;
  switch (schema) {
    case Schema::ASM: {
      if (auto g = gamma_minus({c})) return AxiomMatch{c, nullptr, *g};
      return std::nullopt;
    }
    case Schema::CON: {
      if (c->kind != FKind::Tensor || !equal(c->left, c->right)) return std::nullopt;
      if (auto g = gamma_minus({c->left})) return AxiomMatch{c->left, nullptr, *g};
      return std::nullopt;
    }
    case Schema::EFQ: {
      if (auto g = gamma_minus({f_bot()})) return AxiomMatch{c, nullptr, *g};
      return std::nullopt;
    }
    case Schema::DNE: {
      if (auto g = gamma_minus({f_dneg(c)})) return AxiomMatch{c, nullptr, *g};
      return std::nullopt;
    }
    case Schema::CWC: {
      // conclusion must be B * (B -> A); the pair (A, B) is then determined
      if (c->kind != FKind::Tensor) return std::nullopt;
      const FormulaPtr& b = c->left;
      const FormulaPtr& imp = c->right;
      if (imp->kind != FKind::Lolly || !equal(imp->left, b)) return std::nullopt;
      const FormulaPtr& a = imp->right;
      if (auto g = gamma_minus({a, f_lolly(a, b)})) return AxiomMatch{a, b, *g};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- checking

namespace {

struct Checker {
  CalculusId calc;
  const LemmaBank& bank;
  std::optional<CheckError> error;
  std::vector<size_t> path;

  bool fail(const std::string& kind, const std::string& detail) {
    error = CheckError{path, kind, detail};
    return false;
  }

  bool expect_context(const Sequent& got, const std::vector<FormulaPtr>& want) {
    if (got.context.size() == want.size()) {
      bool ok = true;
      for (size_t i = 0; i < want.size(); ++i)
        if (!equal(got.context[i], want[i])) { ok = false; break; }
      if (ok) return true;
    }
    std::ostringstream os;
    os << "expected context {";
    for (size_t i = 0; i < want.size(); ++i)
      os << (i ? ", " : "") << to_string(want[i]);
    os << "}, actual {";
    for (size_t i = 0; i < got.context.size(); ++i)
      os << (i ? ", " : "") << to_string(got.context[i]);
    os << "}";
    return fail("context-mismatch", os.str());
  }

  bool check(const ProofNode& n) {
    switch (n.kind) {
      case ProofNode::Kind::Axiom: {
        if (!admitted_schemas(calc).count(n.schema))
          return fail("schema-not-in-calculus",
                      to_string(n.schema) + " is not available in " + to_string(calc));
        if (!match_axiom(n.conclusion, n.schema))
          return fail("axiom-mismatch", to_string(n.conclusion) +
                                            " is not an instance of " + to_string(n.schema));
        return true;
      }
      case ProofNode::Kind::Lemma: {
        auto it = bank.find(n.lemma_id);
        if (it == bank.end()) return fail("unknown-lemma", n.lemma_id);
        if (!subcalculus(it->second.calculus, calc))
          return fail("lemma-calculus",
                      n.lemma_id + " is verified in " + to_string(it->second.calculus) +
                          ", not a subcalculus of " + to_string(calc));
        FormulaPtr want = substitute(it->second.theorem, n.subst);
        if (!equal(n.conclusion.conclusion, want))
          return fail("substitution-mismatch",
                      "expected " + to_string(want) + ", got " +
                          to_string(n.conclusion.conclusion));
        return true;  // any context G is fine
      }
      case ProofNode::Kind::Rule:
        break;
    }

    size_t arity = n.rule == RuleName::LollyI ? 1 : 2;
    if (n.premises.size() != arity)
      return fail("wrong-arity", to_string(n.rule) + " takes " + std::to_string(arity) +
                                     " premise(s), got " + std::to_string(n.premises.size()));
    for (size_t i = 0; i < n.premises.size(); ++i) {
      path.push_back(i);
      bool ok = check(*n.premises[i]);
      path.pop_back();
      if (!ok) return false;
    }

    const Sequent& concl = n.conclusion;
    switch (n.rule) {
      case RuleName::LollyI: {
        const Sequent& p = n.premises[0]->conclusion;
        if (concl.conclusion->kind != FKind::Lolly)
          return fail("rule-mismatch", "LollyI conclusion must be an implication");
        const FormulaPtr& a = concl.conclusion->left;
        if (!equal(p.conclusion, concl.conclusion->right))
          return fail("rule-mismatch", "premise proves " + to_string(p.conclusion) +
                                           ", conclusion needs " +
                                           to_string(concl.conclusion->right));
        return expect_context(p, ms_union(concl.context, {a}));
      }
      case RuleName::LollyE: {
        const Sequent& p1 = n.premises[0]->conclusion;
        const Sequent& p2 = n.premises[1]->conclusion;
        if (p2.conclusion->kind != FKind::Lolly)
          return fail("rule-mismatch", "second premise of LollyE must prove an implication");
        if (!equal(p2.conclusion->left, p1.conclusion))
          return fail("rule-mismatch", "implication premise expects " +
                                           to_string(p2.conclusion->left) + ", argument proves " +
                                           to_string(p1.conclusion));
        if (!equal(p2.conclusion->right, concl.conclusion))
          return fail("rule-mismatch", "implication yields " + to_string(p2.conclusion->right) +
                                           ", conclusion states " + to_string(concl.conclusion));
        Sequent got = concl;
        return expect_context(got, ms_union(p1.context, p2.context));
      }
      case RuleName::TensorI: {
        const Sequent& p1 = n.premises[0]->conclusion;
        const Sequent& p2 = n.premises[1]->conclusion;
        FormulaPtr want = f_tensor(p1.conclusion, p2.conclusion);
        if (!equal(concl.conclusion, want))
          return fail("rule-mismatch",
                      "TensorI yields " + to_string(want) + ", conclusion states " +
                          to_string(concl.conclusion));
        Sequent got = concl;
        return expect_context(got, ms_union(p1.context, p2.context));
      }
      case RuleName::TensorE: {
        const Sequent& p1 = n.premises[0]->conclusion;
        const Sequent& p2 = n.premises[1]->conclusion;
        if (p1.conclusion->kind != FKind::Tensor)
          return fail("rule-mismatch", "first premise of TensorE must prove a tensor");
        const FormulaPtr& a = p1.conclusion->left;
        const FormulaPtr& b = p1.conclusion->right;
        if (!equal(p2.conclusion, concl.conclusion))
          return fail("rule-mismatch", "TensorE conclusion must restate the second premise's");
        std::vector<FormulaPtr> delta = p2.context;
        if (!ms_remove_one(delta, a) || !ms_remove_one(delta, b))
          return fail("rule-mismatch",
                      "second premise context must contain the components " + to_string(a) +
                          " and " + to_string(b));
        Sequent got = concl;
        return expect_context(got, ms_union(p1.context, delta));
      }
    }
    return true;
  }
};

}  // namespace

std::optional<CheckError> check_proof(const ProofPtr& t, CalculusId c, const LemmaBank& bank) {
  Checker ck{c, bank, std::nullopt, {}};
  ck.check(*t);
  return ck.error;
}

std::string to_string(const CheckError& e) {
  std::ostringstream os;
  os << e.kind << " at node /";
  for (size_t i : e.path) os << i << '/';
  os << ": " << e.detail;
  return os.str();
}

// ------------------------------------------------------------ transformers

ProofPtr weaken_proof(const ProofPtr& t, const FormulaPtr& a) {
  auto n = std::make_shared<ProofNode>(*t);
  n->conclusion = Sequent(ms_union(t->conclusion.context, {a}), t->conclusion.conclusion);
  if (!n->premises.empty()) {
    // thread down the first premise; for LollyI/TensorE this is the side
    // whose context is G, so the arithmetic stays balanced
    n->premises[0] = weaken_proof(n->premises[0], a);
  }
  return n;
}

ProofPtr substitute_proof(const ProofPtr& t, const SubstMap& sigma) {
  auto n = std::make_shared<ProofNode>(*t);
  std::vector<FormulaPtr> ctx;
  ctx.reserve(t->conclusion.context.size());
  for (const auto& f : t->conclusion.context) ctx.push_back(substitute(f, sigma));
  n->conclusion = Sequent(std::move(ctx), substitute(t->conclusion.conclusion, sigma));
  if (t->kind == ProofNode::Kind::Lemma) {
    SubstMap composed;
    for (const auto& [v, g] : t->subst) composed[v] = substitute(g, sigma);
    n->subst = std::move(composed);
  }
  for (auto& p : n->premises) p = substitute_proof(p, sigma);
  return n;
}

ProofPtr derived_rule_contraction(const ProofPtr& t, const FormulaPtr& a, CalculusId c) {
  if (!admitted_schemas(c).count(Schema::CON))
    throw std::invalid_argument("calculus " + to_string(c) + " has no contraction axiom");
  std::vector<FormulaPtr> ctx = t->conclusion.context;
  if (!ms_remove_one(ctx, a) || !ms_remove_one(ctx, a))
    throw std::invalid_argument("root context does not contain two copies of " + to_string(a));
  ProofPtr con = axiom_node(Schema::CON, Sequent({a}, f_tensor(a, a)));
  Sequent concl(ms_union(ctx, {a}), t->conclusion.conclusion);
  return rule_node(RuleName::TensorE, std::move(concl), {con, t});
}

// ------------------------------------------------------------------ file IO

namespace {

struct Sexp {
  // one of: list, symbol, string
  std::vector<Sexp> items;
  std::string text;
  enum class Kind { List, Symbol, String } kind = Kind::List;
};

struct SexpParser {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size()) {
      if (std::isspace((unsigned char)s[pos])) { ++pos; continue; }
      if (s[pos] == ';') {  // comment to end of line
        while (pos < s.size() && s[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
  }

  Sexp parse() {
    skip();
    if (pos >= s.size()) throw ParseError(pos, "unexpected end of proof file");
    if (s[pos] == '(') {
      ++pos;
      Sexp e;
      e.kind = Sexp::Kind::List;
      while (true) {
        skip();
        if (pos >= s.size()) throw ParseError(pos, "unterminated '('");
        if (s[pos] == ')') { ++pos; break; }
        e.items.push_back(parse());
      }
      return e;
    }
    if (s[pos] == '"') {
      size_t end = s.find('"', pos + 1);
      if (end == std::string::npos) throw ParseError(pos, "unterminated string");
      Sexp e;
      e.kind = Sexp::Kind::String;
      e.text = s.substr(pos + 1, end - pos - 1);
      pos = end + 1;
      return e;
    }
    size_t start = pos;
    while (pos < s.size() && !std::isspace((unsigned char)s[pos]) && s[pos] != '(' &&
           s[pos] != ')' && s[pos] != '"')
      ++pos;
    Sexp e;
    e.kind = Sexp::Kind::Symbol;
    e.text = s.substr(start, pos - start);
    return e;
  }
};

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, what); }

Sequent concl_of(const Sexp& e) {
  if (e.kind != Sexp::Kind::List || e.items.size() != 2 ||
      e.items[0].kind != Sexp::Kind::Symbol || e.items[0].text != "concl" ||
      e.items[1].kind != Sexp::Kind::String)
    bad("expected (concl \"<sequent>\")");
  return parse_sequent(e.items[1].text);
}

ProofPtr node_of(const Sexp& e) {
  if (e.kind != Sexp::Kind::List || e.items.empty() || e.items[0].kind != Sexp::Kind::Symbol)
    bad("expected a proof node");
  const std::string& head = e.items[0].text;
  if (head == "rule") {
    if (e.items.size() < 3) bad("rule node needs a name, a conclusion and premises");
    auto r = rule_from_string(e.items[1].text);
    if (!r) bad("unknown rule " + e.items[1].text);
    Sequent c = concl_of(e.items[2]);
    std::vector<ProofPtr> prems;
    for (size_t i = 3; i < e.items.size(); ++i) prems.push_back(node_of(e.items[i]));
    return rule_node(*r, std::move(c), std::move(prems));
  }
  if (head == "axiom") {
    if (e.items.size() != 3) bad("axiom node needs a schema and a conclusion");
    auto s = schema_from_string(e.items[1].text);
    if (!s) bad("unknown schema " + e.items[1].text);
    return axiom_node(*s, concl_of(e.items[2]));
  }
  if (head == "lemma") {
    if (e.items.size() != 4 || e.items[1].kind != Sexp::Kind::String)
      bad("lemma node needs an id, a substitution and a conclusion");
    SubstMap subst;
    const Sexp& pairs = e.items[2];
    if (pairs.kind != Sexp::Kind::List) bad("lemma substitution must be a list");
    for (const auto& p : pairs.items) {
      if (p.kind != Sexp::Kind::List || p.items.size() != 2 ||
          p.items[0].kind != Sexp::Kind::Symbol || p.items[1].kind != Sexp::Kind::String)
        bad("substitution entries look like (<var> \"<formula>\")");
      subst[p.items[0].text] = desugar(parse_formula(p.items[1].text));
    }
    return lemma_node(e.items[1].text, std::move(subst), concl_of(e.items[3]));
  }
  bad("unknown node head '" + head + "'");
}

void write_node(const ProofNode& n, int depth, std::ostringstream& os) {
  std::string ind(2 * depth, ' ');
  switch (n.kind) {
    case ProofNode::Kind::Axiom:
      os << ind << "(axiom " << to_string(n.schema) << " (concl \""
         << to_string(n.conclusion) << "\"))";
      return;
    case ProofNode::Kind::Lemma: {
      os << ind << "(lemma \"" << n.lemma_id << "\" (";
      bool first = true;
      for (const auto& [v, g] : n.subst) {
        if (!first) os << ' ';
        first = false;
        os << '(' << v << " \"" << to_string_core(g) << "\")";
      }
      os << ") (concl \"" << to_string(n.conclusion) << "\"))";
      return;
    }
    case ProofNode::Kind::Rule: {
      os << ind << "(rule " << to_string(n.rule) << " (concl \"" << to_string(n.conclusion)
         << "\")";
      for (const auto& p : n.premises) {
        os << '\n';
        write_node(*p, depth + 1, os);
      }
      os << ')';
      return;
    }
  }
}

}  // namespace

ProofFile parse_proof_file(const std::string& text) {
  SexpParser sp{text};
  Sexp top = sp.parse();
  if (top.kind != Sexp::Kind::List || top.items.size() != 7 ||
      top.items[0].text != "proof" || top.items[1].text != "id" ||
      top.items[2].kind != Sexp::Kind::String || top.items[3].text != "calculus" ||
      top.items[4].kind != Sexp::Kind::Symbol)
    bad("expected (proof id \"<id>\" calculus <C> (concl \"<sequent>\") <node>)");
  auto calc = calculus_from_string(top.items[4].text);
  if (!calc) bad("unknown calculus " + top.items[4].text);
  ProofFile pf;
  pf.id = top.items[2].text;
  pf.calculus = *calc;
  pf.statement = concl_of(top.items[5]);
  pf.root = node_of(top.items[6]);
  return pf;
}

ProofFile read_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open proof file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_proof_file(ss.str());
}

std::string to_string(const ProofFile& pf) {
  std::ostringstream os;
  os << "(proof id \"" << pf.id << "\" calculus " << to_string(pf.calculus) << " (concl \""
     << to_string(pf.statement) << "\")\n";
  write_node(*pf.root, 1, os);
  os << ")\n";
  return os.str();
}

}  // namespace alw
