#include "alw/pocrim.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace alw {

Pocrim make_pocrim_unchecked(std::string name, std::vector<std::string> names, int unit,
                             int zero, std::vector<std::vector<uint8_t>> leq,
                             std::vector<std::vector<int>> mult,
                             std::vector<std::vector<int>> imp) {
  Pocrim p;
  p.name_ = std::move(name);
  p.names_ = std::move(names);
  p.unit_ = unit;
  p.zero_ = zero;
  p.leq_ = std::move(leq);
  p.mult_ = std::move(mult);
  p.imp_ = std::move(imp);
  return p;
}

int Pocrim::element_index(const std::string& n) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return (int)i;
  return -1;
}

namespace {
// residual table, or nullopt with the first witness pair lacking a maximum
std::optional<std::vector<std::vector<int>>> residuals(
    const std::vector<std::vector<uint8_t>>& leq, const std::vector<std::vector<int>>& mult,
    std::pair<int, int>* fail) {
  int n = (int)leq.size();
  std::vector<std::vector<int>> imp(n, std::vector<int>(n, -1));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      std::vector<int> sat;
      for (int x = 0; x < n; ++x)
        if (leq[mult[x][y]][z]) sat.push_back(x);
      int best = -1;
      for (int m : sat) {
        bool is_max = true;
        for (int x : sat)
          if (!leq[x][m]) { is_max = false; break; }
        if (is_max) { best = m; break; }
      }
      if (best < 0) {
        if (fail) *fail = {y, z};
        return std::nullopt;
      }
      imp[y][z] = best;
    }
  return imp;
}
}  // namespace

Pocrim Pocrim::validate(const RawModel& raw) {
  int n = (int)raw.elements.size();
  auto name_of = [&](int i) { return raw.elements[i]; };
  auto err = [&](std::string law, std::vector<int> w, const std::string& msg) -> ModelError {
    std::vector<std::string> ws;
    for (int i : w) ws.push_back(name_of(i));
    return ModelError(std::move(law), std::move(ws), msg);
  };

  if (n == 0) throw ModelError("elements", {}, "empty element list");
  {
    std::set<std::string> seen(raw.elements.begin(), raw.elements.end());
    if ((int)seen.size() != n) throw ModelError("elements", {}, "duplicate element names");
  }
  int unit = -1, zero = -1;
  for (int i = 0; i < n; ++i) {
    if (raw.elements[i] == raw.unit) unit = i;
    if (raw.elements[i] == raw.zero) zero = i;
  }
  if (unit < 0) throw ModelError("unit", {}, "unit is not an element");
  if (zero < 0) throw ModelError("zero", {}, "zero is not an element");
  if (unit == zero && n != 1)
    throw ModelError("unit", {}, "unit = zero is allowed only for the one-element structure");

  const auto& leq = raw.leq;
  const auto& mult = raw.mult;
  if ((int)leq.size() != n || (int)mult.size() != n)
    throw ModelError("tables", {}, "tables are not square over the element list");
  for (int i = 0; i < n; ++i)
    if ((int)leq[i].size() != n || (int)mult[i].size() != n)
      throw ModelError("tables", {}, "tables are not square over the element list");

  // order laws
  for (int x = 0; x < n; ++x) {
    if (!leq[x][x]) throw err("order-reflexive", {x}, "x <= x fails");
    if (!leq[zero][x]) throw err("order-bounded", {x}, "0 <= x fails");
    if (!leq[x][unit]) throw err("order-bounded", {x}, "x <= 1 fails");
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x])
        throw err("order-antisymmetric", {x, y}, "x <= y and y <= x for distinct elements");
      for (int z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z])
          throw err("order-transitive", {x, y, z}, "x <= y <= z but not x <= z");
    }
  }
  // monoid laws
  for (int x = 0; x < n; ++x) {
    if (mult[x][unit] != x) throw err("monoid-unit", {x}, "x·1 != x");
    for (int y = 0; y < n; ++y) {
      if (mult[x][y] != mult[y][x]) throw err("monoid-commutative", {x, y}, "x·y != y·x");
      for (int z = 0; z < n; ++z) {
        if (mult[mult[x][y]][z] != mult[x][mult[y][z]])
          throw err("monoid-associative", {x, y, z}, "(x·y)·z != x·(y·z)");
        if (leq[x][y] && !leq[mult[x][z]][mult[y][z]])
          throw err("monoid-monotone", {x, y, z}, "x <= y but not x·z <= y·z");
      }
    }
  }
  // residuals
  std::pair<int, int> fail{-1, -1};
  auto imp = residuals(leq, mult, &fail);
  if (!imp)
    throw err("residuation", {fail.first, fail.second},
              "{x : x·y <= z} has no maximum; -> is undefined");
  if (raw.imp) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((*raw.imp)[x][y] != (*imp)[x][y])
          throw err("imp-table", {x, y},
                    "supplied x -> y disagrees with the residual " + name_of((*imp)[x][y]));
  }
  // x <= y iff x -> y = 1
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y] != ((*imp)[x][y] == unit))
        throw err("order-vs-imp", {x, y}, "x <= y iff x -> y = 1 fails");

  return make_pocrim_unchecked(raw.name, raw.elements, unit, zero, leq, mult, *imp);
}

// ----------------------------------------------------------- classification

Classification classify(const Pocrim& m) {
  Classification c;
  int n = m.order();
  c.is_hoop = true;
  for (int x = 0; x < n && c.is_hoop; ++x)
    for (int y = 0; y < n; ++y)
      if (m.mult(x, m.imp(x, y)) != m.mult(y, m.imp(y, x))) {
        c.is_hoop = false;
        c.hoop_witness = {x, y};
        break;
      }
  c.is_involutive = true;
  for (int x = 0; x < n; ++x)
    if (m.delta(x) != x) {
      c.is_involutive = false;
      c.involutive_witness = x;
      break;
    }
  c.is_idempotent = true;
  for (int x = 0; x < n; ++x)
    if (m.mult(x, x) != x) {
      c.is_idempotent = false;
      c.idempotent_witness = x;
      break;
    }
  return c;
}

// ----------------------------------------------------------------- semantics

int eval(const FormulaPtr& f, const Pocrim& m, const Interpretation& i) {
  switch (f->kind) {
    case FKind::Atom: {
      auto it = i.find(f->atom);
      if (it == i.end())
        throw std::invalid_argument("unassigned variable " + f->atom);
      return it->second;
    }
    case FKind::Bottom:
      return m.zero();
    case FKind::Tensor:
      return m.mult(eval(f->left, m, i), eval(f->right, m, i));
    case FKind::Lolly:
      return m.imp(eval(f->left, m, i), eval(f->right, m, i));
    default:
      throw std::invalid_argument("eval expects a core formula; desugar first");
  }
}

namespace {
// Odometer over |P|^k with the first variable slowest.
template <typename Fn>
std::optional<Countermodel> scan(const Pocrim& m, const std::vector<std::string>& vars, Fn f) {
  size_t k = vars.size();
  std::vector<int> v(k, 0);
  Interpretation interp;
  while (true) {
    for (size_t j = 0; j < k; ++j) interp[vars[j]] = v[j];
    if (auto val = f(interp)) return Countermodel{interp, *val};
    size_t j = k;
    while (j > 0) {
      if (++v[j - 1] < m.order()) break;
      v[j - 1] = 0;
      --j;
    }
    if (j == 0) return std::nullopt;
  }
}
}  // namespace

std::optional<Countermodel> find_countermodel(const Pocrim& m, const FormulaPtr& goal) {
  return scan(m, variables(goal), [&](const Interpretation& i) -> std::optional<int> {
    int v = eval(goal, m, i);
    if (v != m.unit()) return v;
    return std::nullopt;
  });
}

std::optional<Countermodel> sequent_countermodel(const Pocrim& m, const Sequent& s) {
  std::set<std::string> vs;
  for (const auto& f : s.context)
    for (auto& v : variables(f)) vs.insert(v);
  for (auto& v : variables(s.conclusion)) vs.insert(v);
  std::vector<std::string> vars(vs.begin(), vs.end());
  return scan(m, vars, [&](const Interpretation& i) -> std::optional<int> {
    int prod = m.unit();
    for (const auto& f : s.context) prod = m.mult(prod, eval(f, m, i));
    int concl = eval(s.conclusion, m, i);
    if (!m.leq(prod, concl)) return concl;
    return std::nullopt;
  });
}

bool axiom_schema_valid(const Pocrim& m, Schema s) {
  // identity route
  Classification c = classify(m);
  bool by_identity;
  switch (s) {
    case Schema::ASM:
    case Schema::EFQ: by_identity = true; break;
    case Schema::CWC: by_identity = c.is_hoop; break;
    case Schema::DNE: by_identity = c.is_involutive; break;
    case Schema::CON: by_identity = c.is_idempotent; break;
  }
  // schema-instance route: the defining sequent over all element pairs
  static const FormulaPtr A = f_atom("A"), B = f_atom("B");
  Sequent inst;
  switch (s) {
    case Schema::ASM: inst = Sequent({A}, A); break;
    case Schema::EFQ: inst = Sequent({f_bot()}, A); break;
    case Schema::CON: inst = Sequent({A}, f_tensor(A, A)); break;
    case Schema::DNE: inst = Sequent({f_dneg(A)}, A); break;
    case Schema::CWC:
      inst = Sequent({A, f_lolly(A, B)}, f_tensor(B, f_lolly(B, A)));
      break;
  }
  bool by_instances = sequent_valid(m, inst);
  assert(by_identity == by_instances && "schema validity routes disagree");
  return by_identity && by_instances;
}

std::set<CalculusId> models_calculus(const Pocrim& m) {
  std::set<CalculusId> out;
  for (CalculusId c : {CalculusId::ALi, CalculusId::ALc, CalculusId::LLi, CalculusId::LLc,
                       CalculusId::IL, CalculusId::CL}) {
    bool ok = true;
    for (Schema s : admitted_schemas(c))
      if (!axiom_schema_valid(m, s)) { ok = false; break; }
    if (ok) out.insert(c);
  }
  return out;
}

// ---------------------------------------------------------------- built-ins

namespace {
Pocrim chain_model(const std::string& name, const std::vector<std::string>& elems,
                   const std::vector<std::vector<std::string>>& mult_rows,
                   const std::vector<std::vector<std::string>>& imp_rows) {
  // elements listed in decreasing order: elems[i] <= elems[j] iff i >= j
  int n = (int)elems.size();
  RawModel raw;
  raw.name = name;
  raw.elements = elems;
  raw.unit = elems.front();
  raw.zero = elems.back();
  raw.leq.assign(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw.leq[i][j] = i >= j;
  auto idx = [&](const std::string& e) {
    for (int i = 0; i < n; ++i)
      if (elems[i] == e) return i;
    throw std::logic_error("bad builtin table");
  };
  raw.mult.assign(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> imp(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      raw.mult[i][j] = idx(mult_rows[i][j]);
      imp[i][j] = idx(imp_rows[i][j]);
    }
  raw.imp = imp;
  return Pocrim::validate(raw);
}
}  // namespace

const Pocrim& builtin_model(const std::string& name) {
  static const Pocrim l3 = chain_model(
      "L3", {"1", "a", "0"},
      {{"1", "a", "0"}, {"a", "0", "0"}, {"0", "0", "0"}},
      {{"1", "a", "0"}, {"1", "1", "a"}, {"1", "1", "1"}});
  static const Pocrim p4 = chain_model(
      "P4", {"1", "b", "c", "0"},
      {{"1", "b", "c", "0"}, {"b", "0", "0", "0"}, {"c", "0", "0", "0"}, {"0", "0", "0", "0"}},
      {{"1", "b", "c", "0"}, {"1", "1", "b", "b"}, {"1", "1", "1", "b"}, {"1", "1", "1", "1"}});
  static const Pocrim q4 = chain_model(
      "Q4", {"1", "p", "q", "0"},
      {{"1", "p", "q", "0"}, {"p", "p", "0", "0"}, {"q", "0", "0", "0"}, {"0", "0", "0", "0"}},
      {{"1", "p", "q", "0"}, {"1", "1", "q", "q"}, {"1", "1", "1", "p"}, {"1", "1", "1", "1"}});
  static const Pocrim q6 = chain_model(
      "Q6", {"1", "r", "s", "t", "u", "0"},
      {{"1", "r", "s", "t", "u", "0"},
       {"r", "r", "t", "t", "u", "0"},
       {"s", "t", "t", "t", "0", "0"},
       {"t", "t", "t", "t", "0", "0"},
       {"u", "u", "0", "0", "0", "0"},
       {"0", "0", "0", "0", "0", "0"}},
      {{"1", "r", "s", "t", "u", "0"},
       {"1", "1", "s", "s", "u", "0"},
       {"1", "1", "1", "r", "u", "u"},
       {"1", "1", "1", "1", "u", "u"},
       {"1", "1", "1", "1", "1", "s"},
       {"1", "1", "1", "1", "1", "1"}});
  if (name == "L3") return l3;
  if (name == "P4") return p4;
  if (name == "Q4") return q4;
  if (name == "Q6") return q6;
  throw std::invalid_argument("unknown builtin model: " + name);
}

std::vector<std::string> builtin_model_names() { return {"L3", "P4", "Q4", "Q6"}; }

// ------------------------------------------------------------ homomorphism

std::optional<HomViolation> check_homomorphism(const std::vector<int>& h, const Pocrim& src,
                                               const Pocrim& dst) {
  if ((int)h.size() != src.order())
    throw std::invalid_argument("map is not total on the source elements");
  if (h[src.unit()] != dst.unit()) return HomViolation{"unit", src.unit(), -1};
  if (h[src.zero()] != dst.zero()) return HomViolation{"zero", src.zero(), -1};
  for (int x = 0; x < src.order(); ++x)
    for (int y = 0; y < src.order(); ++y) {
      if (h[src.mult(x, y)] != dst.mult(h[x], h[y])) return HomViolation{"mult", x, y};
      if (h[src.imp(x, y)] != dst.imp(h[x], h[y])) return HomViolation{"imp", x, y};
    }
  return std::nullopt;
}

// ------------------------------------------------------------------ file IO

namespace {
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}
}  // namespace

RawModel parse_model(const std::string& text) {
  RawModel raw;
  std::istringstream in(text);
  std::string line;
  enum class Section { None, Leq, Mult, Imp } section = Section::None;
  std::map<std::string, int> idx;
  std::vector<std::vector<std::string>> leq_rows, mult_rows, imp_rows;
  auto target_rows = [&]() -> std::vector<std::vector<std::string>>& {
    return section == Section::Leq ? leq_rows : section == Section::Mult ? mult_rows : imp_rows;
  };
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& head = toks[0];
    if (head == "model") {
      if (toks.size() != 2) throw ModelError("format", {}, "model line needs a name");
      raw.name = toks[1];
    } else if (head == "elements") {
      raw.elements.assign(toks.begin() + 1, toks.end());
      for (size_t i = 0; i < raw.elements.size(); ++i) idx[raw.elements[i]] = (int)i;
    } else if (head == "unit") {
      if (toks.size() != 2) throw ModelError("format", {}, "unit line needs one element");
      raw.unit = toks[1];
    } else if (head == "zero") {
      if (toks.size() != 2) throw ModelError("format", {}, "zero line needs one element");
      raw.zero = toks[1];
    } else if (head == "leq") {
      section = Section::Leq;
    } else if (head == "mult") {
      section = Section::Mult;
    } else if (head == "imp") {
      section = Section::Imp;
    } else {
      if (section == Section::None)
        throw ModelError("format", {}, "row outside of a leq/mult/imp section: " + line);
      if (head.back() != ':')
        throw ModelError("format", {}, "rows look like \"x: v1 v2 ...\": " + line);
      std::vector<std::string> row(toks.begin(), toks.end());
      target_rows().push_back(std::move(row));
    }
  }
  int n = (int)raw.elements.size();
  if (n == 0) throw ModelError("format", {}, "missing elements line");
  auto index_of = [&](const std::string& e) {
    auto it = idx.find(e);
    if (it == idx.end()) throw ModelError("format", {}, "unknown element: " + e);
    return it->second;
  };
  auto row_label = [&](const std::string& labeled) {
    return labeled.substr(0, labeled.size() - 1);  // strip ':'
  };
  // leq rows list the up-set of each element
  raw.leq.assign(n, std::vector<uint8_t>(n, 0));
  if ((int)leq_rows.size() != n) throw ModelError("format", {}, "leq section needs one row per element");
  for (auto& row : leq_rows) {
    int x = index_of(row_label(row[0]));
    for (size_t i = 1; i < row.size(); ++i) raw.leq[x][index_of(row[i])] = 1;
  }
  auto read_op = [&](std::vector<std::vector<std::string>>& rows, const char* what) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
    if ((int)rows.size() != n)
      throw ModelError("format", {}, std::string(what) + " section needs one row per element");
    for (auto& row : rows) {
      int x = index_of(row_label(row[0]));
      if ((int)row.size() != n + 1)
        throw ModelError("format", {}, std::string(what) + " row for " + row[0] +
                                           " needs one value per element");
      for (int j = 0; j < n; ++j) table[x][j] = index_of(row[j + 1]);
    }
    return table;
  };
  raw.mult = read_op(mult_rows, "mult");
  if (!imp_rows.empty()) raw.imp = read_op(imp_rows, "imp");
  return raw;
}

RawModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string to_string(const Pocrim& m) {
  std::ostringstream os;
  int n = m.order();
  os << "model " << m.name() << "\nelements";
  for (int i = 0; i < n; ++i) os << ' ' << m.element_name(i);
  os << "\nunit " << m.element_name(m.unit()) << "\nzero " << m.element_name(m.zero())
     << "\nleq\n";
  for (int i = 0; i < n; ++i) {
    os << m.element_name(i) << ':';
    for (int j = 0; j < n; ++j)
      if (m.leq(i, j)) os << ' ' << m.element_name(j);
    os << '\n';
  }
  os << "mult\n";
  for (int i = 0; i < n; ++i) {
    os << m.element_name(i) << ':';
    for (int j = 0; j < n; ++j) os << ' ' << m.element_name(m.mult(i, j));
    os << '\n';
  }
  os << "imp\n";
  for (int i = 0; i < n; ++i) {
    os << m.element_name(i) << ':';
    for (int j = 0; j < n; ++j) os << ' ' << m.element_name(m.imp(i, j));
    os << '\n';
  }
  return os.str();
}

Pocrim load_model_spec(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_model(spec.substr(8));
  return Pocrim::validate(read_model_file(spec));
}

}  // namespace alw
