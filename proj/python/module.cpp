// python bindings for the main operations: parsing, translation, evaluation,
// validity, classification, enumeration, proof checking and the corpus.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alw/corpus.hpp"
#include "alw/search.hpp"

namespace py = pybind11;
using namespace alw;

namespace {

py::dict interp_dict(const Pocrim& m, const Interpretation& i) {
  py::dict d;
  for (const auto& [v, e] : i) d[py::str(v)] = m.element_name(e);
  return d;
}

Interpretation interp_from(const Pocrim& m, const py::dict& d) {
  Interpretation i;
  for (auto item : d) {
    int idx = m.element_index(item.second.cast<std::string>());
    if (idx < 0) throw py::value_error("unknown element");
    i[item.first.cast<std::string>()] = idx;
  }
  return i;
}

Scheme scheme_of(const std::string& name) {
  auto s = scheme_from_string(name);
  if (!s) throw py::value_error("unknown scheme: " + name);
  return *s;
}

ModelClass class_of(const std::string& name) {
  auto c = model_class_from_string(name);
  if (!c) throw py::value_error("unknown model class: " + name);
  return *c;
}

}  // namespace

PYBIND11_MODULE(alw, m) {
  m.doc() = "workbench for affine and Lukasiewicz propositional logics";

  m.def("parse", [](const std::string& text) {
    FormulaPtr f = parse_formula(text);
    py::dict d;
    d["surface"] = to_string(f);
    d["core"] = to_string_core(desugar(f));
    return d;
  }, py::arg("text"), "parse a formula; returns its printed surface and core forms");

  m.def("pretty", [](const std::string& text, bool full_parens) {
    return to_string(parse_formula(text),
                     full_parens ? PrintMode::FullParens : PrintMode::MinimalParens);
  }, py::arg("text"), py::arg("full_parens") = false);

  m.def("translate", [](const std::string& scheme, const std::string& text) {
    return to_string_core(translate(scheme_of(scheme), desugar(parse_formula(text))));
  }, py::arg("scheme"), py::arg("formula"));

  m.def("is_negative", [](const std::string& text) {
    return is_negative(desugar(parse_formula(text)));
  }, py::arg("formula"));

  m.def("eval", [](const std::string& model, const py::dict& assign,
                   const std::string& text) {
    Pocrim p = load_model_spec(model);
    return p.element_name(eval(desugar(parse_formula(text)), p, interp_from(p, assign)));
  }, py::arg("model"), py::arg("assign"), py::arg("formula"));

  m.def("valid", [](const std::string& model, const std::string& text) -> py::object {
    Pocrim p = load_model_spec(model);
    auto cm = find_countermodel(p, desugar(parse_formula(text)));
    if (!cm) return py::none();
    py::dict d;
    d["interp"] = interp_dict(p, cm->interp);
    d["value"] = p.element_name(cm->value);
    return d;
  }, py::arg("model"), py::arg("formula"),
     "None when valid, otherwise the first countermodel");

  m.def("classify", [](const std::string& model) {
    Pocrim p = load_model_spec(model);
    Classification c = classify(p);
    py::dict d;
    d["name"] = p.name();
    d["order"] = p.order();
    d["hoop"] = c.is_hoop;
    d["involutive"] = c.is_involutive;
    d["idempotent"] = c.is_idempotent;
    py::list calcs;
    for (CalculusId cid : models_calculus(p)) calcs.append(to_string(cid));
    d["models"] = calcs;
    return d;
  }, py::arg("model"));

  m.def("enumerate_models", [](int order, const std::string& cls, bool count_only)
            -> py::object {
    EnumerationTask t;
    t.order = order;
    t.cls = class_of(cls);
    auto models = enumerate_pocrims(t);
    if (count_only) return py::int_(models.size());
    py::list out;
    for (const Pocrim& m : models) out.append(to_string(m));
    return out;
  }, py::arg("order"), py::arg("cls") = "pocrim", py::arg("count_only") = false);

  m.def("search", [](const std::string& goal, const std::string& cls, int max_order)
            -> py::object {
    CountermodelQuery q;
    q.goal = desugar(parse_formula(goal));
    q.cls = class_of(cls);
    q.max_order = max_order;
    auto r = find_countermodel(q);
    if (!r) return py::none();
    py::dict d;
    d["model"] = to_string(r->model);
    d["interp"] = interp_dict(r->model, r->interp);
    d["value"] = r->model.element_name(r->value);
    return d;
  }, py::arg("goal"), py::arg("cls") = "pocrim", py::arg("max_order") = 4);

  m.def("check_proof", [](const std::string& path, const std::string& bank_dir) {
    LemmaBank bank;
    if (!bank_dir.empty()) {
      VerifyReport vr = verify_corpus(bank_dir);
      if (!vr.all_ok) throw py::value_error("lemma bank failed to verify");
      bank = std::move(vr.bank);
    }
    ProofFile pf = read_proof_file(path);
    py::dict d;
    d["id"] = pf.id;
    d["calculus"] = to_string(pf.calculus);
    d["statement"] = to_string(pf.statement);
    if (!(pf.root->conclusion == pf.statement)) {
      d["ok"] = false;
      d["error"] = "root conclusion differs from the statement";
      return d;
    }
    auto err = check_proof(pf.root, pf.calculus, bank);
    d["ok"] = !err.has_value();
    if (err) d["error"] = to_string(*err);
    return d;
  }, py::arg("path"), py::arg("bank_dir") = "");

  m.def("verify_corpus", [](const std::string& dir) {
    VerifyReport vr = verify_corpus(dir);
    py::list out;
    for (const auto& r : vr.results) {
      py::dict d;
      d["id"] = r.id;
      d["ok"] = r.ok;
      if (!r.ok) d["error"] = r.error;
      out.append(d);
    }
    return out;
  }, py::arg("dir"));

  m.def("theory_check", [](const std::string& premise, const std::string& goal,
                           const std::string& scheme, int samples, uint64_t seed) {
    Pocrim prem = load_model_spec(premise);
    Pocrim g = load_model_spec(goal);
    std::vector<FormulaPtr> stream;
    stream.reserve(samples);
    for (int i = 0; i < samples; ++i)
      stream.push_back(random_formula(seed + (uint64_t)i, 8, {"P", "Q", "R"}));
    auto rep = theory_implication_check(prem, g, scheme_of(scheme), stream);
    py::list out;
    for (const auto& v : rep.violations) {
      py::dict d;
      d["formula"] = to_string_core(v.formula);
      d["interp"] = interp_dict(g, v.interp);
      d["value"] = g.element_name(v.value);
      out.append(d);
    }
    return out;
  }, py::arg("premise"), py::arg("goal"), py::arg("scheme"), py::arg("samples") = 1000,
     py::arg("seed") = 1);

  m.def("builtins", [] { return builtin_model_names(); });
}
