// alw — workbench for propositional logics between intuitionistic affine
// logic and classical Lukasiewicz logic.
//
// Exit codes: 0 = affirmative/ok, 1 = negative result (countermodel found,
// formula invalid, proof rejected, violations reported), 2 = usage or input
// error.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alw/build.hpp"
#include "alw/corpus.hpp"
#include "alw/search.hpp"

using namespace alw;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitNegative = 1, kExitError = 2;

struct Output {
  bool as_json = false;
  json j;

  void field(const std::string& k, const json& v) { j[k] = v; }
  void line(const std::string& s) {
    if (!as_json) std::cout << s << "\n";
  }
  int finish(int code) {
    if (as_json) {
      j["exit"] = code;
      std::cout << j.dump(2) << "\n";
    }
    return code;
  }
};

json interp_to_json(const Pocrim& m, const Interpretation& i) {
  json o = json::object();
  for (const auto& [v, e] : i) o[v] = m.element_name(e);
  return o;
}

std::string interp_to_text(const Pocrim& m, const Interpretation& i) {
  std::string s;
  for (const auto& [v, e] : i) {
    if (!s.empty()) s += ", ";
    s += v + " = " + m.element_name(e);
  }
  return s;
}

std::vector<Pocrim> load_bank_dir(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".model") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Pocrim> out;
  for (const auto& f : files) out.push_back(Pocrim::validate(read_model_file(f.string())));
  return out;
}

Interpretation parse_assignment(const std::string& text, const Pocrim& m) {
  Interpretation i;
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("assignments look like P=a,Q=b: " + part);
    std::string var = part.substr(0, eq), val = part.substr(eq + 1);
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    var = strip(var);
    val = strip(val);
    int idx = m.element_index(val);
    if (idx < 0) throw std::runtime_error("unknown element '" + val + "'");
    i[var] = idx;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return i;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for affine and Lukasiewicz propositional logics"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- parse
  std::string parse_text;
  bool parse_full = false;
  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print it back");
  cmd_parse->add_option("formula", parse_text)->required();
  cmd_parse->add_flag("--full-parens", parse_full, "fully parenthesized output");

  // ---- translate
  std::string tr_scheme, tr_text;
  auto* cmd_tr = app.add_subcommand("translate", "apply a negative translation");
  cmd_tr->add_option("--scheme", tr_scheme, "kolmogorov|goedel|goedel-pre|goedel-simplified|gentzen|glivenko|krivine|krivine-pre")
      ->required();
  cmd_tr->add_option("formula", tr_text)->required();

  // ---- check-proof
  std::string cp_file, cp_bank;
  auto* cmd_cp = app.add_subcommand("check-proof", "check a proof file");
  cmd_cp->add_option("file", cp_file)->required();
  cmd_cp->add_option("--bank", cp_bank, "corpus directory resolving lemma references");

  // ---- eval
  std::string ev_model, ev_assign, ev_text;
  auto* cmd_ev = app.add_subcommand("eval", "evaluate a formula in a model");
  cmd_ev->add_option("--model", ev_model, "model file or builtin:NAME")->required();
  cmd_ev->add_option("--assign", ev_assign, "variable assignment P=a,Q=b")->required();
  cmd_ev->add_option("formula", ev_text)->required();

  // ---- valid
  std::string va_model, va_text;
  auto* cmd_va = app.add_subcommand("valid", "check validity in a model");
  cmd_va->add_option("--model", va_model)->required();
  cmd_va->add_option("formula", va_text)->required();

  // ---- classify
  std::string cl_model;
  auto* cmd_cl = app.add_subcommand("classify", "classify a model");
  cmd_cl->add_option("--model", cl_model)->required();

  // ---- enumerate
  int en_order = 2;
  std::string en_class = "pocrim", en_out;
  bool en_count_only = false;
  auto* cmd_en = app.add_subcommand("enumerate", "enumerate models up to isomorphism");
  cmd_en->add_option("--order", en_order)->required();
  cmd_en->add_option("--class", en_class,
                     "pocrim|hoop|involutive-pocrim|involutive-hoop|idempotent");
  cmd_en->add_flag("--count-only", en_count_only);
  cmd_en->add_option("--out", en_out, "write one .model file per result");

  // ---- search
  std::string se_goal, se_class = "pocrim", se_bank;
  int se_max_order = 4;
  auto* cmd_se = app.add_subcommand("search", "search for a countermodel");
  cmd_se->add_option("--goal", se_goal)->required();
  cmd_se->add_option("--class", se_class);
  cmd_se->add_option("--max-order", se_max_order);
  cmd_se->add_option("--bank", se_bank, "directory of .model files to scan instead");

  // ---- verify-corpus
  std::string vc_dir, vc_calc;
  bool vc_crosscheck = false;
  auto* cmd_vc = app.add_subcommand("verify-corpus", "check every proof in a corpus");
  cmd_vc->add_option("dir", vc_dir)->required();
  cmd_vc->add_option("--calculus", vc_calc, "only entries of this calculus");
  cmd_vc->add_flag("--crosscheck", vc_crosscheck,
                   "also validate statements in the built-in models");

  // ---- theory-check
  std::string tc_prem, tc_goal, tc_scheme;
  int tc_samples = 1000;
  uint64_t tc_seed = 1;
  auto* cmd_tc = app.add_subcommand(
      "theory-check", "finite negative-translation check between two model theories");
  cmd_tc->add_option("--premise-model", tc_prem)->required();
  cmd_tc->add_option("--goal-model", tc_goal)->required();
  cmd_tc->add_option("--scheme", tc_scheme)->required();
  cmd_tc->add_option("--samples", tc_samples);
  cmd_tc->add_option("--seed", tc_seed);

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.as_json = format == "json";

  try {
    if (*cmd_parse) {
      FormulaPtr f = parse_formula(parse_text);
      PrintMode mode = parse_full ? PrintMode::FullParens : PrintMode::MinimalParens;
      out.field("surface", to_string(f, mode));
      out.field("core", to_string_core(desugar(f), mode));
      out.line(to_string(f, mode));
      out.line("core: " + to_string_core(desugar(f), mode));
      return out.finish(kExitOk);
    }

    if (*cmd_tr) {
      auto scheme = scheme_from_string(tr_scheme);
      if (!scheme) throw std::runtime_error("unknown scheme: " + tr_scheme);
      FormulaPtr f = desugar(parse_formula(tr_text));
      FormulaPtr t = translate(*scheme, f);
      out.field("scheme", to_string(*scheme));
      out.field("input", to_string_core(f));
      out.field("output", to_string_core(t));
      out.field("negative", is_negative(t));
      out.line(to_string_core(t));
      return out.finish(kExitOk);
    }

    if (*cmd_cp) {
      LemmaBank bank;
      if (!cp_bank.empty()) {
        VerifyReport vr = verify_corpus(cp_bank);
        if (!vr.all_ok) throw std::runtime_error("lemma bank failed to verify: " + cp_bank);
        bank = std::move(vr.bank);
      }
      ProofFile pf = read_proof_file(cp_file);
      out.field("id", pf.id);
      out.field("calculus", to_string(pf.calculus));
      out.field("statement", to_string(pf.statement));
      if (!(pf.root->conclusion == pf.statement)) {
        out.field("ok", false);
        out.field("error", "root conclusion differs from the statement");
        out.line("rejected: root conclusion differs from the statement");
        return out.finish(kExitNegative);
      }
      if (auto err = check_proof(pf.root, pf.calculus, bank)) {
        out.field("ok", false);
        out.field("error", to_string(*err));
        out.line("rejected: " + to_string(*err));
        return out.finish(kExitNegative);
      }
      out.field("ok", true);
      out.line("ok: " + pf.id + " proves " + to_string(pf.statement) + " in " +
               to_string(pf.calculus));
      return out.finish(kExitOk);
    }

    if (*cmd_ev) {
      Pocrim m = load_model_spec(ev_model);
      FormulaPtr f = desugar(parse_formula(ev_text));
      Interpretation i = parse_assignment(ev_assign, m);
      int v = eval(f, m, i);
      out.field("value", m.element_name(v));
      out.line(m.element_name(v));
      return out.finish(kExitOk);
    }

    if (*cmd_va) {
      Pocrim m = load_model_spec(va_model);
      FormulaPtr f = desugar(parse_formula(va_text));
      if (auto cm = find_countermodel(m, f)) {
        out.field("valid", false);
        out.field("countermodel", interp_to_json(m, cm->interp));
        out.field("value", m.element_name(cm->value));
        out.line("invalid in " + m.name() + ": " + interp_to_text(m, cm->interp) +
                 "  value " + m.element_name(cm->value));
        return out.finish(kExitNegative);
      }
      out.field("valid", true);
      out.line("valid in " + m.name());
      return out.finish(kExitOk);
    }

    if (*cmd_cl) {
      Pocrim m = load_model_spec(cl_model);
      Classification c = classify(m);
      out.field("model", m.name());
      out.field("order", m.order());
      out.field("pocrim", true);
      out.field("hoop", c.is_hoop);
      out.field("involutive", c.is_involutive);
      out.field("idempotent", c.is_idempotent);
      std::string line = m.name() + ": pocrim";
      if (c.is_hoop) line += ", hoop";
      else {
        auto [x, y] = *c.hoop_witness;
        line += ", not a hoop (witness " + m.element_name(x) + "," + m.element_name(y) + ")";
        out.field("hoop_witness", {m.element_name(x), m.element_name(y)});
      }
      if (c.is_involutive) line += ", involutive";
      else {
        int x = *c.involutive_witness;
        line += ", not involutive (delta(" + m.element_name(x) + ") = " +
                m.element_name(m.delta(x)) + ")";
        out.field("involutive_witness", m.element_name(x));
      }
      if (c.is_idempotent) line += ", idempotent";
      else {
        int x = *c.idempotent_witness;
        line += ", not idempotent (witness " + m.element_name(x) + ")";
        out.field("idempotent_witness", m.element_name(x));
      }
      std::string calcs;
      json jcalcs = json::array();
      for (CalculusId cid : models_calculus(m)) {
        if (!calcs.empty()) calcs += " ";
        calcs += to_string(cid);
        jcalcs.push_back(to_string(cid));
      }
      out.field("models", jcalcs);
      out.line(line);
      out.line("models: " + calcs);
      return out.finish(kExitOk);
    }

    if (*cmd_en) {
      auto cls = model_class_from_string(en_class);
      if (!cls) throw std::runtime_error("unknown class: " + en_class);
      EnumerationTask task;
      task.order = en_order;
      task.cls = *cls;
      task.warning = [&](const std::string& w) { std::cerr << "warning: " << w << "\n"; };
      std::vector<Pocrim> models = enumerate_pocrims(task);
      out.field("order", en_order);
      out.field("class", en_class);
      out.field("count", models.size());
      if (en_count_only) {
        out.line(std::to_string(models.size()));
        return out.finish(kExitOk);
      }
      if (!en_out.empty()) {
        std::filesystem::create_directories(en_out);
        for (const Pocrim& m : models) {
          std::ofstream f(std::filesystem::path(en_out) / (m.name() + ".model"));
          f << to_string(m);
        }
        out.line("wrote " + std::to_string(models.size()) + " models to " + en_out);
      } else {
        json names = json::array();
        for (const Pocrim& m : models) {
          names.push_back(m.name());
          if (!out.as_json) std::cout << to_string(m) << "\n";
        }
        out.field("models", names);
      }
      return out.finish(kExitOk);
    }

    if (*cmd_se) {
      auto cls = model_class_from_string(se_class);
      if (!cls) throw std::runtime_error("unknown class: " + se_class);
      CountermodelQuery q;
      q.goal = desugar(parse_formula(se_goal));
      q.cls = *cls;
      q.max_order = se_max_order;
      if (!se_bank.empty()) q.bank = load_bank_dir(se_bank);
      if (auto r = find_countermodel(q)) {
        out.field("found", true);
        out.field("model", r->model.name());
        out.field("countermodel", interp_to_json(r->model, r->interp));
        out.field("value", r->model.element_name(r->value));
        out.line("countermodel in " + r->model.name() + ": " +
                 interp_to_text(r->model, r->interp) + "  value " +
                 r->model.element_name(r->value));
        if (!out.as_json) std::cout << to_string(r->model);
        return out.finish(kExitNegative);
      }
      out.field("found", false);
      out.line("no countermodel found");
      return out.finish(kExitOk);
    }

    if (*cmd_vc) {
      std::optional<CalculusId> filter;
      if (!vc_calc.empty()) {
        filter = calculus_from_string(vc_calc);
        if (!filter) throw std::runtime_error("unknown calculus: " + vc_calc);
      }
      Corpus corpus = load_corpus(vc_dir);
      VerifyReport vr = verify_corpus(corpus, filter);
      json entries = json::array();
      size_t checked = 0, failed = 0;
      for (const auto& r : vr.results) {
        json e;
        e["id"] = r.id;
        e["ok"] = r.ok;
        e["millis"] = r.millis;
        if (!r.ok) e["error"] = r.error;
        entries.push_back(e);
        if (r.selected) ++checked;
        if (!r.ok) ++failed;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%7.1fms", r.millis);
        out.line(std::string(r.ok ? "ok   " : "FAIL ") + buf + "  " + r.id +
                 (r.ok ? "" : "  " + r.error));
      }
      out.field("entries", entries);
      out.field("checked", checked);
      out.field("failed", failed);
      if (vc_crosscheck && vr.all_ok) {
        std::vector<Pocrim> bank;
        for (const auto& n : builtin_model_names()) bank.push_back(builtin_model(n));
        size_t violations = 0;
        for (const auto& e : corpus.entries) {
          if (filter && e.calculus != *filter) continue;
          for (const auto& row : semantic_crosscheck(e, bank))
            if (row.status == CrosscheckRow::Status::Violation) {
              ++violations;
              out.line("CROSSCHECK FAIL " + e.id + " in " + row.model);
            }
        }
        out.field("crosscheck_violations", violations);
        if (violations) return out.finish(kExitNegative);
        out.line("crosscheck: ok");
      }
      out.line(std::to_string(checked) + " entries checked, " + std::to_string(failed) +
               " failed");
      return out.finish(vr.all_ok ? kExitOk : kExitNegative);
    }

    if (*cmd_tc) {
      auto scheme = scheme_from_string(tc_scheme);
      if (!scheme) throw std::runtime_error("unknown scheme: " + tc_scheme);
      Pocrim prem = load_model_spec(tc_prem);
      Pocrim goal = load_model_spec(tc_goal);
      std::vector<FormulaPtr> samples;
      samples.reserve(tc_samples);
      for (int i = 0; i < tc_samples; ++i)
        samples.push_back(random_formula(tc_seed + (uint64_t)i, 8, {"P", "Q", "R"}));
      TheoryCheckReport rep = theory_implication_check(prem, goal, *scheme, samples);
      out.field("samples", rep.total);
      out.field("premise_valid", rep.checked);
      out.field("violations", rep.violations.size());
      json viols = json::array();
      for (const auto& v : rep.violations) {
        json o;
        o["formula"] = to_string_core(v.formula);
        o["countermodel"] = interp_to_json(goal, v.interp);
        o["value"] = goal.element_name(v.value);
        viols.push_back(o);
        out.line("violation: " + to_string_core(v.formula) + "  [" +
                 interp_to_text(goal, v.interp) + "  value " + goal.element_name(v.value) +
                 "]");
      }
      out.field("violation_list", viols);
      out.line(std::to_string(rep.checked) + "/" + std::to_string(rep.total) +
               " premise-valid samples, " + std::to_string(rep.violations.size()) +
               " violations");
      return out.finish(rep.violations.empty() ? kExitOk : kExitNegative);
    }
  } catch (const ParseError& e) {
    std::cerr << "error at position " << e.position << ": " << e.what() << "\n";
    return kExitError;
  } catch (const ModelError& e) {
    std::cerr << "model error (" << e.law << "): " << e.what();
    if (!e.witness.empty()) {
      std::cerr << "  witness:";
      for (const auto& w : e.witness) std::cerr << ' ' << w;
    }
    std::cerr << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
