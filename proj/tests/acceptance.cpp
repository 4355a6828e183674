// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Expects the repository corpus under <source>/corpus.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "alw/build.hpp"
#include "alw/corpus.hpp"
#include "alw/search.hpp"

using namespace alw;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void run_criterion(int number, const std::string& label, double budget_ms,
                   const std::function<bool()>& body) {
  g_detail.str("");
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string why;
  try {
    ok = body();
    why = g_detail.str();
  } catch (const std::exception& e) {
    ok = false;
    why = std::string("exception: ") + e.what();
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (ms > budget_ms) {
    ok = false;
    why += (why.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] criterion %2d: %s (%.0f ms, budget %.0f ms)\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), ms, budget_ms);
  if (!ok) {
    ++g_failures;
    if (!why.empty()) std::printf("       %s\n", why.c_str());
  } else if (!why.empty()) {
    std::printf("       %s\n", why.c_str());
  }
}

bool expect(bool cond, const std::string& what) {
  if (!cond) g_detail << (g_detail.str().empty() ? "" : "; ") << what;
  return cond;
}

FormulaPtr fm(const std::string& s) { return desugar(parse_formula(s)); }

std::vector<Pocrim> enumerate_upto(int max_order, ModelClass cls) {
  std::vector<Pocrim> out;
  for (int order = 2; order <= max_order; ++order) {
    EnumerationTask t;
    t.order = order;
    t.cls = cls;
    for (Pocrim& m : enumerate_pocrims(t)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Pocrim> builtins() {
  std::vector<Pocrim> out;
  for (const auto& n : builtin_model_names()) out.push_back(builtin_model(n));
  return out;
}

// ----------------------------------------------------------- proof mutation

size_t node_count(const ProofPtr& t) {
  size_t n = 1;
  for (const auto& p : t->premises) n += node_count(p);
  return n;
}

ProofPtr mutate_at(const ProofPtr& t, size_t& index, std::mt19937_64& rng, bool& done) {
  if (done) return t;
  if (index == 0) {
    done = true;
    auto n = std::make_shared<ProofNode>(*t);
    FormulaPtr probe = f_atom("zz_mutant");
    int kind = (int)(rng() % 3);
    if (kind == 2 && t->kind == ProofNode::Kind::Rule) {
      // arity-breaking rule flip
      n->rule = t->rule == RuleName::LollyI ? RuleName::LollyE : RuleName::LollyI;
    } else if (kind == 1 && !t->conclusion.context.empty()) {
      std::vector<FormulaPtr> ctx = t->conclusion.context;
      size_t at = rng() % ctx.size();
      ctx[at] = f_lolly(probe, ctx[at]);
      n->conclusion = Sequent(std::move(ctx), t->conclusion.conclusion);
    } else {
      n->conclusion =
          Sequent(t->conclusion.context, f_lolly(probe, t->conclusion.conclusion));
    }
    return n;
  }
  --index;
  auto n = std::make_shared<ProofNode>(*t);
  for (auto& p : n->premises) {
    p = mutate_at(p, index, rng, done);
    if (done) break;
  }
  return n;
}

ProofPtr mutate(const ProofPtr& t, std::mt19937_64& rng) {
  size_t idx = rng() % node_count(t);
  bool done = false;
  return mutate_at(t, idx, rng, done);
}

}  // namespace

int main(int argc, char** argv) {
  std::string source_dir = argc > 1 ? argv[1] : ALW_SOURCE_DIR;
  std::string corpus_dir = source_dir + "/corpus";

  const std::vector<std::string> vars{"P", "Q", "R"};

  run_criterion(1, "appendix table fidelity (validate + classify L3 P4 Q4 Q6)", 1000, [&] {
    bool ok = true;
    const Pocrim& l3 = builtin_model("L3");
    const Pocrim& p4 = builtin_model("P4");
    const Pocrim& q4 = builtin_model("Q4");
    const Pocrim& q6 = builtin_model("Q6");
    for (const Pocrim* m : {&l3, &p4, &q4, &q6}) {
      Pocrim back = Pocrim::validate(parse_model(to_string(*m)));
      ok &= expect(back.order() == m->order(), m->name() + " re-validates");
    }
    auto cl3 = classify(l3);
    ok &= expect(cl3.is_hoop && cl3.is_involutive, "L3 must be an involutive hoop");
    auto cp4 = classify(p4);
    ok &= expect(!cp4.is_hoop &&
                     cp4.hoop_witness == std::pair{p4.element_index("b"), p4.element_index("c")},
                 "P4 hoop witness (b,c)");
    ok &= expect(!cp4.is_involutive && cp4.involutive_witness == p4.element_index("c") &&
                     p4.delta(p4.element_index("c")) == p4.element_index("b"),
                 "P4 involutive witness delta(c)=b");
    auto cq4 = classify(q4);
    ok &= expect(!cq4.is_hoop &&
                     cq4.hoop_witness == std::pair{q4.element_index("p"), q4.element_index("q")},
                 "Q4 hoop witness (p,q)");
    ok &= expect(cq4.is_involutive, "Q4 is involutive");
    auto cq6 = classify(q6);
    ok &= expect(!cq6.is_hoop && !cq6.is_involutive, "Q6 is neither hoop nor involutive");
    return ok;
  });

  run_criterion(2, "Lemma A.2(ii): glivenko(DNE) evaluates to b in P4 at P=c", 1000, [&] {
    const Pocrim& p4 = builtin_model("P4");
    FormulaPtr f = fm("(P^^ -> P)^^");
    bool ok = expect(eval(f, p4, {{"P", p4.element_index("c")}}) == p4.element_index("b"),
                     "value must be b");
    auto cm = find_countermodel(p4, f);
    ok &= expect(cm.has_value(), "must be invalid in P4");
    if (cm) {
      ok &= expect(cm->interp == Interpretation{{"P", p4.element_index("c")}},
                   "first countermodel is P=c");
      ok &= expect(cm->value == p4.element_index("b"), "reported value is b");
    }
    return ok;
  });

  run_criterion(3, "Gentzen failure is found in the built-ins, deterministically", 1000, [&] {
    FormulaPtr goal = translate(Scheme::Gentzen, fm("(P * Q)^^ -> P * Q"));
    bool ok = expect(equal(goal, fm("(P^^ * Q^^)^^ -> P^^ * Q^^")), "translation shape");
    ok &= expect(satisfies(builtin_model("Q4"), goal), "valid in Q4");
    ok &= expect(satisfies(builtin_model("L3"), goal), "valid in L3");
    CountermodelQuery q;
    q.goal = goal;
    q.bank = builtins();
    auto r1 = find_countermodel(q);
    auto r2 = find_countermodel(q);
    ok &= expect(r1.has_value(), "a countermodel exists among the built-ins");
    if (r1) {
      const Pocrim& q6 = r1->model;
      ok &= expect(q6.name() == "Q6", "witness model is Q6");
      ok &= expect(r1->interp == r2->interp && r1->value == r2->value,
                   "witness is reported deterministically");
      ok &= expect(r1->value == q6.element_index("r"), "witness value is r");
      g_detail << "witness: Q6 with P = " << q6.element_name(r1->interp.at("P"))
               << ", Q = " << q6.element_name(r1->interp.at("Q")) << ", value "
               << q6.element_name(r1->value);
    }
    return ok;
  });

  run_criterion(4, "enumeration: 7 pocrims of order 4, non-hoops P4 and Q4; L3 unique", 60000,
                [&] {
    EnumerationTask t4;
    t4.order = 4;
    auto order4 = enumerate_pocrims(t4);
    bool ok = order4.size() == 7;
    std::vector<const Pocrim*> nonhoops;
    for (const Pocrim& m : order4)
      if (!classify(m).is_hoop) nonhoops.push_back(&m);
    ok &= nonhoops.size() == 2;
    if (ok) {
      int p4 = 0, q4 = 0;
      for (const Pocrim* m : nonhoops) {
        if (find_isomorphism(*m, builtin_model("P4"))) ++p4;
        if (find_isomorphism(*m, builtin_model("Q4"))) ++q4;
      }
      ok &= expect(p4 == 1 && q4 == 1, "non-hoops must be P4 and Q4 up to isomorphism");
    } else {
      g_detail << "count mismatch: " << order4.size() << " pocrims, " << nonhoops.size()
               << " non-hoops; full list follows\n";
      for (const Pocrim& m : order4) g_detail << to_string(m) << "\n";
    }
    EnumerationTask t3;
    t3.order = 3;
    auto order3 = enumerate_pocrims(t3);
    std::vector<const Pocrim*> nonidem;
    for (const Pocrim& m : order3)
      if (!classify(m).is_idempotent) nonidem.push_back(&m);
    ok &= expect(nonidem.size() == 1, "exactly one non-idempotent pocrim of order 3");
    if (nonidem.size() == 1)
      ok &= expect(find_isomorphism(*nonidem[0], builtin_model("L3")).has_value(),
                   "it is L3 up to isomorphism");
    return ok;
  });

  run_criterion(5, "corpus verifies; 20 mutations/entry rejected; crosscheck passes", 300000,
                [&] {
    Corpus corpus = load_corpus(corpus_dir);
    VerifyReport vr = verify_corpus(corpus);
    bool ok = true;
    for (const auto& r : vr.results)
      ok &= expect(r.ok, "entry " + r.id + " failed: " + r.error);
    if (!ok) return false;

    // mutations
    std::mt19937_64 rng(20240817);
    for (const auto& e : corpus.entries) {
      ProofFile pf = read_proof_file(corpus_dir + "/" + e.file);
      for (int k = 0; k < 20; ++k) {
        ProofPtr bad = mutate(pf.root, rng);
        bool rejected = !(bad->conclusion == e.statement) ||
                        check_proof(bad, e.calculus, vr.bank).has_value();
        if (!rejected) {
          ok &= expect(false, "a mutation of " + e.id + " was accepted");
          break;
        }
      }
    }

    // semantic crosscheck over built-ins + enumerated models of order <= 4
    std::vector<Pocrim> bank = builtins();
    for (Pocrim& m : enumerate_upto(4, ModelClass::Pocrim)) bank.push_back(std::move(m));
    for (const auto& e : corpus.entries) {
      for (const auto& row : semantic_crosscheck(e, bank))
        ok &= expect(row.status != CrosscheckRow::Status::Violation,
                     "crosscheck violation: " + e.id + " in " + row.model);
    }
    g_detail << corpus.entries.size() << " entries";
    return ok;
  });

  run_criterion(6, "delta is a hoop homomorphism; some built-in non-hoop refutes it", 10000,
                [&] {
    bool ok = true;
    std::vector<Pocrim> hoops = enumerate_upto(4, ModelClass::Hoop);
    hoops.push_back(builtin_model("L3"));
    for (const Pocrim& m : hoops) {
      for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y) {
          ok &= expect(m.delta(m.mult(x, y)) == m.mult(m.delta(x), m.delta(y)),
                       "mult homomorphism fails in " + m.name());
          ok &= expect(m.delta(m.imp(x, y)) == m.imp(m.delta(x), m.delta(y)),
                       "imp homomorphism fails in " + m.name());
          if (!ok) return false;
        }
    }
    // at least one built-in non-hoop pocrim violates at least one equation
    bool violated = false;
    for (const auto& name : builtin_model_names()) {
      const Pocrim& m = builtin_model(name);
      if (classify(m).is_hoop) continue;
      for (int x = 0; x < m.order() && !violated; ++x)
        for (int y = 0; y < m.order(); ++y) {
          if (m.delta(m.mult(x, y)) != m.mult(m.delta(x), m.delta(y)) ||
              m.delta(m.imp(x, y)) != m.imp(m.delta(x), m.delta(y))) {
            g_detail << "violated in " << m.name() << " at (" << m.element_name(x) << ", "
                     << m.element_name(y) << ")";
            violated = true;
            break;
          }
        }
      if (violated) break;
    }
    ok &= expect(violated, "expected a violation in some built-in non-hoop");
    return ok;
  });

  run_criterion(7, "the seven De Morgan identities hold elementwise in hoops <= 4", 10000, [&] {
    auto A = f_atom("A"), B = f_atom("B");
    std::vector<std::pair<FormulaPtr, FormulaPtr>> rows = {
        {f_neg(f_tensor(A, B)), f_lolly(A, f_neg(B))},
        {f_neg(f_lolly(A, B)), f_tensor(f_dneg(A), f_neg(B))},
        {f_neg(f_cap(A, B)), f_simp(A, f_neg(B))},
        {f_neg(f_simp(A, B)), f_cap(f_dneg(A), f_neg(B))},
        {f_neg(f_cap(A, B)), f_cup(f_neg(A), f_neg(B))},
        {f_neg(f_cup(A, B)), f_cap(f_neg(A), f_neg(B))},
        {f_neg(f_nor(A, B)), f_simp(f_neg(A), f_dneg(B))},
    };
    bool ok = true;
    for (const Pocrim& m : enumerate_upto(4, ModelClass::Hoop)) {
      for (size_t i = 0; i < rows.size(); ++i) {
        FormulaPtr lhs = desugar(rows[i].first), rhs = desugar(rows[i].second);
        for (int a = 0; a < m.order(); ++a)
          for (int b = 0; b < m.order(); ++b) {
            Interpretation it{{"A", a}, {"B", b}};
            ok &= expect(eval(lhs, m, it) == eval(rhs, m, it),
                         "identity " + std::to_string(i + 1) + " fails in " + m.name());
            if (!ok) return false;
          }
      }
    }
    return ok;
  });

  run_criterion(8, "translation agreement on 1000 random formulas (NT1, NT2, 3.4, 5.3)",
                300000, [&] {
    auto pocrims = enumerate_upto(4, ModelClass::Pocrim);
    auto hoops = enumerate_upto(4, ModelClass::Hoop);
    const std::vector<Scheme> all = {Scheme::Kolmogorov, Scheme::Goedel, Scheme::Gentzen,
                                     Scheme::Glivenko, Scheme::Krivine,
                                     Scheme::GoedelSimplified};
    bool ok = true;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
      FormulaPtr f = random_formula(seed, 8, vars);
      std::vector<FormulaPtr> tf;
      for (Scheme s : all) {
        tf.push_back(translate(s, f));
        ok &= expect(is_negative(tf.back()),
                     "NT1 fails for " + to_string(s) + " at seed " + std::to_string(seed));
      }
      auto vs = variables(f);
      FormulaPtr k = tf[0], g = tf[1];
      for (const Pocrim& m : pocrims) {
        bool involutive = classify(m).is_involutive;
        std::vector<int> v(vs.size(), 0);
        while (true) {
          Interpretation it;
          for (size_t j = 0; j < vs.size(); ++j) it[vs[j]] = v[j];
          int vk = eval(k, m, it);
          ok &= expect(vk == eval(g, m, it), "Kolmogorov/Goedel disagree (3.4)");
          if (involutive) {
            int v0 = eval(f, m, it);
            ok &= expect(vk == v0 && eval(g, m, it) == v0, "NT2 fails in a pocrim");
          }
          if (!ok) return false;
          size_t j = vs.size();
          while (j > 0 && ++v[j - 1] == m.order()) v[--j] = 0;
          if (j == 0) break;
        }
      }
      for (const Pocrim& m : hoops) {
        bool involutive = classify(m).is_involutive;
        std::vector<int> v(vs.size(), 0);
        while (true) {
          Interpretation it;
          for (size_t j = 0; j < vs.size(); ++j) it[vs[j]] = v[j];
          int vgl = eval(translate(Scheme::Glivenko, f), m, it);
          for (const FormulaPtr& t : tf)
            ok &= expect(eval(t, m, it) == vgl, "scheme disagrees with Glivenko (5.3)");
          if (involutive)
            ok &= expect(vgl == eval(f, m, it), "NT2 fails in a hoop");
          if (!ok) return false;
          size_t j = vs.size();
          while (j > 0 && ++v[j - 1] == m.order()) v[--j] = 0;
          if (j == 0) break;
        }
      }
    }
    return ok;
  });

  run_criterion(9, "negative formulas are delta-stable in hoops (Lemma 5.2 shadow)", 60000,
                [&] {
    auto hoops = enumerate_upto(4, ModelClass::Hoop);
    bool ok = true;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
      FormulaPtr f = random_negative_formula(seed, 8, vars);
      auto vs = variables(f);
      for (const Pocrim& m : hoops) {
        std::vector<int> v(vs.size(), 0);
        while (true) {
          Interpretation it;
          for (size_t j = 0; j < vs.size(); ++j) it[vs[j]] = v[j];
          int val = eval(f, m, it);
          ok &= expect(m.delta(val) == val, "delta-instability at seed " +
                                                std::to_string(seed) + " in " + m.name());
          if (!ok) return false;
          size_t j = vs.size();
          while (j > 0 && ++v[j - 1] == m.order()) v[--j] = 0;
          if (j == 0) break;
        }
      }
    }
    return ok;
  });

  run_criterion(10, "finite Theorem A.3 shadows between Q4/Q6 and L3/P4", 300000, [&] {
    std::vector<FormulaPtr> stream;
    for (uint64_t seed = 0; seed < 1000; ++seed)
      stream.push_back(random_formula(seed, 8, vars));
    FormulaPtr wit2 = fm("P^^ -> P");
    FormulaPtr wit3 = fm("(P * Q)^^ -> P * Q");
    stream.push_back(wit2);
    stream.push_back(wit3);

    const Pocrim& q4 = builtin_model("Q4");
    const Pocrim& q6 = builtin_model("Q6");
    const Pocrim& l3 = builtin_model("L3");
    const Pocrim& p4 = builtin_model("P4");

    bool ok = true;
    auto good1 = theory_implication_check(q4, q6, Scheme::Glivenko, stream);
    ok &= expect(good1.violations.empty(), "Q4->Q6 glivenko must have no violations");
    auto good2 = theory_implication_check(l3, p4, Scheme::Gentzen, stream);
    ok &= expect(good2.violations.empty(), "L3->P4 gentzen must have no violations");

    auto bad1 = theory_implication_check(q4, q6, Scheme::Gentzen, stream);
    bool has3 = false;
    for (const auto& v : bad1.violations) has3 |= equal(v.formula, wit3);
    ok &= expect(!bad1.violations.empty() && has3,
                 "Q4->Q6 gentzen must report the tensor DNE witness");
    auto bad2 = theory_implication_check(l3, p4, Scheme::Glivenko, stream);
    bool has2 = false;
    for (const auto& v : bad2.violations) has2 |= equal(v.formula, wit2);
    ok &= expect(!bad2.violations.empty() && has2,
                 "L3->P4 glivenko must report the DNE witness");
    g_detail << "violations: gentzen " << bad1.violations.size() << ", glivenko "
             << bad2.violations.size();
    return ok;
  });

  run_criterion(11, "the appendix homomorphism Q6 -> Q4 and its perturbations", 1000, [&] {
    const Pocrim& q6 = builtin_model("Q6");
    const Pocrim& q4 = builtin_model("Q4");
    auto idx6 = [&](const char* n) { return q6.element_index(n); };
    std::vector<int> h(q6.order());
    h[idx6("1")] = q4.element_index("1");
    h[idx6("r")] = q4.element_index("1");
    h[idx6("s")] = q4.element_index("p");
    h[idx6("t")] = q4.element_index("p");
    h[idx6("u")] = q4.element_index("q");
    h[idx6("0")] = q4.element_index("0");
    bool ok = expect(!check_homomorphism(h, q6, q4).has_value(), "the appendix map is a hom");
    int perturbed = 0;
    for (int i = 0; i < q6.order(); ++i)
      for (int j = i + 1; j < q6.order(); ++j) {
        if (h[i] == h[j]) continue;  // swapping equal images is a no-op
        std::vector<int> t = h;
        std::swap(t[i], t[j]);
        ++perturbed;
        ok &= expect(check_homomorphism(t, q6, q4).has_value(),
                     "a transposed variant must fail");
      }
    g_detail << perturbed << " perturbed variants all rejected";
    return ok;
  });

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
