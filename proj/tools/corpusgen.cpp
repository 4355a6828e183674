// corpusgen — builds the proof corpus programmatically, verifies every entry
// against the checker and writes the proof files plus index.tsv.
//
// Usage: corpusgen <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "alw/build.hpp"
#include "alw/corpus.hpp"

using namespace alw;
using namespace alw::build;

namespace {

struct Gen {
  std::filesystem::path dir;
  LemmaBank bank;
  std::map<std::string, Sequent> statements;
  std::vector<CorpusEntry> index;
  int failures = 0;

  // the metavariables of the corpus
  FormulaPtr A = f_atom("A"), B = f_atom("B"), C = f_atom("C");

  FormulaPtr neg(const FormulaPtr& x) { return f_lolly(x, f_bot()); }
  FormulaPtr dd(const FormulaPtr& x) { return f_dneg(x); }
  FormulaPtr cap(const FormulaPtr& x, const FormulaPtr& y) {
    return f_tensor(x, f_lolly(x, y));
  }
  FormulaPtr cup(const FormulaPtr& x, const FormulaPtr& y) {
    return f_lolly(f_lolly(y, x), x);
  }
  FormulaPtr simp(const FormulaPtr& x, const FormulaPtr& y) {
    return f_lolly(x, f_tensor(x, y));
  }
  FormulaPtr nor(const FormulaPtr& x, const FormulaPtr& y) {
    return f_tensor(neg(x), f_lolly(y, x));
  }

  void add(const std::string& id, CalculusId calc, const std::string& statement_text,
           const ProofPtr& proof, std::vector<std::string> deps, const std::string& note) {
    Sequent statement = parse_sequent(statement_text);
    if (!(proof->conclusion == statement)) {
      std::cerr << "[gen] " << id << ": proof concludes " << to_string(proof->conclusion)
                << " but statement is " << to_string(statement) << "\n";
      ++failures;
      return;
    }
    if (auto err = check_proof(proof, calc, bank)) {
      std::cerr << "[gen] " << id << ": " << to_string(*err) << "\n";
      ++failures;
      return;
    }
    ProofFile pf{id, calc, statement, proof};
    std::ofstream out(dir / (id + ".proof"));
    out << to_string(pf);
    bank[id] = LemmaInfo{closed_form(statement), calc};
    statements[id] = statement;
    CorpusEntry e;
    e.id = id;
    e.calculus = calc;
    e.statement = statement;
    e.file = id + ".proof";
    e.deps = std::move(deps);
    e.note = note;
    index.push_back(std::move(e));
    std::cout << "[gen] " << id << " ok\n";
  }

  // Cites `id` under sigma and eliminates the curried hypotheses with `args`,
  // which must prove the substituted hypotheses in canonical order.
  ProofPtr apply_lemma(const std::string& id, const SubstMap& sigma,
                       const std::vector<ProofPtr>& args) {
    ProofPtr t = cite(bank, id, sigma);
    for (const auto& a : args) t = mp(a, t);
    return t;
  }

  // Equivalence whose two directions are citations of entry `id` and its
  // converse entry `conv` (both single-hypothesis statements).
  Equiv eq_cited(const std::string& id, const std::string& conv, const SubstMap& sigma) {
    return equiv(cite(bank, id, sigma), cite(bank, conv, sigma));
  }

  // ---- small reusable equivalences (all closed ALi constructions)

  Equiv eq_triple_neg(const FormulaPtr& x) {  // x^ == x^^^
    ProofPtr rl = lolly_i(neg(dd(x)), lolly_i(x, mp(dni_of(hyp(x)), hyp(neg(dd(x))))));
    return equiv(dni(neg(x)), rl);
  }

  Equiv eq_tensor_neg(const FormulaPtr& x, const FormulaPtr& y) {  // (x*y)^ == x -> y^
    FormulaPtr h = neg(f_tensor(x, y));
    FormulaPtr g = f_lolly(x, neg(y));
    return equiv(lolly_i(h, curry(hyp(h))), lolly_i(g, uncurry(hyp(g))));
  }

  Equiv eq_tensor_neg_flip(const FormulaPtr& x, const FormulaPtr& y) {  // (x*y)^ == y -> x^
    FormulaPtr h = neg(f_tensor(x, y));
    FormulaPtr g = f_lolly(y, neg(x));
    ProofPtr lr = lolly_i(
        h, lolly_i(y, lolly_i(x, mp(tensor_i(hyp(x), hyp(y)), hyp(h)))));
    ProofPtr rl = lolly_i(
        g, lolly_i(f_tensor(x, y),
                   tensor_e(hyp(f_tensor(x, y)), mp(hyp(x), mp(hyp(y), hyp(g))))));
    return equiv(lr, rl);
  }

  Equiv eq_swap_prem(const FormulaPtr& x, const FormulaPtr& y) {  // x -> y^ == y -> x^
    auto dir = [&](const FormulaPtr& a, const FormulaPtr& b) {
      FormulaPtr g = f_lolly(a, neg(b));
      return lolly_i(g, lolly_i(b, lolly_i(a, mp(hyp(b), mp(hyp(a), hyp(g))))));
    };
    return equiv(dir(x, y), dir(y, x));
  }

  Equiv eq_dd_imp(const FormulaPtr& a, const FormulaPtr& b) {  // a^^ -> b^^ == b^ -> a^
    FormulaPtr g = f_lolly(dd(a), dd(b));
    FormulaPtr h = f_lolly(neg(b), neg(a));
    ProofPtr lr = lolly_i(
        g, lolly_i(neg(b),
                   lolly_i(a, mp(hyp(neg(b)), mp(dni_of(hyp(a)), hyp(g))))));
    ProofPtr rl = lolly_i(
        h, lolly_i(dd(a), lolly_i(neg(b), mp(mp(hyp(neg(b)), hyp(h)), hyp(dd(a))))));
    return equiv(lr, rl);
  }

  Equiv eq_dneg_prem(const FormulaPtr& y, const FormulaPtr& x) {  // y -> x^ == y^^ -> x^
    FormulaPtr g = f_lolly(y, neg(x));
    FormulaPtr h = f_lolly(dd(y), neg(x));
    ProofPtr inner =
        lolly_i(y, mp(hyp(x), mp(hyp(y), hyp(g))));  // {g, x} |- y^
    ProofPtr lr = lolly_i(
        g, lolly_i(dd(y), lolly_i(x, mp(inner, hyp(dd(y))))));
    ProofPtr rl = lolly_i(h, compose(dni(y), hyp(h)));
    return equiv(lr, rl);
  }

  Equiv eq_tensor_comm(const FormulaPtr& x, const FormulaPtr& y) {
    return equiv(tensor_comm(x, y), tensor_comm(y, x));
  }

  // |- (x * (x->y)) -> (y * (y->x)); the CWC axiom in pre-conjunction form
  ProofPtr cap_comm_thm(const FormulaPtr& x, const FormulaPtr& y) {
    FormulaPtr l = cap(x, y);
    return lolly_i(l, tensor_e(hyp(l), axiom_cwc(x, y)));
  }

  void run();
};

void Gen::run() {
  FormulaPtr nA = neg(A), nB = neg(B), nC = neg(C);
  FormulaPtr ddA = dd(A), ddB = dd(B);

  // ---------------------------------------------------------------- ALi
  add("ali-basic-(i)", CalculusId::ALi, "A |- (A -> B) -> B",
      lolly_i(f_lolly(A, B), mp(hyp(A), hyp(f_lolly(A, B)))), {},
      "everything implies its own pre-disjunction; B = bot gives A |- A^^");

  add("ali-basic-(ii)", CalculusId::ALi, "A |- B -> B * A",
      lolly_i(B, tensor_i(hyp(B), hyp(A))), {},
      "everything is strongly implied by anything");

  {
    FormulaPtr m = simp(A, B);  // A -> A * B
    ProofPtr lr = tensor_e(hyp(f_tensor(A, B)),
                           tensor_i(hyp(A), lolly_i(A, tensor_i(hyp(A), hyp(B)))));
    add("ali-basic-(iii)", CalculusId::ALi, "A * B |- A * (A => B)", lr, {},
        "tensor absorbs the strong implication");
    ProofPtr rl = tensor_e(hyp(f_tensor(A, m)), mp(hyp(A), hyp(m)));
    add("ali-basic-(iii)-conv", CalculusId::ALi, "A * (A => B) |- A * B", rl, {},
        "converse direction");
  }

  {
    FormulaPtr h = cup(C, f_lolly(A, B));  // ((A->B)->C)->C
    FormulaPtr g = cup(C, A), k = f_lolly(B, C);
    ProofPtr t1 = lolly_i(f_lolly(A, B),
                          mp(compose(hyp(f_lolly(A, B)), hyp(k)), hyp(g)));
    ProofPtr t2 = mp(t1, hyp(h));
    add("ali-basic-(iv)", CalculusId::ALi,
        "C | (A -> B) |- (C | A) -> (C | B)",
        lolly_i(g, lolly_i(k, t2)), {}, "pre-disjunction is functorial");
  }

  {
    FormulaPtr ab = f_lolly(nA, nB);
    FormulaPtr h = dd(ab);
    ProofPtr t1 = lolly_i(ab, mp(hyp(B), mp(hyp(nA), hyp(ab))));
    ProofPtr t2 = mp(t1, hyp(h));
    add("ali-basic-(v)", CalculusId::ALi, "((A^ -> B^)^)^ |- A^ -> B^",
        lolly_i(nA, lolly_i(B, t2)), {},
        "double negations collapse on negated implications");
    add("ali-basic-(v)-conv", CalculusId::ALi, "A^ -> B^ |- ((A^ -> B^)^)^",
        dni_of(hyp(ab)), {}, "converse is double negation introduction");
  }

  {
    FormulaPtr g = f_lolly(ddA, ddB);
    add("ali-basic-(vi)", CalculusId::ALi, "A^^ -> B^^ |- A -> B^^",
        compose(dni(A), hyp(g)), {}, "double negation on the premise is free");
    FormulaPtr h = f_lolly(A, ddB);
    ProofPtr na_proof = lolly_i(A, mp(hyp(nB), mp(hyp(A), hyp(h))));  // {h, nB} |- A^
    add("ali-basic-(vi)-conv", CalculusId::ALi, "A -> B^^ |- A^^ -> B^^",
        lolly_i(ddA, lolly_i(nB, mp(na_proof, hyp(ddA)))), {}, "converse direction");
  }

  {
    FormulaPtr h = neg(f_tensor(ddA, ddB));
    ProofPtr cont = mp(tensor_i(dni_of(hyp(A)), dni_of(hyp(B))), hyp(h));
    add("ali-basic-(vii)", CalculusId::ALi, "(A^^ * B^^)^ |- (A * B)^",
        lolly_i(f_tensor(A, B), tensor_e(hyp(f_tensor(A, B)), cont)), {},
        "negation ignores inner double negations");
    FormulaPtr h2 = neg(f_tensor(A, B));
    ProofPtr t2 = compose(curry(hyp(h2)), hyp(ddB));   // {h2, B^^} |- A^
    ProofPtr t3 = mp(t2, hyp(ddA));                    // + A^^ |- bot
    add("ali-basic-(vii)-conv", CalculusId::ALi, "(A * B)^ |- (A^^ * B^^)^",
        lolly_i(f_tensor(ddA, ddB), tensor_e(hyp(f_tensor(ddA, ddB)), t3)), {},
        "converse direction");
  }

  {
    FormulaPtr h = dd(f_tensor(A, B));
    FormulaPtr g = f_lolly(ddA, nB);
    ProofPtr t1 = lolly_i(
        f_tensor(A, B),
        tensor_e(hyp(f_tensor(A, B)), mp(hyp(B), mp(dni_of(hyp(A)), hyp(g)))));
    add("ali-basic-(viii)", CalculusId::ALi, "(A * B)^^ |- (A^^ -> B^)^",
        lolly_i(g, mp(t1, hyp(h))), {},
        "double-negated tensor as a negated implication");
    FormulaPtr h2 = neg(g);
    FormulaPtr nt = neg(f_tensor(A, B));
    ProofPtr s1 = lolly_i(B, lolly_i(A, mp(tensor_i(hyp(A), hyp(B)), hyp(nt))));
    ProofPtr s2 = mp(mp(hyp(B), s1), hyp(ddA));  // {nt, B, A^^} |- bot
    ProofPtr t1c = lolly_i(ddA, lolly_i(B, s2)); // {nt} |- A^^ -> B^
    add("ali-basic-(viii)-conv", CalculusId::ALi, "(A^^ -> B^)^ |- (A * B)^^",
        lolly_i(nt, mp(t1c, hyp(h2))), {}, "converse direction");
  }

  add("dm-tensor", CalculusId::ALi, "(A * B)^ |- A -> B^",
      curry(hyp(neg(f_tensor(A, B)))), {}, "negated tensor curries");
  add("dm-tensor-conv", CalculusId::ALi, "A -> B^ |- (A * B)^",
      uncurry(hyp(f_lolly(A, nB))), {}, "converse by uncurrying");

  // ----------------------------------------------------------------- IL
  add("con-rule", CalculusId::IL, "A |- A * A",
      tensor_e(axiom_con(A), tensor_i(hyp(A), hyp(A))), {},
      "the contraction rule simulated from the contraction axiom");
  add("con-axiom", CalculusId::IL, "|- A -> A * A", lolly_i(A, axiom_con(A)), {},
      "the contraction axiom as a closed theorem");
  add("cwc-from-con", CalculusId::IL, "A, A -> B |- B * (B -> A)",
      tensor_e(axiom_con(A),
               tensor_i(mp(hyp(A), hyp(f_lolly(A, B))), lolly_i(B, assume({B}, A)))),
      {}, "full contraction yields commutativity of weak conjunction");

  // ---------------------------------------------------------------- LLi
  {
    ProofPtr t4 = cwc_pair(hyp(C), hyp(f_lolly(C, A)));  // {C, C->A} |- A * (A->C)
    ProofPtr inner = tensor_i(hyp(A), compose(hyp(f_lolly(A, C)), hyp(f_lolly(C, B))));
    add("cwc-lub", CalculusId::LLi, "C -> A, C -> B, C |- A * (A -> B)",
        tensor_e(t4, inner), {},
        "the pre-conjunction is the weakest formula stronger than both halves");
  }

  add("cap-comm", CalculusId::LLi, "A & B |- B & A",
      tensor_e(hyp(cap(A, B)), axiom_cwc(A, B)), {},
      "commutativity of the pre-conjunction, the CWC axiom itself");

  {
    ProofPtr proj1 = lolly_i(cap(A, B), tensor_e(hyp(cap(A, B)), assume({f_lolly(A, B)}, A)));
    ProofPtr proj2 =
        lolly_i(cap(A, B), tensor_e(hyp(cap(A, B)), mp(hyp(A), hyp(f_lolly(A, B)))));
    ProofPtr t = apply_lemma("cwc-lub", {{"C", cap(A, B)}}, {hyp(cap(A, B)), proj1, proj2});
    add("cap-lub", CalculusId::LLi, "A & B |- A * (A -> B)", t, {"cwc-lub"},
        "the additive-conjunction elimination law with & as the stand-in");
  }

  {
    FormulaPtr m = simp(A, B);
    FormulaPtr h = cup(B, m);  // (M->B)->B
    ProofPtr t3 = lolly_i(
        A, lolly_i(m, tensor_e(mp(hyp(A), hyp(m)), assume({A}, B))));
    ProofPtr bigA = cwc_pair(hyp(A), t3);  // {A} |- (M->B) * ((M->B)->A)
    FormulaPtr c4 = f_lolly(m, B), c5 = f_lolly(c4, A);
    ProofPtr t6 = mp(hyp(c4), hyp(h));
    ProofPtr t7 = lolly_i(B, lolly_i(A, tensor_i(hyp(A), hyp(B))));  // |- B -> M
    ProofPtr bigB = cwc_pair(t6, t7);  // {c4, h} |- M * (M->B)
    ProofPtr t10 = mp(mp(hyp(c4), hyp(c5)), hyp(m));  // {c4', c5, m} |- A * B
    ProofPtr in2 = tensor_e(bigB, t10);
    ProofPtr in1 = tensor_e(bigA, in2);
    add("156", CalculusId::LLi, "B | (A => B) |- A => B",
        lolly_i(A, in1), {},
        "the pre-disjunction with B absorbs into the strong implication");
  }

  {
    FormulaPtr mp_ = simp(nA, B);  // A^ => B
    FormulaPtr g = cup(B, A);
    ProofPtr t2 = lolly_i(
        A, lolly_i(nA, efq_to(mp(hyp(A), hyp(nA)), f_tensor(nA, B))));  // |- A -> M'
    ProofPtr t3 =
        lolly_i(f_lolly(mp_, B), mp(compose(t2, hyp(f_lolly(mp_, B))), hyp(g)));
    ProofPtr t4 = mp(t3, cite(bank, "156", {{"A", nA}, {"B", B}}));
    add("165", CalculusId::LLi, "(A -> B) -> B |- A^ => B", t4, {"156"},
        "pre-disjunction turns into a strong implication from the negation");
  }

  // c-demorgan: (A & B)^ == A => B^
  {
    FormulaPtr h = neg(cap(A, B));
    ProofPtr t2 = k_comb(A, B);  // |- A -> B -> A
    ProofPtr t4 = mp(hyp(h), contrapose(cap_comm_thm(B, A)));  // {h} |- (B & A)^
    ProofPtr t5 = lolly_i(f_lolly(B, A),
                          lolly_i(B, mp(tensor_i(hyp(B), hyp(f_lolly(B, A))), t4)));
    // |- B^ -> ((B->A)->A) -> A * B^   (via lemma 165 with A,B swapped)
    FormulaPtr cupAB = cup(A, B);
    ProofPtr l165 = cite(bank, "165", {{"A", B}, {"B", A}});
    ProofPtr m1 = mp(hyp(cupAB), l165);
    ProofPtr m2 = mp(hyp(nB), m1);
    ProofPtr m3 = tensor_e(m2, tensor_i(hyp(A), hyp(nB)));
    ProofPtr t3f = lolly_i(nB, lolly_i(cupAB, m3));
    ProofPtr t6 = compose(t5, t3f);  // {h} |- (B->A) -> cupAB -> A*B^
    ProofPtr pair = axiom_cwc(A, f_lolly(B, A));
    ProofPtr t7in = mp(hyp(cupAB), mp(hyp(f_lolly(B, A)), t6));
    ProofPtr t7 = tensor_e(pair, t7in);  // {A, A->(B->A), h} |- A*B^
    ProofPtr t8 = lolly_i(A, cut(t2, t7));
    add("c-demorgan", CalculusId::LLi, "(A & B)^ |- A => B^", t8, {"165"},
        "strong implication is the dual of the pre-conjunction");

    FormulaPtr g = simp(A, nB);
    ProofPtr u1 = mp(hyp(A), hyp(g));
    ProofPtr u2 = tensor_e(u1, mp(mp(hyp(A), hyp(f_lolly(A, B))), hyp(nB)));
    ProofPtr u3 = tensor_e(hyp(cap(A, B)), u2);
    add("c-demorgan-conv", CalculusId::LLi, "A => B^ |- (A & B)^",
        lolly_i(cap(A, B), u3), {}, "converse direction");
  }

  {
    ProofPtr chain = compose(
        compose(cite(bank, "c-demorgan-conv", {}), contrapose(cap_comm_thm(B, A))),
        cite(bank, "c-demorgan", {{"A", B}, {"B", A}}));
    add("strong-imp-sym", CalculusId::LLi, "A => B^ |- B => A^",
        mp(hyp(simp(A, nB)), chain), {"c-demorgan", "c-demorgan-conv"},
        "negated strong implication is symmetric since & commutes");
  }

  // a-lolly-b-not-a: NOR commutes
  {
    FormulaPtr ab = f_lolly(A, B), ba = f_lolly(B, A);
    ProofPtr t3 = lolly_i(nA, lolly_i(A, efq_to(mp(hyp(A), hyp(nA)), B)));
    ProofPtr bigT = cwc_pair(hyp(nA), t3);  // {A^} |- (A->B) * ((A->B)->A^)
    FormulaPtr c5 = f_lolly(ab, nA);
    ProofPtr cont = mp(hyp(A), mp(hyp(ab), hyp(c5)));
    ProofPtr v2 = tensor_e(axiom_cwc(B, A), cont);  // {B, B->A, c5} |- bot
    ProofPtr t6 = lolly_i(ba, lolly_i(B, v2));      // {c5} |- (B->A) -> B^
    ProofPtr t7 = mp(hyp(ba), t6);
    ProofPtr t8 = tensor_i(t7, hyp(ab));            // {ba, c5, ab} |- B^ * (A->B)
    ProofPtr t9 = tensor_e(bigT, t8);               // {A^, ba} |- ...
    add("a-lolly-b-not-a", CalculusId::LLi, "A # B |- B # A",
        tensor_e(hyp(nor(A, B)), t9), {}, "the NOR connective commutes intuitionistically");
  }

  // thm139: double negation of DNE
  {
    FormulaPtr X = simp(nA, A);  // A^ => A
    FormulaPtr h = neg(f_lolly(ddA, A));
    FormulaPtr xa = f_lolly(X, A);
    ProofPtr t2 = lolly_i(ddA, lolly_i(nA, efq_to(mp(hyp(nA), hyp(ddA)), f_tensor(nA, A))));
    ProofPtr t3 = lolly_i(xa, mp(compose(t2, hyp(xa)), hyp(h)));  // {h} |- (X->A)^
    ProofPtr t4 = k_comb(A, X);                                   // |- A -> X -> A... no:
    // k_comb(A, X) : |- A -> (X -> A), the second NOR component
    ProofPtr t5 = tensor_i(t3, t4);  // {h} |- (X->A)^ * (A -> (X->A)) = Nor(X->A, A)
    ProofPtr t6 = mp(t5, cite(bank, "a-lolly-b-not-a", {{"A", xa}, {"B", A}}));
    // t6: {h} |- A^ * ((X->A)->A)
    FormulaPtr cupAX = cup(A, X);
    ProofPtr w1 = mp(hyp(cupAX), cite(bank, "156", {{"A", nA}, {"B", A}}));
    ProofPtr w2 = mp(hyp(nA), w1);
    ProofPtr w3 = tensor_e(w2, mp(hyp(A), hyp(nA)));  // {A^, cupAX} |- bot
    ProofPtr t8 = tensor_e(t6, w3);                   // {h} |- bot
    add("thm139", CalculusId::LLi, "|- (A^^ -> A)^^", lolly_i(h, t8),
        {"a-lolly-b-not-a", "156"}, "the double negation of double negation elimination");
  }

  // k-negated: (A | B)^ == A # B
  {
    FormulaPtr cupAB = cup(A, B);
    FormulaPtr h = neg(cupAB);
    FormulaPtr ba = f_lolly(B, A);
    ProofPtr w = lolly_i(ba, mp(hyp(B), hyp(ba)));  // {B} |- cupAB
    ProofPtr t2 = lolly_i(h, lolly_i(B, efq_to(mp(w, hyp(h)), A)));  // |- h-type -> (B->A)
    ProofPtr bigT = cwc_pair(hyp(h), t2);  // {h} |- (B->A) * ((B->A) -> cupAB^)
    FormulaPtr c4f = f_lolly(ba, neg(cupAB));
    FormulaPtr L = f_tensor(ba, cupAB);
    ProofPtr t5 = lolly_i(
        L, tensor_e(hyp(L), mp(hyp(cupAB), mp(hyp(ba), hyp(c4f)))));  // {c4} |- (ba*cup)^
    ProofPtr t6 = mp(t5, contrapose(cap_comm_thm(A, ba)));  // {c4} |- (A & (A->(B->A)))^
    ProofPtr t8 = lolly_i(A, mp(tensor_i(hyp(A), k_comb(A, B)), t6));  // {c4} |- A^
    ProofPtr t9 = tensor_i(t8, hyp(ba));
    add("k-negated", CalculusId::LLi, "(A | B)^ |- A # B", tensor_e(bigT, t9), {},
        "NOR is the negation of the pre-disjunction");

    ProofPtr cnt = mp(mp(hyp(ba), hyp(cupAB)), hyp(nA));  // {ba, cup, A^} |- bot
    ProofPtr rl = tensor_e(hyp(nor(A, B)), lolly_i(cupAB, cnt));
    add("k-negated-conv", CalculusId::LLi, "A # B |- (A | B)^", rl, {},
        "easy direction");
  }

  {
    ProofPtr chain = compose(compose(cite(bank, "k-negated", {}),
                                     cite(bank, "a-lolly-b-not-a", {})),
                             cite(bank, "k-negated-conv", {{"A", B}, {"B", A}}));
    add("cup-neg-sym", CalculusId::LLi, "(A | B)^ |- (B | A)^",
        mp(hyp(neg(cup(A, B))), chain),
        {"k-negated", "k-negated-conv", "a-lolly-b-not-a"},
        "pre-disjunction commutes under a negation");
  }

  // thm-lolly-not-not: A^^ -> B^^ == (A -> B)^^
  {
    FormulaPtr g = f_lolly(ddA, ddB);
    ProofPtr t3 = compose(dni(A), hyp(g));  // {g} |- A -> B^^
    ProofPtr t4 = lolly_i(f_lolly(ddB, B), compose(t3, hyp(f_lolly(ddB, B))));
    ProofPtr t5 = contrapose(t4);  // {g} |- (A->B)^ -> (B^^ -> B)^
    ProofPtr t6 = compose(t5, cite(bank, "thm139", {{"A", B}}));
    add("thm-lolly-not-not", CalculusId::LLi, "A^^ -> B^^ |- (A -> B)^^", t6, {"thm139"},
        "double negation is a homomorphism for implication");
    ProofPtr conv = mp(hyp(dd(f_lolly(A, B))),
                       cite(bank, "ali-basic-(iv)", {{"C", f_bot()}}));
    add("thm-lolly-not-not-conv", CalculusId::ALi, "(A -> B)^^ |- A^^ -> B^^", conv,
        {"ali-basic-(iv)"}, "converse holds already in the affine system");
  }

  // guess
  {
    FormulaPtr ac = f_lolly(A, C), cb = f_lolly(C, B), ab = f_lolly(A, B);
    ProofPtr t3 = lolly_i(ac, compose(hyp(ac), hyp(cb)));  // {cb} |- (A->C)->(A->B)
    ProofPtr t4 = cwc_pair(hyp(ac), t3);  // {ac, cb} |- (A->B) * ((A->B)->(A->C))
    FormulaPtr c2 = f_lolly(ab, ac);
    ProofPtr t5 = lolly_i(
        cap(A, B), tensor_e(hyp(cap(A, B)), mp(hyp(A), mp(hyp(ab), hyp(c2)))));
    add("guess", CalculusId::LLi, "A -> C, C -> B |- (A -> B) * ((A & B) -> C)",
        tensor_e(t4, tensor_i(hyp(ab), t5)), {},
        "a sandwiched formula factors through the pre-conjunction");
  }

  // guess-il: A^ == (A -> B) * (A & B)^
  {
    ProofPtr t = apply_lemma("guess", {{"C", f_bot()}}, {hyp(nA), efq_impl(B)});
    add("guess-il", CalculusId::LLi, "A^ |- (A -> B) * (A & B)^", t, {"guess"},
        "specialization of the factoring lemma to C = bot");
    FormulaPtr ab = f_lolly(A, B), n = neg(cap(A, B));
    ProofPtr inner = mp(tensor_i(hyp(A), hyp(ab)), hyp(n));
    add("guess-il-conv", CalculusId::ALi, "(A -> B) * (A & B)^ |- A^",
        tensor_e(hyp(f_tensor(ab, n)), lolly_i(A, inner)), {}, "converse direction");
  }

  // lolly-plus: (A^ -> B)^ == A^ * B^
  {
    FormulaPtr hf = neg(f_lolly(nA, B));           // (A^ -> B)^
    FormulaPtr F = f_lolly(ddA, f_tensor(ddA, hf));  // A^^ => (A^->B)^
    ProofPtr s3 = lolly_i(nA, efq_to(mp(hyp(nA), hyp(ddA)), B));  // {A^^} |- A^ -> B
    ProofPtr s4 = mp(s3, hyp(hf));                                // {A^^, hf} |- bot
    ProofPtr s5 = tensor_e(mp(dni_of(hyp(A)), hyp(F)), s4);       // {A, F} |- bot
    ProofPtr dev0 = lolly_i(F, lolly_i(A, s5));                   // |- F -> A^
    FormulaPtr Y = f_lolly(f_lolly(nA, B), ddA);
    ProofPtr h2y = lolly_i(
        hf, lolly_i(f_lolly(nA, B), efq_to(mp(hyp(f_lolly(nA, B)), hyp(hf)), ddA)));
    ProofPtr bigT = cwc_pair(hyp(hf), h2y);  // {hf} |- Y * (Y -> hf)
    FormulaPtr c2 = f_lolly(Y, hf);
    FormulaPtr L2 = cap(nA, B);  // A^ * (A^ -> B)
    ProofPtr dev2 = lolly_i(
        L2, tensor_e(hyp(L2), mp(hyp(nA), mp(hyp(f_lolly(nA, B)), hyp(Y)))));  // {Y} |- (A^&B)^
    ProofPtr dev4 = mp(dev2, cite(bank, "c-demorgan", {{"A", nA}, {"B", B}}));
    // dev4 : {Y} |- A^ => B^
    FormulaPtr L5 = f_tensor(f_lolly(nA, B), Y);  // (A^->B) & A^^
    ProofPtr dev5 = lolly_i(
        L5, tensor_e(hyp(L5), mp(hyp(f_lolly(nA, B)), mp(hyp(Y), hyp(c2)))));  // {c2} |- L5^
    ProofPtr step1 = contrapose(cap_comm_thm(ddA, f_lolly(nA, B)));
    ProofPtr step2 = cite(bank, "c-demorgan", {{"A", ddA}, {"B", f_lolly(nA, B)}});
    ProofPtr dev6 = mp(mp(dev5, step1), step2);  // {c2} |- A^^ => (A^->B)^
    ProofPtr dev8 = mp(dev6, dev0);              // {c2} |- A^
    ProofPtr dev9 = mp(dev8, dev4);              // {c2, Y} |- A^ * B^
    add("lolly-plus", CalculusId::LLi, "(A^ -> B)^ |- A^ * B^", tensor_e(bigT, dev9),
        {"c-demorgan"}, "negation turns an implication from a negation into a tensor");
    ProofPtr cnt = mp(mp(hyp(nA), hyp(f_lolly(nA, B))), hyp(nB));
    add("lolly-plus-conv", CalculusId::ALi, "A^ * B^ |- (A^ -> B)^",
        tensor_e(hyp(f_tensor(nA, nB)), lolly_i(f_lolly(nA, B), cnt)), {},
        "easy direction");
  }

  // main-thm-n-trans: (A * B)^^ == A^^ * B^^
  {
    ProofPtr lr = mp(mp(hyp(dd(f_tensor(A, B))), cite(bank, "ali-basic-(viii)", {})),
                     cite(bank, "lolly-plus", {{"A", nA}, {"B", nB}}));
    add("main-thm-n-trans", CalculusId::LLi, "(A * B)^^ |- A^^ * B^^", lr,
        {"ali-basic-(viii)", "lolly-plus"},
        "double negation is a homomorphism for conjunction");
    ProofPtr rl = mp(mp(hyp(f_tensor(ddA, ddB)),
                        cite(bank, "lolly-plus-conv", {{"A", nA}, {"B", nB}})),
                     cite(bank, "ali-basic-(viii)-conv", {}));
    add("main-thm-n-trans-conv", CalculusId::LLi, "A^^ * B^^ |- (A * B)^^", rl,
        {"lolly-plus-conv", "ali-basic-(viii)-conv"}, "converse direction");
  }

  // ------------------------------------------------- the De Morgan table
  // rows 1 (tensor) and 3 (cap, = c-demorgan) already exist as entries

  auto add_equiv = [&](const std::string& id, const Equiv& e, const std::string& lhs_txt,
                       const std::string& rhs_txt, std::vector<std::string> deps,
                       const std::string& note) {
    add(id, CalculusId::LLi, lhs_txt + " |- " + rhs_txt, mp(hyp(e.lhs), e.lr), deps, note);
    add(id + "-conv", CalculusId::LLi, rhs_txt + " |- " + lhs_txt, mp(hyp(e.rhs), e.rl),
        deps, "converse direction");
  };

  Equiv eq_lnn = eq_cited("thm-lolly-not-not-conv", "thm-lolly-not-not", {});
  // eq_lnn : (A->B)^^ == A^^ -> B^^

  {
    // (A -> B)^ == A^^ * B^
    Equiv e = eq_triple_neg(f_lolly(A, B));
    e = equiv_trans(e, equiv_neg(eq_lnn));                   // == (A^^ -> B^^)^
    e = equiv_trans(e, equiv_neg(eq_dd_imp(A, B)));          // == (B^ -> A^)^
    e = equiv_trans(e, eq_cited("lolly-plus", "lolly-plus-conv", {{"A", B}, {"B", nA}}));
    // == B^ * A^^
    e = equiv_trans(e, eq_tensor_comm(nB, dd(A)));           // == A^^ * B^
    add_equiv("dm-lolly", e, "(A -> B)^", "A^^ * B^",
              {"thm-lolly-not-not", "thm-lolly-not-not-conv", "lolly-plus",
               "lolly-plus-conv"},
              "negated implication is a tensor");
  }

  {
    // (A => B)^ == A^^ & B^
    Equiv e = eq_cited("dm-lolly", "dm-lolly-conv", {{"B", f_tensor(A, B)}});
    // (A => B)^ == A^^ * (A*B)^
    e = equiv_trans(e, equiv_tensor(equiv_refl(ddA), eq_tensor_neg_flip(A, B)));
    e = equiv_trans(e, equiv_tensor(equiv_refl(ddA),
                                    equiv_lolly(equiv_refl(B), eq_triple_neg(A))));
    e = equiv_trans(e, equiv_tensor(equiv_refl(ddA), eq_swap_prem(B, ddA)));
    add_equiv("dm-simp", e, "(A => B)^", "A^^ & B^", {"dm-lolly", "dm-lolly-conv"},
              "negated strong implication is a pre-conjunction");
  }

  {
    // (A & B)^ == A^ | B^
    Equiv e = eq_tensor_neg_flip(A, f_lolly(A, B));   // (A&B)^ == (A->B) -> A^
    e = equiv_trans(e, eq_dneg_prem(f_lolly(A, B), A));  // == (A->B)^^ -> A^
    e = equiv_trans(e, equiv_lolly(eq_lnn, equiv_refl(nA)));  // == (A^^->B^^) -> A^
    e = equiv_trans(e, equiv_lolly(eq_dd_imp(A, B), equiv_refl(nA)));  // == (B^->A^)->A^
    add_equiv("dm-cap-cup", e, "(A & B)^", "A^ | B^",
              {"thm-lolly-not-not", "thm-lolly-not-not-conv"},
              "negated pre-conjunction is a pre-disjunction of negations");
  }

  {
    // (A | B)^ == A^ & B^
    Equiv e = eq_cited("dm-lolly", "dm-lolly-conv", {{"A", f_lolly(B, A)}, {"B", A}});
    // (A|B)^ == (B->A)^^ * A^
    Equiv inner = equiv_neg(eq_cited("dm-lolly", "dm-lolly-conv", {{"A", B}, {"B", A}}));
    // (B->A)^^ == (B^^ * A^)^
    e = equiv_trans(e, equiv_tensor(inner, equiv_refl(nA)));
    Equiv split = eq_tensor_neg_flip(dd(B), nA);  // (B^^ * A^)^ == A^ -> B^^^
    split = equiv_trans(split, equiv_lolly(equiv_refl(nA), equiv_sym(eq_triple_neg(B))));
    e = equiv_trans(e, equiv_tensor(split, equiv_refl(nA)));  // == (A^ -> B^) * A^
    e = equiv_trans(e, eq_tensor_comm(f_lolly(nA, nB), nA));  // == A^ * (A^ -> B^)
    add_equiv("dm-cup", e, "(A | B)^", "A^ & B^", {"dm-lolly", "dm-lolly-conv"},
              "negated pre-disjunction is a pre-conjunction of negations");
  }

  {
    // (A # B)^ == A^ => B^^
    Equiv e = equiv_neg(equiv_sym(eq_cited("k-negated", "k-negated-conv", {})));
    // (A#B)^ == (A|B)^^
    e = equiv_trans(e, equiv_neg(eq_cited("dm-cup", "dm-cup-conv", {})));
    // == (A^ & B^)^
    e = equiv_trans(e, eq_cited("c-demorgan", "c-demorgan-conv", {{"A", nA}, {"B", nB}}));
    add_equiv("dm-nor", e, "(A # B)^", "A^ => B^^",
              {"k-negated", "k-negated-conv", "dm-cup", "dm-cup-conv", "c-demorgan",
               "c-demorgan-conv"},
              "negated NOR is a strong implication");
  }

  // ------------------------------------------------------------- index
  std::ofstream out(dir / "index.tsv");
  out << "# id\tcalculus\tfile\tdeps\tstatement\tnote\n";
  for (const auto& e : index) {
    out << e.id << '\t' << to_string(e.calculus) << '\t' << e.file << '\t';
    if (e.deps.empty()) {
      out << '-';
    } else {
      for (size_t i = 0; i < e.deps.size(); ++i) out << (i ? "," : "") << e.deps[i];
    }
    out << '\t' << to_string(e.statement) << '\t' << e.note << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: corpusgen <output-dir>\n";
    return 2;
  }
  Gen gen;
  gen.dir = argv[1];
  std::filesystem::create_directories(gen.dir);
  try {
    gen.run();
  } catch (const std::exception& ex) {
    std::cerr << "[gen] fatal: " << ex.what() << "\n";
    return 1;
  }
  if (gen.failures) {
    std::cerr << "[gen] " << gen.failures << " entrie(s) failed\n";
    return 1;
  }
  std::cout << "[gen] wrote " << gen.index.size() << " entries\n";
  return 0;
}
