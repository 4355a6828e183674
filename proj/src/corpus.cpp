#include "alw/corpus.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace alw {

const CorpusEntry* Corpus::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}
}  // namespace

Corpus load_corpus(const std::string& dir) {
  std::ifstream in(dir + "/index.tsv");
  if (!in) throw std::runtime_error("cannot open corpus index: " + dir + "/index.tsv");
  Corpus c;
  c.dir = dir;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 6)
      throw std::runtime_error("index.tsv line " + std::to_string(lineno) +
                               ": expected 6 tab-separated columns");
    CorpusEntry e;
    e.id = cols[0];
    auto calc = calculus_from_string(cols[1]);
    if (!calc)
      throw std::runtime_error("index.tsv line " + std::to_string(lineno) +
                               ": unknown calculus " + cols[1]);
    e.calculus = *calc;
    e.file = cols[2];
    if (cols[3] != "-" && !cols[3].empty())
      e.deps = split(cols[3], ',');
    e.statement = parse_sequent(cols[4]);
    e.note = cols[5];
    c.entries.push_back(std::move(e));
  }
  return c;
}

VerifyReport verify_corpus(const Corpus& c, std::optional<CalculusId> filter) {
  // topological order over deps
  std::map<std::string, const CorpusEntry*> by_id;
  for (const auto& e : c.entries) {
    if (by_id.count(e.id)) throw std::runtime_error("duplicate corpus id: " + e.id);
    by_id[e.id] = &e;
  }
  std::vector<const CorpusEntry*> order;
  std::map<std::string, int> state;  // 0 unseen, 1 visiting, 2 done
  std::function<void(const CorpusEntry*)> visit = [&](const CorpusEntry* e) {
    int& st = state[e->id];
    if (st == 2) return;
    if (st == 1) throw std::runtime_error("dependency cycle through corpus entry " + e->id);
    st = 1;
    for (const auto& d : e->deps) {
      auto it = by_id.find(d);
      if (it == by_id.end())
        throw std::runtime_error("entry " + e->id + " depends on missing entry " + d);
      visit(it->second);
    }
    st = 2;
    order.push_back(e);
  };

  std::map<std::string, bool> selected;
  if (!filter) {
    for (const auto& e : c.entries) visit(&e);
    for (const auto& e : c.entries) selected[e.id] = true;
  } else {
    for (const auto& e : c.entries)
      if (e.calculus == *filter) {
        visit(&e);
        selected[e.id] = true;
      }
  }

  VerifyReport report;
  for (const CorpusEntry* e : order) {
    EntryResult r;
    r.id = e->id;
    r.selected = selected.count(e->id) > 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ProofFile pf = read_proof_file(c.dir + "/" + e->file);
      if (pf.id != e->id)
        throw std::runtime_error("proof file id '" + pf.id + "' differs from index id");
      if (pf.calculus != e->calculus)
        throw std::runtime_error("proof file calculus differs from index");
      if (!(pf.statement == e->statement))
        throw std::runtime_error("proof file statement differs from index");
      if (!(pf.root->conclusion == e->statement))
        throw std::runtime_error("root conclusion differs from the statement");
      if (auto err = check_proof(pf.root, e->calculus, report.bank))
        throw std::runtime_error(to_string(*err));
      r.ok = true;
      report.bank[e->id] = LemmaInfo{closed_form(e->statement), e->calculus};
    } catch (const std::exception& ex) {
      r.ok = false;
      r.error = ex.what();
      report.all_ok = false;
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    report.results.push_back(std::move(r));
  }
  return report;
}

VerifyReport verify_corpus(const std::string& dir, std::optional<CalculusId> filter) {
  return verify_corpus(load_corpus(dir), filter);
}

std::vector<CrosscheckRow> semantic_crosscheck(const CorpusEntry& e,
                                               std::span<const Pocrim> models) {
  std::vector<CrosscheckRow> rows;
  for (const Pocrim& m : models) {
    CrosscheckRow row;
    row.model = m.name();
    if (!models_calculus(m).count(e.calculus)) {
      row.status = CrosscheckRow::Status::NotApplicable;
    } else if (auto cm = sequent_countermodel(m, e.statement)) {
      row.status = CrosscheckRow::Status::Violation;
      row.counter = cm;
    } else {
      row.status = CrosscheckRow::Status::Valid;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace alw
