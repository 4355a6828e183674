// ============================================================================
// alw/corpus.hpp — the proof corpus: index, batch verification, semantic
// cross-checks
// ============================================================================
//
// A corpus directory holds one proof file per entry plus index.tsv with
// tab-separated columns
//
//   id <TAB> calculus <TAB> file <TAB> deps <TAB> statement <TAB> note
//
// deps is a comma-separated list of entry ids ("-" when empty).  Entries are
// verified in dependency order; each verified entry contributes its closed
// form (hypotheses curried in canonical order) to the lemma bank under its
// id, which is how later proofs cite it.
// ============================================================================

#ifndef ALW_CORPUS_HPP
#define ALW_CORPUS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alw/pocrim.hpp"
#include "alw/proof.hpp"

namespace alw {

struct CorpusEntry {
  std::string id;
  CalculusId calculus{};
  Sequent statement;
  std::string file;
  std::vector<std::string> deps;
  std::string note;
};

struct Corpus {
  std::string dir;
  std::vector<CorpusEntry> entries;  // index order
  const CorpusEntry* find(const std::string& id) const;
};

Corpus load_corpus(const std::string& dir);

struct EntryResult {
  std::string id;
  bool selected = true;  // in the calculus filter (dependencies may not be)
  bool ok = false;
  std::string error;
  double millis = 0.0;
};

struct VerifyReport {
  std::vector<EntryResult> results;
  LemmaBank bank;  // closed forms of everything that verified
  bool all_ok = true;
};

// Verifies entries in dependency order.  With a filter, only entries of that
// calculus (plus their transitive dependencies) are processed; others are
// omitted from the report.  Throws std::runtime_error on dependency cycles
// or missing dependencies.
VerifyReport verify_corpus(const Corpus& c, std::optional<CalculusId> filter = {});
VerifyReport verify_corpus(const std::string& dir, std::optional<CalculusId> filter = {});

// ------------------------------------------------------------- cross-checks

struct CrosscheckRow {
  std::string model;
  enum class Status { Valid, NotApplicable, Violation } status;
  std::optional<Countermodel> counter;
};

// The entry's sequent must be valid in every model of its calculus; models
// that do not model the calculus are reported not-applicable.
std::vector<CrosscheckRow> semantic_crosscheck(const CorpusEntry& e,
                                               std::span<const Pocrim> models);

}  // namespace alw

#endif
