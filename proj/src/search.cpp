#include "alw/search.hpp"

#include <algorithm>
#include <map>

namespace alw {

std::string to_string(ModelClass c) {
  switch (c) {
    case ModelClass::Pocrim: return "pocrim";
    case ModelClass::Hoop: return "hoop";
    case ModelClass::InvolutivePocrim: return "involutive-pocrim";
    case ModelClass::InvolutiveHoop: return "involutive-hoop";
    case ModelClass::Idempotent: return "idempotent";
  }
  return "?";
}

std::optional<ModelClass> model_class_from_string(const std::string& s) {
  if (s == "pocrim") return ModelClass::Pocrim;
  if (s == "hoop") return ModelClass::Hoop;
  if (s == "involutive-pocrim") return ModelClass::InvolutivePocrim;
  if (s == "involutive-hoop") return ModelClass::InvolutiveHoop;
  if (s == "idempotent") return ModelClass::Idempotent;
  return std::nullopt;
}

bool in_model_class(const Pocrim& m, ModelClass c) {
  Classification k = classify(m);
  switch (c) {
    case ModelClass::Pocrim: return true;
    case ModelClass::Hoop: return k.is_hoop;
    case ModelClass::InvolutivePocrim: return k.is_involutive;
    case ModelClass::InvolutiveHoop: return k.is_involutive && k.is_hoop;
    case ModelClass::Idempotent: return k.is_idempotent;
  }
  return false;
}

namespace {

// Convention inside the enumerator: index 0 is the unit (top), index n-1 the
// zero (bottom).

using LeqMat = std::vector<std::vector<uint8_t>>;
using OpMat = std::vector<std::vector<int>>;

std::vector<LeqMat> all_posets(int n) {
  std::vector<LeqMat> out;
  std::vector<int> mids;
  for (int i = 1; i < n - 1; ++i) mids.push_back(i);
  std::vector<std::pair<int, int>> pairs;
  for (int i : mids)
    for (int j : mids)
      if (i != j) pairs.push_back({i, j});
  size_t np = pairs.size();
  for (uint64_t bits = 0; bits < (uint64_t)1 << np; ++bits) {
    LeqMat leq(n, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) {
      leq[i][i] = 1;
      leq[i][0] = 1;          // everything below the unit
      leq[n - 1][i] = 1;      // zero below everything
    }
    bool ok = true;
    for (size_t k = 0; k < np; ++k)
      if (bits >> k & 1) leq[pairs[k].first][pairs[k].second] = 1;
    // antisymmetry and transitivity among the middles
    for (int i : mids) {
      for (int j : mids) {
        if (i != j && leq[i][j] && leq[j][i]) { ok = false; break; }
        for (int k : mids)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) { ok = false; break; }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(leq));
  }
  return out;
}

// residual of a candidate table; nullopt when some pair has no maximum
std::optional<OpMat> residual_table(const LeqMat& leq, const OpMat& mult) {
  int n = (int)leq.size();
  OpMat imp(n, std::vector<int>(n, -1));
  std::vector<int> sat;
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      sat.clear();
      for (int x = 0; x < n; ++x)
        if (leq[mult[x][y]][z]) sat.push_back(x);
      int best = -1;
      for (int m : sat) {
        bool dominates = true;
        for (int x : sat)
          if (!leq[x][m]) { dominates = false; break; }
        if (dominates) { best = m; break; }
      }
      if (best < 0) return std::nullopt;  // no maximum: not residuated
      imp[y][z] = best;
    }
  return imp;
}

struct CanonKey {
  std::vector<uint8_t> bytes;
  bool operator<(const CanonKey& o) const { return bytes < o.bytes; }
  bool operator==(const CanonKey& o) const { return bytes == o.bytes; }
};

// Lexicographically minimal concatenated (leq, mult) tables over all
// bijections fixing unit (0) and zero (n-1); also returns the minimizing
// relabeling as new-index -> old-index.
CanonKey canonical_key(const LeqMat& leq, const OpMat& mult, std::vector<int>* best_perm) {
  int n = (int)leq.size();
  std::vector<int> mids;
  for (int i = 1; i < n - 1; ++i) mids.push_back(i);
  CanonKey best;
  std::vector<int> perm;  // new index -> old index
  std::sort(mids.begin(), mids.end());
  do {
    std::vector<int> full(n);
    full[0] = 0;
    full[n - 1] = n - 1;
    for (int i = 0; i < n - 2; ++i) full[i + 1] = mids[i];
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[full[i]] = i;
    CanonKey key;
    key.bytes.reserve(2 * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key.bytes.push_back(leq[full[i]][full[j]]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key.bytes.push_back((uint8_t)inv[mult[full[i]][full[j]]]);
    if (best.bytes.empty() || key < best) {
      best = std::move(key);
      perm = full;
    }
  } while (std::next_permutation(mids.begin(), mids.end()));
  if (best_perm) *best_perm = perm;
  return best;
}

Pocrim relabel(const LeqMat& leq, const OpMat& mult, const OpMat& imp,
               const std::vector<int>& full /* new -> old */, const std::string& name) {
  int n = (int)leq.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[full[i]] = i;
  LeqMat l2(n, std::vector<uint8_t>(n, 0));
  OpMat m2(n, std::vector<int>(n, 0)), i2(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      l2[i][j] = leq[full[i]][full[j]];
      m2[i][j] = inv[mult[full[i]][full[j]]];
      i2[i][j] = inv[imp[full[i]][full[j]]];
    }
  std::vector<std::string> names(n);
  names[0] = "1";
  names[n - 1] = n == 1 ? "1" : "0";
  static const char* mid_names = "abcdefgh";
  for (int i = 1; i < n - 1; ++i) names[i] = std::string(1, mid_names[i - 1]);
  return make_pocrim_unchecked(name, names, 0, n - 1, std::move(l2), std::move(m2),
                               std::move(i2));
}

}  // namespace

std::vector<Pocrim> enumerate_pocrims(const EnumerationTask& task) {
  int n = task.order;
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (n > task.hard_bound)
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds the bound " +
                                std::to_string(task.hard_bound));
  if (n > task.practical_bound && task.warning)
    task.warning("order " + std::to_string(n) +
                 " is past the practical bound; expect a long enumeration");

  struct Candidate {
    LeqMat leq;
    OpMat mult, imp;
    CanonKey key;
    std::vector<int> perm;
  };
  std::vector<Candidate> found;

  if (n == 1) {
    LeqMat leq{{1}};
    OpMat mult{{0}}, imp{{0}};
    found.push_back({leq, mult, imp, CanonKey{{1, 0}}, {0}});
  } else {
    for (const LeqMat& leq : all_posets(n)) {
      // free cells: unordered pairs of middles (plus squares); unit and zero
      // rows are forced
      std::vector<std::pair<int, int>> cells;
      for (int i = 1; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) cells.push_back({i, j});
      OpMat mult(n, std::vector<int>(n, 0));
      for (int x = 0; x < n; ++x) {
        mult[0][x] = mult[x][0] = x;              // unit
        mult[n - 1][x] = mult[x][n - 1] = n - 1;  // zero is absorbing
      }
      auto lower_bounds = [&](int i, int j) {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
          if (leq[v][i] && leq[v][j]) out.push_back(v);
        return out;
      };
      std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              for (int z = 0; z < n; ++z) {
                if (mult[mult[x][y]][z] != mult[x][mult[y][z]]) return;
                if (leq[x][y] && !leq[mult[x][z]][mult[y][z]]) return;
              }
            }
          auto imp = residual_table(leq, mult);
          if (!imp) return;
          Candidate c;
          c.leq = leq;
          c.mult = mult;
          c.imp = *imp;
          c.key = canonical_key(leq, mult, &c.perm);
          found.push_back(std::move(c));
          return;
        }
        auto [i, j] = cells[k];
        for (int v : lower_bounds(i, j)) {
          mult[i][j] = mult[j][i] = v;
          rec(k + 1);
        }
        mult[i][j] = mult[j][i] = 0;
      };
      rec(0);
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  std::vector<Pocrim> out;
  const CanonKey* last = nullptr;
  int counter = 0;
  for (const auto& c : found) {
    if (task.dedup && last && c.key == *last) continue;
    last = &c.key;
    Pocrim p = relabel(c.leq, c.mult, c.imp, c.perm, "");
    if (!in_model_class(p, task.cls)) continue;
    ++counter;
    p.rename("p" + std::to_string(n) + "_" + std::to_string(counter));
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Pocrim& a, const Pocrim& b) {
  if (a.order() != b.order()) return std::nullopt;
  int n = a.order();
  std::vector<int> mids_a, mids_b;
  for (int i = 0; i < n; ++i) {
    if (i != a.unit() && i != a.zero()) mids_a.push_back(i);
    if (i != b.unit() && i != b.zero()) mids_b.push_back(i);
  }
  std::sort(mids_b.begin(), mids_b.end());
  do {
    std::vector<int> h(n, -1);
    h[a.unit()] = b.unit();
    h[a.zero()] = b.zero();
    for (size_t i = 0; i < mids_a.size(); ++i) h[mids_a[i]] = mids_b[i];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y) {
        if (a.leq(x, y) != b.leq(h[x], h[y])) { ok = false; break; }
        if (h[a.mult(x, y)] != b.mult(h[x], h[y])) { ok = false; break; }
      }
    if (ok) return h;
  } while (std::next_permutation(mids_b.begin(), mids_b.end()));
  return std::nullopt;
}

std::optional<FoundCountermodel> find_countermodel(const CountermodelQuery& q) {
  auto try_model = [&](const Pocrim& m) -> std::optional<FoundCountermodel> {
    if (!in_model_class(m, q.cls)) return std::nullopt;
    if (auto cm = find_countermodel(m, q.goal))
      return FoundCountermodel{m, cm->interp, cm->value};
    return std::nullopt;
  };
  if (!q.bank.empty()) {
    for (const Pocrim& m : q.bank)
      if (auto r = try_model(m)) return r;
    return std::nullopt;
  }
  for (int order = 2; order <= q.max_order; ++order) {
    EnumerationTask task;
    task.order = order;
    task.cls = q.cls;
    for (const Pocrim& m : enumerate_pocrims(task))
      if (auto r = try_model(m)) return r;
  }
  return std::nullopt;
}

TheoryCheckReport theory_implication_check(const Pocrim& premise, const Pocrim& goal,
                                           Scheme scheme,
                                           std::span<const FormulaPtr> samples) {
  TheoryCheckReport report;
  report.total = samples.size();
  for (const FormulaPtr& f : samples) {
    if (!satisfies(premise, f)) continue;
    ++report.checked;
    FormulaPtr tf = translate(scheme, f);
    if (auto cm = find_countermodel(goal, tf))
      report.violations.push_back({f, cm->interp, cm->value});
  }
  return report;
}

}  // namespace alw
