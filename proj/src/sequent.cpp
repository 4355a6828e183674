#include "alw/sequent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alw {

namespace {
bool less(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) < 0; }
}

Sequent::Sequent(std::vector<FormulaPtr> ctx, FormulaPtr concl)
    : context(std::move(ctx)), conclusion(std::move(concl)) {
  std::sort(context.begin(), context.end(), less);
}

bool operator==(const Sequent& a, const Sequent& b) {
  if (!equal(a.conclusion, b.conclusion)) return false;
  if (a.context.size() != b.context.size()) return false;
  for (size_t i = 0; i < a.context.size(); ++i)
    if (!equal(a.context[i], b.context[i])) return false;
  return true;
}

std::vector<FormulaPtr> ms_union(const std::vector<FormulaPtr>& a,
                                 const std::vector<FormulaPtr>& b) {
  std::vector<FormulaPtr> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}

bool ms_remove_one(std::vector<FormulaPtr>& v, const FormulaPtr& f) {
  auto it = std::lower_bound(v.begin(), v.end(), f, less);
  if (it == v.end() || !equal(*it, f)) return false;
  v.erase(it);
  return true;
}

bool ms_contains(const std::vector<FormulaPtr>& v, const FormulaPtr& f) {
  auto it = std::lower_bound(v.begin(), v.end(), f, less);
  return it != v.end() && equal(*it, f);
}

std::string to_string(const Sequent& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.context.size(); ++i) {
    if (i) os << ", ";
    os << to_string_core(s.context[i]);
  }
  if (!s.context.empty()) os << ' ';
  os << "|- " << to_string_core(s.conclusion);
  return os.str();
}

Sequent parse_sequent(const std::string& text) {
  size_t turnstile = text.find("|-");
  if (turnstile == std::string::npos)
    throw ParseError(0, "sequent is missing '|-'");
  std::string lhs = text.substr(0, turnstile);
  std::string rhs = text.substr(turnstile + 2);
  std::vector<FormulaPtr> ctx;
  size_t start = 0;
  // split on commas; formulas contain none.  Sequents live in the core
  // language, so sugar in the text is desugared here.
  while (start < lhs.size()) {
    size_t comma = lhs.find(',', start);
    std::string part = lhs.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start);
    size_t a = part.find_first_not_of(" \t");
    if (a != std::string::npos) ctx.push_back(desugar(parse_formula(part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Sequent(std::move(ctx), desugar(parse_formula(rhs)));
}

FormulaPtr sequent_to_formula(const Sequent& s, std::span<const FormulaPtr> order) {
  std::vector<FormulaPtr> check(order.begin(), order.end());
  std::sort(check.begin(), check.end(), less);
  if (check.size() != s.context.size())
    throw std::invalid_argument("order does not enumerate the context");
  for (size_t i = 0; i < check.size(); ++i)
    if (!equal(check[i], s.context[i]))
      throw std::invalid_argument("order does not enumerate the context");
  FormulaPtr out = s.conclusion;
  for (auto it = order.rbegin(); it != order.rend(); ++it) out = f_lolly(*it, out);
  return out;
}

FormulaPtr closed_form(const Sequent& s) {
  return sequent_to_formula(s, s.context);
}

}  // namespace alw
