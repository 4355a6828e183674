#include "alw/calculus.hpp"

#include <algorithm>

namespace alw {

const std::set<Schema>& axiom_schemas(CalculusId c) {
  static const std::set<Schema> ali{Schema::ASM, Schema::EFQ};
  static const std::set<Schema> alc{Schema::ASM, Schema::EFQ, Schema::DNE};
  static const std::set<Schema> lli{Schema::ASM, Schema::EFQ, Schema::CWC};
  static const std::set<Schema> llc{Schema::ASM, Schema::EFQ, Schema::CWC, Schema::DNE};
  static const std::set<Schema> il{Schema::ASM, Schema::EFQ, Schema::CON};
  static const std::set<Schema> cl{Schema::ASM, Schema::EFQ, Schema::CON, Schema::DNE};
  switch (c) {
    case CalculusId::ALi: return ali;
    case CalculusId::ALc: return alc;
    case CalculusId::LLi: return lli;
    case CalculusId::LLc: return llc;
    case CalculusId::IL: return il;
    case CalculusId::CL: return cl;
  }
  return ali;
}

const std::set<Schema>& admitted_schemas(CalculusId c) {
  static const std::set<Schema> il{Schema::ASM, Schema::EFQ, Schema::CON, Schema::CWC};
  static const std::set<Schema> cl{Schema::ASM, Schema::EFQ, Schema::CON, Schema::CWC,
                                   Schema::DNE};
  switch (c) {
    case CalculusId::IL: return il;
    case CalculusId::CL: return cl;
    default: return axiom_schemas(c);
  }
}

bool subcalculus(CalculusId a, CalculusId b) {
  const auto& sa = admitted_schemas(a);
  const auto& sb = admitted_schemas(b);
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

std::string to_string(CalculusId c) {
  switch (c) {
    case CalculusId::ALi: return "ALi";
    case CalculusId::ALc: return "ALc";
    case CalculusId::LLi: return "LLi";
    case CalculusId::LLc: return "LLc";
    case CalculusId::IL: return "IL";
    case CalculusId::CL: return "CL";
  }
  return "?";
}

std::string to_string(Schema s) {
  switch (s) {
    case Schema::ASM: return "ASM";
    case Schema::CON: return "CON";
    case Schema::EFQ: return "EFQ";
    case Schema::DNE: return "DNE";
    case Schema::CWC: return "CWC";
  }
  return "?";
}

std::optional<CalculusId> calculus_from_string(const std::string& s) {
  if (s == "ALi") return CalculusId::ALi;
  if (s == "ALc") return CalculusId::ALc;
  if (s == "LLi") return CalculusId::LLi;
  if (s == "LLc") return CalculusId::LLc;
  if (s == "IL") return CalculusId::IL;
  if (s == "CL") return CalculusId::CL;
  return std::nullopt;
}

std::optional<Schema> schema_from_string(const std::string& s) {
  if (s == "ASM") return Schema::ASM;
  if (s == "CON") return Schema::CON;
  if (s == "EFQ") return Schema::EFQ;
  if (s == "DNE") return Schema::DNE;
  if (s == "CWC") return Schema::CWC;
  return std::nullopt;
}

}  // namespace alw
