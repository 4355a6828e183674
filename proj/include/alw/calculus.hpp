// ============================================================================
// alw/calculus.hpp — the six calculi and their axiom schemata
// ============================================================================
//
//   ALi  ASM EFQ                 intuitionistic affine logic
//   ALc  ASM EFQ DNE
//   LLi  ASM EFQ CWC             intuitionistic Lukasiewicz logic
//   LLc  ASM EFQ CWC DNE
//   IL   ASM EFQ CON             intuitionistic logic
//   CL   ASM EFQ CON DNE
//
// For proof checking, IL and CL additionally admit CWC: CON entails CWC over
// ALi (the corpus entry cwc-from-con is the witness), and admitting it keeps
// acceptance monotone along the inclusion arrows ALi -> LLi -> IL etc.
// ============================================================================

#ifndef ALW_CALCULUS_HPP
#define ALW_CALCULUS_HPP

#include <optional>
#include <set>
#include <string>

namespace alw {

enum class CalculusId { ALi, ALc, LLi, LLc, IL, CL };
enum class Schema { ASM, CON, EFQ, DNE, CWC };

// The defining schema set (Table-1 style).
const std::set<Schema>& axiom_schemas(CalculusId c);
// Schemata a proof checked under c may use: the defining set, plus CWC for
// IL and CL where it is derivable.
const std::set<Schema>& admitted_schemas(CalculusId c);

// a is a subcalculus of b: every proof acceptable in a is acceptable in b.
bool subcalculus(CalculusId a, CalculusId b);

std::string to_string(CalculusId c);
std::string to_string(Schema s);
std::optional<CalculusId> calculus_from_string(const std::string& s);
std::optional<Schema> schema_from_string(const std::string& s);

}  // namespace alw

#endif
