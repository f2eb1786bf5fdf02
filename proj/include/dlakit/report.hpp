#pragma once

// JSON and text renderings of every report. JSON is the contract; the text
// form shows the same data for people.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "dlakit/closure.hpp"
#include "dlakit/reach3.hpp"
#include "dlakit/structure.hpp"
#include "dlakit/verify.hpp"

namespace dlakit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dlakit/1";

Json checks_json(const std::vector<Check>& checks);

Json basis_json(const DlaBasis& basis);
std::string basis_text(const DlaBasis& basis);

struct ClosureVerdict {
  bool dimension_ok;  // 3n - 1
  bool span_equal;    // span(closure) == span(named basis)
  bool passed() const { return dimension_ok && span_equal; }
};

ClosureVerdict closure_verdict(const ClosureResult& result);
Json closure_json(const ClosureResult& result, const ClosureVerdict& verdict);
std::string closure_text(const ClosureResult& result, const ClosureVerdict& verdict);

Json structure_json(const StructureReport& report);
std::string structure_text(const StructureReport& report);

Json verify_json(const VerifyReport& report);
std::string verify_text(const VerifyReport& report);

Json reach3_json(const Reach3Report& report);
std::string reach3_text(const Reach3Report& report);

}  // namespace dlakit
