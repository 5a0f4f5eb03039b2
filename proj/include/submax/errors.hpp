#pragma once

#include <stdexcept>
#include <string>

namespace submax {

// Error taxonomy shared by the library and the CLI. Exit codes: 0 ok,
// 2 schema, 3 capability, 4 contract.
struct ToolError : std::runtime_error {
  int exit_code;
  ToolError(int code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
};

// Malformed instance files, bad flag values, inconsistent element sets.
struct SchemaError : ToolError {
  explicit SchemaError(const std::string& msg) : ToolError(2, msg) {}
};

// Input is well-formed but outside what this implementation can compute
// exactly (enumeration caps, bitset width, epsilon too small for the
// fractional-coordinate budget).
struct CapabilityError : ToolError {
  explicit CapabilityError(const std::string& msg) : ToolError(3, msg) {}
};

// An internal precondition or guaranteed invariant failed; indicates a bug
// or a violated caller contract, never a property of valid inputs.
struct ContractError : ToolError {
  explicit ContractError(const std::string& msg) : ToolError(4, msg) {}
};

inline void contract_check(bool ok, const std::string& msg) {
  if (!ok) throw ContractError(msg);
}

}  // namespace submax
