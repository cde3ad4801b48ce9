#pragma once

#include <string>
#include <vector>

namespace qcert {

/// A theorem the certificate relies on without recomputing it.
struct TrustedFact {
  std::string id;
  std::string statement;
  std::string reference;
};

/// Closed registry, in a fixed order.
const std::vector<TrustedFact>& trusted_facts();
/// Throws std::out_of_range for an unknown id.
const TrustedFact& trusted_fact(const std::string& id);

inline constexpr const char* kFactsVersion = "1";

}  // namespace qcert
