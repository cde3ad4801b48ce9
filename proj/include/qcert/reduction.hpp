#pragma once

#include "qcert/curve.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcert {

/// A certification step could not be carried out; the message names why.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Image of inertia at a bad prime p on J[l], l != p.
struct InertiaCertificate {
  std::uint64_t p = 0;
  unsigned node_count = 0;
  std::string inertia_order_statement;
  bool transvection = false;
  std::vector<std::string> trusted_fact_refs;
};

/// Requires a complete report whose points are all ordinary nodes with
/// regular total space; throws CertificationError otherwise.
InertiaCertificate inertia_certificate(const SingularFiberReport& report);

/// Smallest transvection prime different from l, if any.
std::optional<std::uint64_t> transvection_prime(std::uint64_t ell, const std::vector<InertiaCertificate>& certs);

}  // namespace qcert
