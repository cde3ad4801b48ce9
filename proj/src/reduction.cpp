#include "qcert/reduction.hpp"

namespace qcert {

InertiaCertificate inertia_certificate(const SingularFiberReport& report) {
  const std::string at = " at p = " + std::to_string(report.p);
  if (!report.complete) {
    throw CertificationError("singular locus not fully resolved" + at + (report.note.empty() ? "" : ": " + report.note));
  }
  if (report.points.empty()) throw CertificationError("fiber is smooth" + at + "; no inertia certificate applies");
  for (const auto& sp : report.points) {
    if (!sp.classified) throw CertificationError("singular point not rational over F_p" + at);
    if (!sp.kind.ordinary_node) throw CertificationError("singular point is not an ordinary double point" + at);
    if (!sp.kind.total_space_regular) throw CertificationError("total space is not regular at a node" + at);
  }
  InertiaCertificate c;
  c.p = report.p;
  c.node_count = static_cast<unsigned>(report.points.size());
  c.inertia_order_statement = "cyclic of order l for every l != " + std::to_string(report.p);
  c.transvection = c.node_count == 1;
  c.trusted_fact_refs = {"TF-PICARD-LEFSCHETZ"};
  return c;
}

std::optional<std::uint64_t> transvection_prime(std::uint64_t ell, const std::vector<InertiaCertificate>& certs) {
  std::optional<std::uint64_t> best;
  for (const auto& c : certs) {
    if (!c.transvection || c.p == ell) continue;
    if (!best || c.p < *best) best = c.p;
  }
  return best;
}

}  // namespace qcert
