#pragma once

// Reduct certificates as JSON documents, and an independent checker that
// re-verifies one against the input table without rerunning the builder.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/reduct.hpp"
#include "loopkit/term_dag.hpp"

namespace loopkit {

struct CertificateStage {
  std::size_t index = 0;
  std::uint64_t n = 1;
  std::uint64_t m_e = 1;
  std::uint64_t m_v = 1;
  CayleyTable r;
};

struct CertificateDocument {
  std::size_t order = 0;
  std::vector<std::vector<Elem>> series;
  std::vector<std::uint64_t> primes;
  std::vector<CertificateStage> stages;
  CayleyTable final_star;
  std::vector<TermNode> nodes;
  NodeId root = 0;
  std::map<std::uint64_t, std::vector<Elem>> factors;
  std::vector<Elem> witness;
};

CertificateDocument document_from(const ReductCertificate& cert);
// Sorted keys, two-space indent, trailing newline.
std::string serialize_certificate(const CertificateDocument& doc);
CertificateDocument parse_certificate(const std::string& text);  // throws ParseError

struct VerificationCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const;
};

VerificationReport verify_certificate(const CertificateDocument& doc, const CayleyTable& input);

}  // namespace loopkit
