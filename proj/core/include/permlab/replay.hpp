#pragma once

#include <string>
#include <vector>

#include "permlab/embedding.hpp"

namespace permlab {

/// Independent checker for witnesses and certificates.
///
/// Reads only the universe's atom table and order; it never calls the
/// closure, mover or membership code that produced the evidence, so a bug
/// there cannot vouch for itself.
struct ReplayResult {
  bool ok = true;
  std::string failure;

  explicit operator bool() const noexcept { return ok; }
};

ReplayResult replay_witness(const Universe& u, const WitnessMap& w);
ReplayResult replay_certificate(const Universe& u, const RefutationCertificate& cert);

/// Outcome of checking a whole report: every cell's evidence replays, every
/// negative cell covers every tested support, and both verdict matrices
/// equal the input relations.
struct ReportCheck {
  bool evidence_ok = true;
  bool matrices_match = true;
  std::vector<std::string> failures;

  bool ok() const noexcept { return evidence_ok && matrices_match; }
};

ReportCheck check_report(const EmbeddingReport& report);

}  // namespace permlab
