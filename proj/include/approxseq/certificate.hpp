#pragma once

#include <optional>
#include <string>
#include <vector>

#include "approxseq/seq.hpp"

namespace approxseq {

enum class CertKind { jordan, monotone_approx, tail_infimum, convex_split };

std::string cert_kind_name(CertKind k);
CertKind cert_kind_from_name(const std::string& name);

struct Attestation {
  std::string name;
  bool holds;
};

/// A machine-checkable record of a decomposition: the input, the
/// constructed components, and named property claims that can be
/// re-evaluated from the stored data alone (no reconstruction).
struct Certificate {
  CertKind kind;
  Seq input;
  std::optional<Scalar> epsilon;
  Seq v;
  std::optional<Seq> w;
  std::vector<Attestation> attestations;

  Mode mode() const { return input.mode(); }
  double tol() const { return input.tol(); }
};

} // namespace approxseq
