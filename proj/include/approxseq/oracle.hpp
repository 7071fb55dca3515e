#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "approxseq/report.hpp"
#include "approxseq/seq.hpp"

namespace approxseq::oracle {

enum class SeqClass {
  arbitrary,
  monotone,
  convex,
  eps_monotone,
  eps_convex,
  positive_decreasing_convex,
  log_convex,
};

SeqClass seq_class_from_name(const std::string& name);
std::string seq_class_name(SeqClass c);

/// Deterministic generator request: identical specs yield identical
/// sequences across runs and shards.
struct GenSpec {
  SeqClass cls = SeqClass::arbitrary;
  std::size_t length = 1;
  std::uint64_t seed = 0;
  long long value_bound = 20;
  std::optional<Scalar> eps; // eps_monotone / eps_convex only
};

/// An exact-mode sequence in the requested class. eps_convex instances
/// are a random convex sequence plus a perturbation whose consecutive
/// steps stay within eps/2; eps_monotone instances are a nondecreasing
/// base plus an oscillation within eps/2 of zero.
Seq generate(const GenSpec& spec);

/// Exhaustive O(N^2) (or O(N*k)) reference deficit, written with no
/// helpers shared with the analyze module.
Scalar brute_deficit(const Seq& u, Property property, int k = 0);

struct Counterexample {
  std::string proposition;
  Seq input;
  std::string violation;
};

/// Seeded random search (preceded by exhaustive small-integer
/// enumeration) for inputs where a proposition's hypothesis holds but
/// its conclusion fails. Supported identifiers: P1, P2_forward,
/// P2_reverse, P20000, T9999.
std::optional<Counterexample> falsify(const std::string& proposition, int trials,
                                      std::uint64_t seed);

} // namespace approxseq::oracle
