#include "approxseq/seq.hpp"

#include "approxseq/errors.hpp"

namespace approxseq {

Seq::Seq(std::vector<Scalar> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("a sequence needs at least one value");
  const Mode m = values_.front().mode();
  for (const Scalar& s : values_)
    if (s.mode() != m) throw ModeError("sequence values mix exact and float modes");
}

Seq seq_from_values(std::vector<Scalar> values) { return Seq(std::move(values)); }

DifferenceProfile differences(const Seq& u) {
  if (u.size() < 2) throw InputError("differences need at least two values");
  DifferenceProfile d;
  d.deltas.reserve(u.size() - 1);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) d.deltas.push_back(u[i + 1] - u[i]);
  return d;
}

bool seq_eq(const Seq& a, const Seq& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].eq(b[i])) return false;
  return true;
}

} // namespace approxseq
