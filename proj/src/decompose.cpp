#include "approxseq/decompose.hpp"

#include <functional>

#include "approxseq/analyze.hpp"
#include "approxseq/errors.hpp"

namespace approxseq {

std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::jordan: return "jordan";
    case CertKind::monotone_approx: return "monotone_approx";
    case CertKind::tail_infimum: return "tail_infimum";
    case CertKind::convex_split: return "convex_split";
  }
  return "?";
}

CertKind cert_kind_from_name(const std::string& name) {
  if (name == "jordan") return CertKind::jordan;
  if (name == "monotone_approx") return CertKind::monotone_approx;
  if (name == "tail_infimum") return CertKind::tail_infimum;
  if (name == "convex_split") return CertKind::convex_split;
  throw InputError("unknown certificate kind: " + name);
}

namespace {

bool nondecreasing(const Seq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!s[i].le(s[i + 1])) return false;
  return true;
}

bool pointwise_le(const Seq& a, const Seq& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].le(b[i])) return false;
  return true;
}

bool nonnegative(const Seq& s) {
  const Scalar zero = s.like(0);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!zero.le(s[i])) return false;
  return true;
}

std::string witness_text(const DeficitReport& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(r.witness[i]);
  }
  return s + ")";
}

} // namespace

Certificate jordan_split(const Seq& u) {
  std::vector<Scalar> v{u[0]};
  v.reserve(u.size());
  for (std::size_t n = 1; n < u.size(); ++n) v.push_back(v.back() + abs(u[n] - u[n - 1]));
  std::vector<Scalar> w;
  w.reserve(u.size());
  for (std::size_t n = 0; n < u.size(); ++n) w.push_back(v[n] - u[n]);
  Certificate cert{CertKind::jordan, u, std::nullopt, Seq(std::move(v)),
                   Seq(std::move(w)), {}};
  cert.attestations = recheck(cert);
  return cert;
}

Certificate monotone_approx(const Seq& u, const Scalar& eps) {
  DeficitReport d = monotone_deficit(u);
  if (!d.epsilon_min.le(eps))
    throw PreconditionError("epsilon below the monotone deficit " + d.epsilon_min.text() +
                            " witnessed at " + witness_text(d));
  const Scalar half = eps / eps.like(2);
  std::vector<Scalar> v;
  v.reserve(u.size());
  Scalar pref = u[0];
  for (std::size_t n = 0; n < u.size(); ++n) {
    pref = max(pref, u[n]);
    v.push_back(pref - half);
  }
  Certificate cert{CertKind::monotone_approx, u, eps, Seq(std::move(v)), std::nullopt, {}};
  cert.attestations = recheck(cert);
  return cert;
}

Certificate tail_infimum(const Seq& u) {
  std::vector<Scalar> v(u.values());
  for (std::size_t i = u.size() - 1; i-- > 0;) v[i] = min(v[i], v[i + 1]);
  Certificate cert{CertKind::tail_infimum, u, std::nullopt, Seq(std::move(v)),
                   std::nullopt, {}};
  cert.attestations = recheck(cert);
  return cert;
}

Certificate convex_split(const Seq& u, const Scalar& eps) {
  if (u.size() < 2) throw InputError("convex split needs at least two values");
  if (!u.like(0).le(eps)) throw PreconditionError("epsilon must be nonnegative");
  std::vector<Scalar> v, w;
  v.reserve(u.size());
  w.reserve(u.size());
  if (u.size() == 2) {
    // Two-term sequences are vacuously convex.
    v = u.values();
    w.assign(2, u.like(0));
  } else {
    DeficitReport d = convex_deficit(u);
    if (!d.epsilon_min.le(eps))
      throw PreconditionError("epsilon below the convex deficit " + d.epsilon_min.text() +
                              " witnessed at increments " + witness_text(d));
    v.push_back(u[0]);
    w.push_back(u.like(0));
    Scalar running = u[1] - u[0];
    for (std::size_t j = 1; j < u.size(); ++j) {
      running = max(running, u[j] - u[j - 1]);
      v.push_back(v.back() + (running - eps));
      w.push_back(u[j] - v.back());
    }
  }
  Certificate cert{CertKind::convex_split, u, eps, Seq(std::move(v)), Seq(std::move(w)), {}};
  cert.attestations = recheck(cert);
  return cert;
}

std::vector<Attestation> recheck(const Certificate& cert) {
  const Seq& u = cert.input;
  const Seq& v = cert.v;
  std::vector<Attestation> out;
  auto add = [&out](std::string name, bool holds) {
    out.push_back(Attestation{std::move(name), holds});
  };
  auto recombines = [&](bool v_minus_w) {
    if (!cert.w || cert.w->size() != u.size() || v.size() != u.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      Scalar r = v_minus_w ? v[i] - (*cert.w)[i] : v[i] + (*cert.w)[i];
      if (!r.eq(u[i])) return false;
    }
    return true;
  };
  switch (cert.kind) {
    case CertKind::jordan: {
      add("v_nondecreasing", nondecreasing(v));
      add("v_majorizes_u", v.size() == u.size() && pointwise_le(u, v));
      add("w_nonnegative", cert.w && nonnegative(*cert.w));
      add("w_nondecreasing", cert.w && nondecreasing(*cert.w));
      add("recombines", recombines(true));
      break;
    }
    case CertKind::monotone_approx: {
      add("v_nondecreasing", nondecreasing(v));
      bool bounded = cert.epsilon.has_value() && v.size() == u.size();
      if (bounded) {
        const Scalar half = *cert.epsilon / cert.epsilon->like(2);
        for (std::size_t i = 0; i < u.size() && bounded; ++i)
          bounded = abs(u[i] - v[i]).le(half);
      }
      add("uniform_bound", bounded);
      break;
    }
    case CertKind::tail_infimum: {
      add("v_nondecreasing", nondecreasing(v));
      add("v_minorizes_u", v.size() == u.size() && pointwise_le(v, u));
      add("final_values_equal", v.size() == u.size() && v[v.size() - 1].eq(u[u.size() - 1]));
      break;
    }
    case CertKind::convex_split: {
      bool v_convex = v.size() < 3 || convex_deficit(v).epsilon_min.eq(v.like(0));
      add("v_convex", v_convex);
      add("w_nondecreasing", cert.w && nondecreasing(*cert.w));
      bool lip = cert.epsilon.has_value() && cert.w && cert.w->size() >= 2;
      if (lip) lip = lipschitz_modulus(*cert.w).epsilon_min.le(*cert.epsilon);
      add("w_lipschitz_bound", lip);
      add("recombines", recombines(false));
      break;
    }
  }
  return out;
}

bool verify(const Certificate& cert) {
  std::vector<Attestation> fresh = recheck(cert);
  for (const Attestation& a : fresh)
    if (!a.holds) return false;
  // Stored claims must not contradict the recomputed ones.
  for (const Attestation& stored : cert.attestations) {
    bool found = false;
    for (const Attestation& a : fresh)
      if (a.name == stored.name) {
        found = true;
        if (a.holds != stored.holds) return false;
      }
    if (!found) return false;
  }
  return true;
}

Seq reciprocal(const Seq& u) {
  const Scalar zero = u.like(0);
  std::vector<Scalar> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].eq(zero)) throw InputError("reciprocal of a zero entry at index " + std::to_string(i));
    out.push_back(u.like(1) / u[i]);
  }
  return Seq(std::move(out));
}

Seq compose_convex(const PLFunc& f, const Seq& u) {
  SlopeProfile p = slope_profile(f);
  const Scalar zero = f.like(0);
  for (const Scalar& s : p.slopes)
    if (!zero.le(s)) throw PreconditionError("f is not nondecreasing");
  if (!is_convex_fn(f)) throw PreconditionError("f is not convex");
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    if (!u[i].le(u[i + 1])) throw PreconditionError("u is not nondecreasing");
  if (u.size() >= 3 && !convex_deficit(u).epsilon_min.eq(u.like(0)))
    throw PreconditionError("u is not convex");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!f.domain_lo().le(u[i]) || !u[i].le(f.domain_hi()))
      throw PreconditionError("u leaves the domain of f");
  std::vector<Scalar> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(eval(f, u[i]));
  return Seq(std::move(out));
}

Seq sum(const Seq& u, const Seq& v) {
  if (u.size() != v.size()) throw InputError("sequence lengths differ");
  std::vector<Scalar> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] + v[i]);
  return Seq(std::move(out));
}

} // namespace approxseq
