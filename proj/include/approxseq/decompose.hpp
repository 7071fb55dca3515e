#pragma once

#include "approxseq/certificate.hpp"
#include "approxseq/plfunc.hpp"
#include "approxseq/seq.hpp"

namespace approxseq {

/// u = v - w with v nondecreasing majorant (cumulative absolute
/// increments) and w nonnegative nondecreasing.
Certificate jordan_split(const Seq& u);

/// For eps >= monotone_deficit(u): v_n = (running max of u up to n) -
/// eps/2 is nondecreasing with |u_n - v_n| <= eps/2 everywhere.
Certificate monotone_approx(const Seq& u, const Scalar& eps);

/// v_n = min over the stored suffix u_n..u_{N-1}; nondecreasing, below
/// u, and matching u at the last index.
Certificate tail_infimum(const Seq& u);

/// For eps >= convex_deficit(u): splits u = v + w with v convex (slopes
/// are running-max increments minus eps) and w nondecreasing with
/// Lipschitz modulus <= eps. For N = 2 returns v = u, w = 0.
Certificate convex_split(const Seq& u, const Scalar& eps);

/// Re-evaluates every attestation this certificate kind defines, from
/// the stored input/components alone.
std::vector<Attestation> recheck(const Certificate& cert);

/// True iff every recomputed attestation holds and none of the stored
/// flags contradicts it.
bool verify(const Certificate& cert);

/// Elementwise 1/u_n. Throws InputError on a zero entry.
Seq reciprocal(const Seq& u);

/// The functional sequence f(u_0), f(u_1), ... for a nondecreasing
/// convex f and a nondecreasing convex u inside f's domain; the result
/// is guaranteed convex. Hypothesis violations throw PreconditionError
/// naming the failed hypothesis.
Seq compose_convex(const PLFunc& f, const Seq& u);

/// Elementwise sum of two equal-length, same-mode sequences.
Seq sum(const Seq& u, const Seq& v);

} // namespace approxseq
