#pragma once

// Genus bounds and surgery-equivalence obstructions driven by the number
// ell of L-structures (spin^c classes whose HF-hat is Z).
//
// Everything here takes plain numbers so that ell can come from any source;
// the *_engine variants compute ell with the cone first. All comparisons are
// exact rational arithmetic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hfcone/cone.hpp"
#include "hfcone/profiles.hpp"

namespace hfcone {

using Rational = boost::rational<std::int64_t>;

/// `a` for integers, `a/b` otherwise.
std::string to_string(const Rational& r);

enum class Status { consistent, violated, not_applicable };
std::string to_string(Status s);

struct Verdict {
  Status status = Status::not_applicable;
  Rational lhs{0};
  Rational rhs{0};
  std::string detail;
};

/// 2g - 1 >= (|p| - ell) / q for Y = S^3_{p/q}(K) with g(K) = g.
/// g = 0 gives not_applicable; ell outside [0, |p|] throws InputError.
Verdict genus_inequality(std::int64_t g, const Framing& framing, std::int64_t ell);
Verdict genus_inequality_engine(const SurgeryProfile& profile, const Framing& framing, unsigned threads = 1);

/// Lower bound (h1 - ell + 1) / 2 for the integral surgery genus of a
/// non-L-space. nullopt when ell == h1; throws InputError when ell > h1.
std::optional<Rational> gz_lower_bound(std::int64_t h1_order, std::int64_t ell);

struct SecondKindWitness {
  std::int64_t s = 0;      // slot index
  std::int64_t level = 0;  // phi(s), strictly inside (-g, g)

  friend bool operator==(const SecondKindWitness&, const SecondKindWitness&) = default;
};

/// Splits [0, |p|) into classes whose phi-values all avoid (-g, g) and the
/// rest, with every interior slot recorded.
struct SpincClassification {
  std::vector<std::int64_t> first_kind;
  std::map<std::int64_t, std::vector<SecondKindWitness>> second_kind;
};

/// Brute-force scan of phi over all slots that can land in (-g, g).
SpincClassification classify_spinc(std::int64_t g, const Framing& framing);

/// Residues {gq, ..., p + q - gq - 1}; empty when p <= (2g - 1) q.
/// Requires g >= 1, p, q > 0 and gcd(p, q) = 1.
std::vector<std::int64_t> first_kind_closed_form(std::int64_t g, std::int64_t p, std::int64_t q);
std::vector<std::int64_t> first_kind_brute(std::int64_t g, std::int64_t p, std::int64_t q);

/// p - (2g - 1) q, the L-structure count for slope -p/q on a knot with
/// tau = g; nullopt unless p, q > 0 are coprime and p > (2g - 1) q.
std::optional<std::int64_t> ell_formula_lspace(std::int64_t g, std::int64_t p, std::int64_t q);

enum class PairMode { tau_extremal_first, tau_extremal_both };

/// Framed pairs (K1, -p/q1), (K2, -p/q2). With tau(K1) = g1 a surgery
/// equivalence forces 2 g2 - 1 >= (q1 / q2)(2 g1 - 1); with both
/// tau-extremal it forces equality.
Verdict pair_obstruction(std::int64_t g1, std::int64_t q1, std::int64_t g2, std::int64_t q2, std::int64_t p,
                         PairMode mode);

/// (K_{2m,2k+1}, -p/q1) against genus-n candidates (K', -p/q2): an
/// equivalence forces q2 / q1 >= m / (2n - 1).
Verdict k_family_obstruction(std::int64_t m, std::int64_t n, std::int64_t q1, std::int64_t q2, std::int64_t p);

}  // namespace hfcone
