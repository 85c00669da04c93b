#pragma once

// Truncated mapping cone for rational surgery on a knot in S^3.
//
// For spin^c class i and slope p/q the cone is D : A -> B with A-slots
// A_{phi(s)} and B-slots B, where phi(s) = floor((i + p s) / q) and
//
//   b_s = v_{phi(s)}(a_s) + h_{phi(s-1)}(a_{s-1}).
//
// The h map therefore carries slot s - 1 into slot s. Sending slot s to
// s - 1 instead computes the mirror slope; this direction is the one that
// gives HF(S^3) = Z for 1/q surgery on the unknot and rank 11 for -1 surgery
// on T(3,4).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hfcone/exactla.hpp"
#include "hfcone/profiles.hpp"

namespace hfcone {

/// Reduced slope p/q with q >= 1 and p != 0.
class Framing {
 public:
  /// Normalizes the sign into p. Throws InputError when q == 0, p == 0 or
  /// gcd(|p|, |q|) != 1.
  Framing(std::int64_t p, std::int64_t q = 1);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// Number of spin^c structures, |p|.
  std::int64_t order() const { return p_ < 0 ? -p_ : p_; }
  Framing negated() const { return Framing(-p_, q_); }

  std::string to_string() const;

  friend bool operator==(const Framing&, const Framing&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Parses `p/q` or an integer `p`.
Framing parse_framing(std::string_view text);

/// floor((i + p s) / q).
std::int64_t phi(std::int64_t i, std::int64_t p, std::int64_t q, std::int64_t s);

struct ConeWindow {
  std::int64_t a_lo = 0, a_hi = 0;
  std::int64_t b_lo = 0, b_hi = 0;

  std::int64_t a_slots() const { return a_hi - a_lo + 1; }
  std::int64_t b_slots() const { return b_hi - b_lo + 1; }

  /// Widens both ends by the given number of slots, keeping the A/B offset.
  ConeWindow widened(std::int64_t lo, std::int64_t hi) const {
    return {a_lo - lo, a_hi + hi, b_lo - lo, b_hi + hi};
  }

  friend bool operator==(const ConeWindow&, const ConeWindow&) = default;
};

/// Smallest window outside which the cone is acyclic. With G = max(g, 1):
///   p > 0: A = [max{phi <= -G}, min{phi >= G}], B = [A.lo + 1, A.hi]
///   p < 0: A = [max{phi >= G}, min{phi <= -G}], B = [A.lo, A.hi + 1]
ConeWindow truncation_window(const SurgeryProfile& profile, const Framing& framing, std::int64_t i);

/// Block matrix of D over the window (rows: B-slots, columns: A-slot summands).
IntMatrix cone_matrix(const SurgeryProfile& profile, const Framing& framing, std::int64_t i,
                      const ConeWindow& window);

/// HF-hat of the surgery in spin^c class i, computed as ker D + coker D.
AbelianGroup spinc_group(const SurgeryProfile& profile, const Framing& framing, std::int64_t i);
AbelianGroup spinc_group(const SurgeryProfile& profile, const Framing& framing, std::int64_t i,
                         const ConeWindow& window);

struct SpincEntry {
  std::int64_t i = 0;
  AbelianGroup group;
  bool l_structure = false;

  friend bool operator==(const SpincEntry&, const SpincEntry&) = default;
};

struct SurgeryReport {
  Framing framing{1, 1};
  std::vector<SpincEntry> spinc;  // ascending i
  std::int64_t ell = 0;
  std::int64_t total_rank = 0;

  friend bool operator==(const SurgeryReport&, const SurgeryReport&) = default;
};

/// Evaluates every class i in [0, |p|). With threads > 1 the classes are
/// split across worker threads; the result is identical to threads == 1.
SurgeryReport surgery_report(const SurgeryProfile& profile, const Framing& framing, unsigned threads = 1);

}  // namespace hfcone
