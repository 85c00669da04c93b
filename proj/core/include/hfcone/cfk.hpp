#pragma once

// Finite chain-level models of the bifiltered knot complex CFK^infinity.
//
// A complex is stored by its i = 0 slice: generator x sits at filtration
// (0, A(x)), and an arrow x -> c * U^a y means the differential of x contains
// c * [y, -a, A(y) - a]. The full complex is this data tensored with the
// U-translates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfcone/exactla.hpp"

namespace hfcone {

class SurgeryProfile;

struct CfkGenerator {
  std::string name;
  std::int64_t alexander = 0;

  friend bool operator==(const CfkGenerator&, const CfkGenerator&) = default;
};

struct CfkArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::int64_t u_power = 0;
  std::int64_t coefficient = 1;

  friend bool operator==(const CfkArrow&, const CfkArrow&) = default;
  friend auto operator<=>(const CfkArrow&, const CfkArrow&) = default;
};

struct CfkComplex {
  std::vector<CfkGenerator> generators;
  std::vector<CfkArrow> arrows;
  /// Conjugation involution on generator indices.
  std::vector<std::size_t> conj;

  /// max |A(x)| over generators.
  std::int64_t genus() const;

  /// Model of the mirror knot: the dual complex with arrows reversed and
  /// Alexander gradings negated.
  CfkComplex mirror() const;
};

/// Returns every violated structural invariant, one message per offence.
/// An empty result means the complex is valid.
std::vector<std::string> validate(const CfkComplex& c);

/// Coefficients of a symmetric Laurent polynomial, listed from t^top down to t^-top.
struct AlexanderPolynomial {
  std::vector<std::int64_t> coefficients;
  std::int64_t top = 0;
};

/// Parses `c_top,...,c_bot:top`, e.g. `1,-1,0,1,0,-1,1:3`.
AlexanderPolynomial parse_alexander(std::string_view text);

/// Staircase complex of an L-space knot with the given Alexander polynomial.
/// Throws InputError unless the polynomial is symmetric, has Delta(1) = 1 and
/// nonzero coefficients alternating +1, -1, ... from the top degree.
CfkComplex staircase_from_alexander(const AlexanderPolynomial& delta);

struct SliceBasisElement {
  std::size_t generator = 0;
  std::int64_t u_power = 0;

  friend bool operator==(const SliceBasisElement&, const SliceBasisElement&) = default;
};

/// Finite subquotient complex. Column j of `differential` is the boundary
/// of basis element j.
struct SliceComplex {
  std::vector<SliceBasisElement> basis;
  IntMatrix differential;
};

/// A_s = C{i <= 0, j <= s} / C{i <= -1, j <= s-1}.
SliceComplex ahat(const CfkComplex& c, std::int64_t s);
/// B = C{i = 0}.
SliceComplex bhat(const CfkComplex& c);

/// Homology of a slice complex with an explicit free basis.
struct SliceHomology {
  AbelianGroup group;
  /// n x r matrix; column k is a cycle representing the k-th free generator.
  IntMatrix cycles;
  /// r x n matrix sending a cycle to its coordinates in the free basis.
  IntMatrix coordinates;

  std::vector<std::int64_t> coordinates_of(std::span<const std::int64_t> cycle) const {
    return coordinates * cycle;
  }
};

/// Throws UnsupportedInput if the homology has torsion.
SliceHomology homology(const SliceComplex& s);

/// Matrix (rows = rank H(B), cols = rank H(A_s)) of the map induced by the
/// projection A_s -> B.
IntMatrix induced_v(const CfkComplex& c, std::int64_t s);
/// Matrix of the map induced by U^-s, projection to C{j = 0}, then conjugation.
IntMatrix induced_h(const CfkComplex& c, std::int64_t s);

/// Chain-level maps A_s -> B in the slice bases (rows index B, columns A_s).
IntMatrix chain_v(const CfkComplex& c, std::int64_t s);
IntMatrix chain_h(const CfkComplex& c, std::int64_t s);

/// Homology-level surgery data for every s in [-g, g]. Throws InputError for
/// an invalid complex, UnsupportedInput for torsion, InternalError if the
/// computed data breaks the edge pattern beyond the genus.
SurgeryProfile to_profile(const CfkComplex& c, std::string name = "staircase");

/// The unknot: one generator in Alexander grading 0.
CfkComplex unknot_complex();

}  // namespace hfcone
