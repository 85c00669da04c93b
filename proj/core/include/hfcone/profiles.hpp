#pragma once

// Homology-level surgery profiles: for each Alexander level s the rank of
// H_*(A_s) and the 1 x r_s matrices of the induced maps v_s, h_s into
// H_*(B) = Z.
//
// Only levels |s| <= g are stored. Outside that range the data is forced:
//   s >  g : rank 1, v = [1], h = [0]
//   s < -g : rank 1, v = [0], h = [1]
// For g >= 1 the same holds at s = +-g (v or h up to sign), so overrides
// there must agree with it. The unknot's s = 0 level is the one exception.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hfcone/exactla.hpp"

namespace hfcone {

struct LocalData {
  std::int64_t rank = 1;
  std::vector<std::int64_t> v;
  std::vector<std::int64_t> h;

  friend bool operator==(const LocalData&, const LocalData&) = default;
};

/// Invariant violation found while building or parsing a profile.
class ProfileError : public InputError {
 public:
  ProfileError(const std::string& what, std::int64_t level)
      : InputError(what), level_(level) {}
  std::int64_t level() const { return level_; }

 private:
  std::int64_t level_;
};

class SurgeryProfile {
 public:
  /// Validates on construction; throws ProfileError.
  SurgeryProfile(std::string name, std::int64_t genus, std::map<std::int64_t, LocalData> overrides);

  const std::string& name() const { return name_; }
  std::int64_t genus() const { return genus_; }
  const std::map<std::int64_t, LocalData>& overrides() const { return overrides_; }

  /// Effective data at level s; defined for every integer s.
  const LocalData& local(std::int64_t s) const;

  SurgeryProfile renamed(std::string name) const;

  friend bool operator==(const SurgeryProfile&, const SurgeryProfile&) = default;

 private:
  std::string name_;
  std::int64_t genus_;
  std::map<std::int64_t, LocalData> overrides_;
};

/// Same effective data up to the sign of each v/h row (the engine's answers
/// do not depend on those signs).
bool equivalent_up_to_sign(const SurgeryProfile& a, const SurgeryProfile& b);

SurgeryProfile unknot();
SurgeryProfile lspace_knot(std::int64_t g);
SurgeryProfile figure_eight();
SurgeryProfile k_family(std::int64_t m, std::int64_t k);
/// Knots with tau = g: v_s = 0 for s < g and h_s = 0 for s > -g. Interior
/// ranks default to 1 and must be symmetric.
SurgeryProfile tau_extremal(std::int64_t g, const std::map<std::int64_t, std::int64_t>& interior_ranks = {});

/// Text format:
///   profile <name> genus <g>
///   local <s> rank <r> v <c1,...,cr> h <c1,...,cr>
/// Blank lines and lines starting with '#' are ignored.
SurgeryProfile parse_profile(std::string_view text);
std::string serialize(const SurgeryProfile& p);

/// Built-in selector: `unknot`, `lspace:g=3`, `fig8`, `kfam:m=2,k=1`, `tau:g=2`.
/// Throws InputError for unknown selectors.
SurgeryProfile builtin_profile(std::string_view selector);

}  // namespace hfcone
