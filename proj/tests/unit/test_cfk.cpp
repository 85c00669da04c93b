#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "hfcone/cfk.hpp"
#include "hfcone/errors.hpp"
#include "hfcone/profiles.hpp"
#include "oracles.hpp"

using namespace hfcone;

namespace {

// a, b, c at A = 1, 0, -1 with d b = c + U a.
CfkComplex trefoil() {
  CfkComplex c;
  c.generators = {{"a", 1}, {"b", 0}, {"c", -1}};
  c.arrows = {{1, 2, 0, 1}, {1, 0, 1, 1}};
  c.conj = {2, 1, 0};
  return c;
}

bool has_violation(const CfkComplex& c, const std::string& fragment) {
  const auto v = validate(c);
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(fragment) != std::string::npos; });
}

bool is_unit(const IntMatrix& m) { return m.rows() == 1 && m.cols() == 1 && std::abs(m(0, 0)) == 1; }

const char* kT34 = "1,-1,0,1,0,-1,1:3";

}  // namespace

TEST_SUITE("cfk") {

TEST_CASE("validate accepts the unknot and the trefoil") {
  CHECK(validate(unknot_complex()).empty());
  CHECK(validate(trefoil()).empty());
}

TEST_CASE("validate reports each kind of defect") {
  auto c = trefoil();
  c.arrows[1].u_power = -1;
  CHECK(has_violation(c, "negative u_power"));

  c = trefoil();
  c.arrows[0].coefficient = 0;
  CHECK(has_violation(c, "zero coefficient"));

  c = trefoil();
  c.conj = {0, 1, 2};
  CHECK_FALSE(validate(c).empty());

  c = trefoil();
  c.arrows[0].target = 7;
  CHECK_FALSE(validate(c).empty());

  // d^2 != 0: a chain x -> y -> z with nothing cancelling.
  CfkComplex bad;
  bad.generators = {{"x", 0}, {"y", 0}, {"z", 0}};
  bad.arrows = {{0, 1, 0, 1}, {1, 2, 0, 1}};
  bad.conj = {0, 1, 2};
  CHECK_FALSE(validate(bad).empty());

  // An arrow into a higher j-level.
  c = trefoil();
  c.arrows[0] = {2, 1, 0, 1};
  CHECK(has_violation(c, "raises the j-filtration"));
}

TEST_CASE("validate checks conjugation symmetry of the arrows") {
  auto c = trefoil();
  c.arrows.pop_back();  // keep only the vertical arrow
  CHECK_FALSE(validate(c).empty());
}

TEST_CASE("staircase from the trefoil polynomial") {
  const CfkComplex c = staircase_from_alexander(parse_alexander("1,-1,1:1"));
  CHECK(c.generators.size() == 3);
  CHECK(c.genus() == 1);
  CHECK(validate(c).empty());
  auto arrows = c.arrows;
  std::sort(arrows.begin(), arrows.end());
  auto want = trefoil().arrows;
  std::sort(want.begin(), want.end());
  CHECK(arrows == want);
}

TEST_CASE("staircase from the T(3,4) polynomial") {
  const CfkComplex c = staircase_from_alexander(parse_alexander(kT34));
  CHECK(c.generators.size() == 5);
  CHECK(c.genus() == 3);
  CHECK(validate(c).empty());
  std::vector<std::int64_t> gradings;
  for (const auto& g : c.generators) gradings.push_back(g.alexander);
  CHECK(gradings == std::vector<std::int64_t>{3, 2, 0, -2, -3});
}

TEST_CASE("staircase rejects non L-space polynomials") {
  CHECK_THROWS_AS(staircase_from_alexander(parse_alexander("1,1,1:1")), InputError);
  CHECK_THROWS_AS(staircase_from_alexander(parse_alexander("1,-1,0,1,-1:2")), InputError);
  CHECK_THROWS_AS(staircase_from_alexander(parse_alexander("2,-3,2:1")), InputError);
  CHECK_THROWS_AS(staircase_from_alexander(parse_alexander("1,-1,1,-1,1:1")), InputError);
  CHECK_THROWS_AS(parse_alexander("1,x,1:1"), InputError);
  CHECK_THROWS_AS(parse_alexander("1,-1,1"), InputError);
}

TEST_CASE("slice complexes of the trefoil") {
  const CfkComplex c = trefoil();
  const SliceComplex a0 = ahat(c, 0);
  REQUIRE(a0.basis.size() == 3);
  CHECK(a0.basis[0] == SliceBasisElement{0, 1});
  CHECK(a0.basis[1] == SliceBasisElement{1, 0});
  CHECK(a0.basis[2] == SliceBasisElement{2, 0});
  // d b = U a + c
  CHECK(a0.differential(0, 1) == 1);
  CHECK(a0.differential(2, 1) == 1);
  CHECK(homology(a0).group == AbelianGroup{1, {}});

  const SliceComplex b = bhat(c);
  for (std::int64_t s : {1, 2, 5}) {
    const SliceComplex as = ahat(c, s);
    CHECK(as.basis == b.basis);
    CHECK(as.differential == b.differential);
  }
  CHECK(homology(b).group == AbelianGroup{1, {}});

  const SliceComplex u = ahat(unknot_complex(), 0);
  CHECK(u.basis.size() == 1);
  CHECK(u.differential.is_zero());
}

TEST_CASE("homology rejects torsion") {
  SliceComplex s;
  s.basis = {{0, 0}, {1, 0}};
  s.differential = IntMatrix{{0, 2}, {0, 0}};
  CHECK_THROWS_AS(homology(s), UnsupportedInput);
}

TEST_CASE("induced maps of the trefoil") {
  const CfkComplex c = trefoil();
  CHECK(induced_v(c, 0) == IntMatrix{{0}});
  CHECK(induced_h(c, 0) == IntMatrix{{0}});
  for (std::int64_t s = 1; s <= 3; ++s) CHECK(is_unit(induced_v(c, s)));
  for (std::int64_t s = -3; s <= -1; ++s) CHECK(is_unit(induced_h(c, s)));
}

TEST_CASE("induced maps of T(3,4) and the unknot") {
  const CfkComplex c = staircase_from_alexander(parse_alexander(kT34));
  for (std::int64_t s = -5; s <= 5; ++s) {
    CHECK(homology(ahat(c, s)).group == AbelianGroup{1, {}});
    CHECK(is_unit(induced_v(c, s)) == (s >= 3));
    CHECK(induced_v(c, s).is_zero() == (s < 3));
    CHECK(is_unit(induced_h(c, s)) == (s <= -3));
    CHECK(induced_h(c, s).is_zero() == (s > -3));
  }
  CHECK(is_unit(induced_v(unknot_complex(), 0)));
  CHECK(is_unit(induced_h(unknot_complex(), 0)));
}

TEST_CASE("chain maps commute with the differentials") {
  for (const char* poly : {"1,-1,1:1", kT34, "1,-1,0,0,1,0,-1,0,1,0,0,-1,1:6"}) {
    const CfkComplex c = staircase_from_alexander(parse_alexander(poly));
    const SliceComplex b = bhat(c);
    for (std::int64_t s = -c.genus() - 1; s <= c.genus() + 1; ++s) {
      const SliceComplex a = ahat(c, s);
      CHECK(chain_v(c, s) * a.differential == b.differential * chain_v(c, s));
      CHECK(chain_h(c, s) * a.differential == b.differential * chain_h(c, s));
    }
  }
}

TEST_CASE("to_profile reproduces the built-in profiles") {
  CHECK(equivalent_up_to_sign(to_profile(unknot_complex()), unknot()));
  CHECK(equivalent_up_to_sign(to_profile(staircase_from_alexander(parse_alexander("1,-1,1:1"))), lspace_knot(1)));
  CHECK(equivalent_up_to_sign(to_profile(staircase_from_alexander(parse_alexander(kT34))), lspace_knot(3)));
}

TEST_CASE("to_profile rejects an invalid complex") {
  auto c = trefoil();
  c.arrows[1].u_power = -1;
  CHECK_THROWS_AS(to_profile(c), InputError);
}

TEST_CASE("mirror of a staircase is valid and keeps rank symmetry") {
  for (const char* poly : {"1,-1,1:1", kT34}) {
    const CfkComplex m = staircase_from_alexander(parse_alexander(poly)).mirror();
    CHECK(validate(m).empty());
    const SurgeryProfile p = to_profile(m);
    for (std::int64_t s = 0; s <= p.genus(); ++s) CHECK(p.local(s).rank == p.local(-s).rank);
  }
  const SurgeryProfile mt = to_profile(trefoil().mirror());
  CHECK(mt.local(0).rank == 3);
}

TEST_CASE("staircases built from step lengths agree with the polynomial route") {
  CHECK(equivalent_up_to_sign(to_profile(oracle::staircase_from_steps({1, 1})),
                              to_profile(staircase_from_alexander(parse_alexander("1,-1,1:1")))));
  CHECK(equivalent_up_to_sign(to_profile(oracle::staircase_from_steps({1, 2, 2, 1})),
                              to_profile(staircase_from_alexander(parse_alexander(kT34)))));
}

TEST_CASE("properties over random staircases") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto half = oracle::uniform(rng, 1, 3);
    std::vector<std::int64_t> steps(static_cast<std::size_t>(2 * half));
    for (std::int64_t k = 0; k < half; ++k) {
      const std::int64_t len = oracle::uniform(rng, 1, 3);
      steps[static_cast<std::size_t>(k)] = len;
      steps[static_cast<std::size_t>(2 * half - 1 - k)] = len;
    }
    const CfkComplex c = oracle::staircase_from_steps(steps);
    REQUIRE(validate(c).empty());
    const SliceComplex b = bhat(c);
    CHECK(homology(b).group == AbelianGroup{1, {}});
    const std::int64_t g = c.genus();
    for (std::int64_t s = g; s <= g + 2; ++s) {
      const SliceComplex a = ahat(c, s);
      CHECK(a.basis == b.basis);
      CHECK(a.differential == b.differential);
      CHECK(is_unit(induced_v(c, s)));
    }
    for (std::int64_t s = -g - 2; s <= -g; ++s) CHECK(is_unit(induced_h(c, s)));
    for (std::int64_t s = 0; s <= g; ++s)
      CHECK(homology(ahat(c, s)).group.free_rank == homology(ahat(c, -s)).group.free_rank);
    CHECK(equivalent_up_to_sign(to_profile(c), lspace_knot(g)));
  }
}

}  // TEST_SUITE
