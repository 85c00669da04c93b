#include <doctest.h>

#include <numeric>
#include <random>

#include "hfcone/errors.hpp"
#include "hfcone/obstruct.hpp"
#include "oracles.hpp"

using namespace hfcone;

TEST_SUITE("obstruct") {

TEST_CASE("genus inequality") {
  auto v = genus_inequality(1, Framing(-5, 1), 4);
  CHECK(v.status == Status::consistent);
  CHECK(v.lhs == Rational(1));
  CHECK(v.rhs == Rational(1));

  CHECK(genus_inequality(1, Framing(-9, 2), 7).status == Status::consistent);

  v = genus_inequality(1, Framing(13, 1), 4);
  CHECK(v.status == Status::violated);
  CHECK(v.rhs == Rational(9));
  CHECK(v.detail == "2g-1 = 1 < 9 = (|p|-ell)/q");

  CHECK(genus_inequality(0, Framing(5, 1), 0).status == Status::not_applicable);
  CHECK_THROWS_AS(genus_inequality(1, Framing(5, 1), 6), InputError);
  CHECK_THROWS_AS(genus_inequality(1, Framing(5, 1), -1), InputError);
  // non-integral right-hand side compared exactly
  CHECK(genus_inequality(1, Framing(7, 2), 4).status == Status::violated);
  CHECK(genus_inequality(1, Framing(7, 2), 4).rhs == Rational(3, 2));
  CHECK(genus_inequality(1, Framing(7, 2), 5).status == Status::consistent);
}

TEST_CASE("Dehn surgery genus bound") {
  for (std::int64_t n = 1; n <= 25; ++n) CHECK(gz_lower_bound(4 * n + 1, 3 * n + 1) == Rational(n + 1, 2));
  CHECK_FALSE(gz_lower_bound(5, 5).has_value());
  CHECK(gz_lower_bound(11, 4) == Rational(4));
  CHECK_THROWS_AS(gz_lower_bound(5, 6), InputError);
  CHECK_THROWS_AS(gz_lower_bound(0, 0), InputError);
}

TEST_CASE("closed-form first-kind classes") {
  CHECK(first_kind_closed_form(1, 5, 2) == std::vector<std::int64_t>{2, 3, 4});
  CHECK(first_kind_closed_form(2, 3, 1).empty());
  CHECK(first_kind_closed_form(3, 7, 1) == std::vector<std::int64_t>{3, 4});
  CHECK(first_kind_brute(1, 2, 1) == std::vector<std::int64_t>{1});
  CHECK(first_kind_brute(1, 5, 2) == std::vector<std::int64_t>{2, 3, 4});
  CHECK_THROWS_AS(first_kind_closed_form(0, 5, 1), InputError);
  CHECK_THROWS_AS(first_kind_closed_form(1, 4, 2), InputError);
}

TEST_CASE("closed form agrees with brute force on a grid") {
  for (std::int64_t g = 1; g <= 4; ++g)
    for (std::int64_t q = 1; q <= 8; ++q)
      for (std::int64_t p = 1; p <= 60; ++p) {
        if (std::gcd(p, q) != 1) continue;
        auto closed = first_kind_closed_form(g, p, q);
        std::sort(closed.begin(), closed.end());
        CHECK(closed == first_kind_brute(g, p, q));
        if (p > (2 * g - 1) * q) CHECK(static_cast<std::int64_t>(closed.size()) == p - (2 * g - 1) * q);
      }
}

TEST_CASE("classification partitions the classes and has unique witnesses in range") {
  for (std::int64_t g = 1; g <= 3; ++g)
    for (std::int64_t q = 1; q <= 5; ++q)
      for (std::int64_t p = (2 * g - 1) * q + 1; p <= 40; ++p) {
        if (std::gcd(p, q) != 1) continue;
        for (const Framing f : {Framing(p, q), Framing(-p, q)}) {
          const SpincClassification cls = classify_spinc(g, f);
          CHECK(cls.first_kind.size() + cls.second_kind.size() == static_cast<std::size_t>(p));
          for (const auto& [i, hits] : cls.second_kind) {
            CHECK(hits.size() == 1);
            CHECK(hits.front().level == phi(i, f.p(), f.q(), hits.front().s));
            CHECK(hits.front().level > -g);
            CHECK(hits.front().level < g);
          }
        }
      }
}

TEST_CASE("ell formula for L-space knots") {
  CHECK(ell_formula_lspace(1, 7, 2) == 5);
  CHECK(ell_formula_lspace(3, 11, 2) == 1);
  CHECK(ell_formula_lspace(2, 7, 1) == 4);
  CHECK(surgery_report(lspace_knot(2), Framing(-7, 1)).ell == 4);
  CHECK_FALSE(ell_formula_lspace(2, 3, 1).has_value());
  CHECK_FALSE(ell_formula_lspace(1, 4, 2).has_value());
}

TEST_CASE("framed pair obstruction") {
  // same genus, different q: equality forces q1 = q2
  CHECK(pair_obstruction(1, 1, 1, 2, 7, PairMode::tau_extremal_both).status == Status::violated);
  CHECK(pair_obstruction(1, 2, 1, 2, 7, PairMode::tau_extremal_both).status == Status::consistent);
  CHECK(pair_obstruction(1, 2, 1, 2, 7, PairMode::tau_extremal_first).status == Status::consistent);
  const Verdict v = pair_obstruction(2, 3, 1, 1, 10, PairMode::tau_extremal_first);
  CHECK(v.status == Status::violated);
  CHECK(v.rhs == Rational(9));
  CHECK(pair_obstruction(2, 3, 1, 1, 9, PairMode::tau_extremal_first).status == Status::not_applicable);
  CHECK(pair_obstruction(2, 1, 1, 1, -5, PairMode::tau_extremal_first).status == Status::not_applicable);
  CHECK(pair_obstruction(2, 1, 1, 1, 2, PairMode::tau_extremal_first).status == Status::not_applicable);
}

TEST_CASE("k-family obstruction") {
  Verdict v = k_family_obstruction(2, 1, 1, 2, 7);
  CHECK(v.status == Status::consistent);
  v = k_family_obstruction(2, 1, 1, 1, 7);
  CHECK(v.status == Status::violated);
  CHECK(v.detail == "q2/q1 = 1 < 2 = m/(2n-1)");
  v = k_family_obstruction(3, 2, 2, 1, 23);
  CHECK(v.status == Status::violated);
  CHECK(v.lhs == Rational(1, 2));
  CHECK(v.rhs == Rational(1));
  CHECK(k_family_obstruction(2, 1, 1, 1, 3).status == Status::not_applicable);
}

TEST_CASE("k-family count feeds the genus bound consistently") {
  // ell(S^3_{-p/q1}(K_{2m,2k+1})) = p - m q1 from the engine.
  for (std::int64_t m = 1; m <= 2; ++m)
    for (std::int64_t q1 = 1; q1 <= 3; ++q1)
      for (std::int64_t p = (2 * m - 1) * q1 + 1; p <= 20; ++p) {
        if (std::gcd(p, q1) != 1) continue;
        const auto r = surgery_report(k_family(m, 1), Framing(-p, q1));
        CHECK(r.ell == p - m * q1);
      }
}

TEST_CASE("the genus bound never fails against the engine") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const SurgeryProfile p = oracle::random_profile(rng);
    if (p.genus() < 1) continue;
    const Framing f = oracle::random_framing(rng, 40, 6);
    CHECK(genus_inequality_engine(p, f).status != Status::violated);
  }
}

TEST_CASE("rational rendering") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(to_string(Status::violated) == "violated");
}

}  // TEST_SUITE
