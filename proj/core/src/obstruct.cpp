#include "hfcone/obstruct.hpp"

#include <numeric>

namespace hfcone {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(Status s) {
  switch (s) {
    case Status::consistent:
      return "consistent";
    case Status::violated:
      return "violated";
    case Status::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

namespace {

Verdict not_applicable(std::string why) {
  Verdict v;
  v.status = Status::not_applicable;
  v.detail = std::move(why);
  return v;
}

// Fills status and a `lhs_name = X op Y = rhs_name` detail line.
Verdict compare_at_least(Rational lhs, Rational rhs, const std::string& lhs_name, const std::string& rhs_name) {
  Verdict v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.status = lhs < rhs ? Status::violated : Status::consistent;
  v.detail = lhs_name + " = " + to_string(lhs) + (lhs < rhs ? " < " : " >= ") + to_string(rhs) + " = " + rhs_name;
  return v;
}

// Empty when p, q are coprime and positive with p - (2g - 1) q > 0.
std::string framed_hypothesis(std::int64_t g, std::int64_t q, std::int64_t p, const std::string& tag) {
  if (q <= 0) return tag + " = " + std::to_string(q) + " is not positive";
  if (std::gcd(p, q) != 1) return "gcd(p, " + tag + ") != 1";
  if (g < 1) return "genus must be at least 1";
  const std::int64_t slack = checked::sub(p, checked::mul(2 * g - 1, q));
  if (slack <= 0)
    return "p - (2g-1)" + tag + " = " + std::to_string(slack) + " is not positive";
  return {};
}

}  // namespace

Verdict genus_inequality(std::int64_t g, const Framing& framing, std::int64_t ell) {
  if (ell < 0 || ell > framing.order())
    throw InputError("ell = " + std::to_string(ell) + " outside [0, |p|] for framing " + framing.to_string());
  if (g < 1) return not_applicable("the bound needs a knot of genus at least 1");
  const Rational lhs(2 * g - 1);
  const Rational rhs(framing.order() - ell, framing.q());
  return compare_at_least(lhs, rhs, "2g-1", "(|p|-ell)/q");
}

Verdict genus_inequality_engine(const SurgeryProfile& profile, const Framing& framing, unsigned threads) {
  return genus_inequality(profile.genus(), framing, surgery_report(profile, framing, threads).ell);
}

std::optional<Rational> gz_lower_bound(std::int64_t h1_order, std::int64_t ell) {
  if (h1_order < 1) throw InputError("|H_1| must be positive");
  if (ell < 0 || ell > h1_order)
    throw InputError("ell = " + std::to_string(ell) + " outside [0, " + std::to_string(h1_order) + "]");
  if (ell == h1_order) return std::nullopt;
  return Rational(checked::add(checked::sub(h1_order, ell), 1), 2);
}

SpincClassification classify_spinc(std::int64_t g, const Framing& framing) {
  const std::int64_t p = framing.p(), q = framing.q(), n = framing.order();
  // |i + p s| > (g + 1) q forces |phi(s)| >= g, which happens once |s| > span.
  const std::int64_t span = checked::mul(g + 1, q) / n + 2;
  SpincClassification out;
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<SecondKindWitness> hits;
    for (std::int64_t s = -span; s <= span; ++s) {
      const std::int64_t level = phi(i, p, q, s);
      if (level > -g && level < g) hits.push_back({s, level});
    }
    if (hits.empty())
      out.first_kind.push_back(i);
    else
      out.second_kind.emplace(i, std::move(hits));
  }
  return out;
}

std::vector<std::int64_t> first_kind_closed_form(std::int64_t g, std::int64_t p, std::int64_t q) {
  if (g < 1 || p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw InputError("first_kind_closed_form needs g >= 1 and coprime p, q > 0");
  std::vector<std::int64_t> out;
  if (p <= (2 * g - 1) * q) return out;
  for (std::int64_t i = g * q; i <= p + q - g * q - 1; ++i) out.push_back(i % p);
  return out;
}

std::vector<std::int64_t> first_kind_brute(std::int64_t g, std::int64_t p, std::int64_t q) {
  if (g < 1 || p < 1 || q < 1) throw InputError("first_kind_brute needs g >= 1 and p, q > 0");
  return classify_spinc(g, Framing(p, q)).first_kind;
}

std::optional<std::int64_t> ell_formula_lspace(std::int64_t g, std::int64_t p, std::int64_t q) {
  if (g < 1 || p < 1 || q < 1 || std::gcd(p, q) != 1) return std::nullopt;
  const std::int64_t ell = p - (2 * g - 1) * q;
  if (ell <= 0) return std::nullopt;
  return ell;
}

Verdict pair_obstruction(std::int64_t g1, std::int64_t q1, std::int64_t g2, std::int64_t q2, std::int64_t p,
                         PairMode mode) {
  if (p <= 0) return not_applicable("p = " + std::to_string(p) + " is not positive");
  if (auto why = framed_hypothesis(g1, q1, p, "q1"); !why.empty()) return not_applicable(why);
  if (auto why = framed_hypothesis(g2, q2, p, "q2"); !why.empty()) return not_applicable(why);

  const Rational lhs(2 * g2 - 1);
  const Rational rhs = Rational(q1, q2) * Rational(2 * g1 - 1);
  if (mode == PairMode::tau_extremal_first) return compare_at_least(lhs, rhs, "2g2-1", "(q1/q2)(2g1-1)");

  Verdict v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.status = lhs == rhs ? Status::consistent : Status::violated;
  v.detail = "2g2-1 = " + to_string(lhs) + (lhs == rhs ? " == " : " != ") + to_string(rhs) + " = (q1/q2)(2g1-1)";
  return v;
}

Verdict k_family_obstruction(std::int64_t m, std::int64_t n, std::int64_t q1, std::int64_t q2, std::int64_t p) {
  if (p <= 0) return not_applicable("p = " + std::to_string(p) + " is not positive");
  if (auto why = framed_hypothesis(m, q1, p, "q1"); !why.empty()) return not_applicable(why);
  if (auto why = framed_hypothesis(n, q2, p, "q2"); !why.empty()) return not_applicable(why);
  // ell(S^3_{-p/q1}(K_{2m,2k+1})) = p - m q1, fed into the genus bound for genus n.
  return compare_at_least(Rational(q2, q1), Rational(m, 2 * n - 1), "q2/q1", "m/(2n-1)");
}

}  // namespace hfcone
