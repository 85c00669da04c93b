#include "hfcone/cfk.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <tuple>

#include "hfcone/profiles.hpp"

namespace hfcone {

namespace {

std::int64_t ahat_power(std::int64_t alexander, std::int64_t s) {
  return std::max<std::int64_t>(0, alexander - s);
}

IntMatrix columns(const IntMatrix& m, std::size_t from) {
  IntMatrix out(m.rows(), m.cols() - from);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = from; c < m.cols(); ++c) out(r, c - from) = m(r, c);
  return out;
}

IntMatrix rows(const IntMatrix& m, std::size_t from) {
  IntMatrix out(m.rows() - from, m.cols());
  for (std::size_t r = from; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r - from, c) = m(r, c);
  return out;
}

// Sums coefficients of parallel arrows and drops the ones that cancel.
std::vector<CfkArrow> normalized(std::vector<CfkArrow> arrows) {
  std::map<std::tuple<std::size_t, std::size_t, std::int64_t>, std::int64_t> acc;
  for (const auto& a : arrows) {
    auto& c = acc[{a.source, a.target, a.u_power}];
    c = checked::add(c, a.coefficient);
  }
  std::vector<CfkArrow> out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  return out;
}

// Rank of the associated graded group at Alexander level j: generators in
// that level with the arrows that preserve both filtrations.
std::int64_t graded_rank(const CfkComplex& c, std::int64_t j) {
  std::vector<std::size_t> index(c.generators.size(), SIZE_MAX);
  std::size_t n = 0;
  for (std::size_t x = 0; x < c.generators.size(); ++x)
    if (c.generators[x].alexander == j) index[x] = n++;
  IntMatrix d(n, n);
  for (const auto& a : c.arrows) {
    if (a.u_power != 0 || index[a.source] == SIZE_MAX || index[a.target] == SIZE_MAX) continue;
    auto& e = d(index[a.target], index[a.source]);
    e = checked::add(e, a.coefficient);
  }
  const auto r = static_cast<std::int64_t>(smith_normal_form(d).rank);
  return static_cast<std::int64_t>(n) - 2 * r;
}

std::string describe(const CfkComplex& c, const CfkArrow& a) {
  std::ostringstream os;
  os << c.generators[a.source].name << " -> " << a.coefficient << "*U^" << a.u_power << " "
     << c.generators[a.target].name;
  return os.str();
}

}  // namespace

std::int64_t CfkComplex::genus() const {
  std::int64_t g = 0;
  for (const auto& x : generators) g = std::max(g, x.alexander < 0 ? -x.alexander : x.alexander);
  return g;
}

CfkComplex CfkComplex::mirror() const {
  CfkComplex m;
  m.conj = conj;
  for (const auto& x : generators) m.generators.push_back({x.name, -x.alexander});
  for (const auto& a : arrows) m.arrows.push_back({a.target, a.source, a.u_power, a.coefficient});
  return m;
}

CfkComplex unknot_complex() {
  CfkComplex c;
  c.generators.push_back({"x", 0});
  c.conj = {0};
  return c;
}

std::vector<std::string> validate(const CfkComplex& c) {
  std::vector<std::string> out;
  const std::size_t n = c.generators.size();
  if (n == 0) out.emplace_back("complex has no generators");
  if (c.conj.size() != n) {
    out.emplace_back("conjugation has " + std::to_string(c.conj.size()) + " entries for " +
                     std::to_string(n) + " generators");
    return out;
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = c.conj[x];
    if (y >= n) {
      out.push_back("conjugation of " + c.generators[x].name + " is out of range");
      continue;
    }
    if (c.conj[y] != x) out.push_back("conjugation is not an involution at " + c.generators[x].name);
    if (c.generators[y].alexander != -c.generators[x].alexander)
      out.push_back("conjugation does not negate the Alexander grading at " + c.generators[x].name);
  }
  bool indices_ok = true;
  for (const auto& a : c.arrows) {
    if (a.source >= n || a.target >= n) {
      out.emplace_back("arrow references a missing generator");
      indices_ok = false;
      continue;
    }
    if (a.coefficient == 0) out.push_back("zero coefficient on arrow " + describe(c, a));
    if (a.u_power < 0) out.push_back("negative u_power on arrow " + describe(c, a));
    const std::int64_t jdrop =
        c.generators[a.source].alexander - c.generators[a.target].alexander + a.u_power;
    if (jdrop < 0) out.push_back("arrow raises the j-filtration: " + describe(c, a));
  }
  if (!indices_ok || !out.empty()) return out;

  // d^2 = 0 over Z[U]
  std::map<std::tuple<std::size_t, std::size_t, std::int64_t>, std::int64_t> square;
  for (const auto& a : c.arrows)
    for (const auto& b : c.arrows)
      if (a.target == b.source) {
        auto& e = square[{a.source, b.target, a.u_power + b.u_power}];
        e = checked::add(e, checked::mul(a.coefficient, b.coefficient));
      }
  for (const auto& [key, coeff] : square)
    if (coeff != 0)
      out.push_back("d^2 != 0: " + c.generators[std::get<0>(key)].name + " -> " +
                    std::to_string(coeff) + "*U^" + std::to_string(std::get<2>(key)) + " " +
                    c.generators[std::get<1>(key)].name);

  // Conjugation swaps the i- and j-drops of every arrow.
  std::vector<CfkArrow> image;
  for (const auto& a : c.arrows) {
    const std::int64_t jdrop =
        c.generators[a.source].alexander - c.generators[a.target].alexander + a.u_power;
    image.push_back({c.conj[a.source], c.conj[a.target], jdrop, a.coefficient});
  }
  if (normalized(image) != normalized(c.arrows))
    out.emplace_back("arrow set is not symmetric under conjugation");

  const std::int64_t g = c.genus();
  if (n > 0 && out.empty()) {
    if (graded_rank(c, g) == 0)
      out.push_back("knot Floer group vanishes in top Alexander grading " + std::to_string(g));
    if (graded_rank(c, -g) == 0)
      out.push_back("knot Floer group vanishes in bottom Alexander grading " + std::to_string(-g));
  }
  return out;
}

AlexanderPolynomial parse_alexander(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw InputError("bad integer '" + std::string(s) + "' in Alexander polynomial");
    return v;
  };
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw InputError("Alexander polynomial must have the form c_top,...,c_bot:top");
  AlexanderPolynomial out;
  out.top = parse_int(text.substr(colon + 1));
  std::string_view body = text.substr(0, colon);
  for (;;) {
    const auto comma = body.find(',');
    out.coefficients.push_back(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

CfkComplex staircase_from_alexander(const AlexanderPolynomial& delta) {
  const auto& c = delta.coefficients;
  if (delta.top < 0) throw InputError("top exponent must be nonnegative");
  if (static_cast<std::int64_t>(c.size()) != 2 * delta.top + 1)
    throw InputError("expected " + std::to_string(2 * delta.top + 1) +
                     " coefficients for top exponent " + std::to_string(delta.top));
  if (c.front() == 0) throw InputError("leading coefficient is zero");
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != c[c.size() - 1 - k]) throw InputError("polynomial is not symmetric");
  std::int64_t sum = 0;
  for (auto x : c) sum = checked::add(sum, x);
  if (sum != 1) throw InputError("Delta(1) = " + std::to_string(sum) + ", expected 1");

  std::vector<std::int64_t> exponents;
  std::int64_t expected = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k] != expected)
      throw InputError("nonzero coefficients must alternate +1, -1 from the top degree");
    exponents.push_back(delta.top - static_cast<std::int64_t>(k));
    expected = -expected;
  }

  CfkComplex out;
  const std::size_t n = exponents.size();
  for (std::size_t k = 0; k < n; ++k) {
    out.generators.push_back({"x" + std::to_string(k), exponents[k]});
    out.conj.push_back(n - 1 - k);
  }
  // Odd generators have a vertical arrow down the staircase and a horizontal
  // arrow back to the previous corner.
  for (std::size_t k = 1; k < n; k += 2) {
    out.arrows.push_back({k, k + 1, 0, 1});
    out.arrows.push_back({k, k - 1, exponents[k - 1] - exponents[k], 1});
  }
  return out;
}

SliceComplex ahat(const CfkComplex& c, std::int64_t s) {
  SliceComplex out;
  const std::size_t n = c.generators.size();
  for (std::size_t x = 0; x < n; ++x) out.basis.push_back({x, ahat_power(c.generators[x].alexander, s)});
  out.differential = IntMatrix(n, n);
  for (const auto& a : c.arrows) {
    // Images that fall strictly below the slice lie in the quotiented subcomplex.
    if (out.basis[a.source].u_power + a.u_power != out.basis[a.target].u_power) continue;
    auto& e = out.differential(a.target, a.source);
    e = checked::add(e, a.coefficient);
  }
  return out;
}

SliceComplex bhat(const CfkComplex& c) {
  SliceComplex out;
  const std::size_t n = c.generators.size();
  for (std::size_t x = 0; x < n; ++x) out.basis.push_back({x, 0});
  out.differential = IntMatrix(n, n);
  for (const auto& a : c.arrows) {
    if (a.u_power != 0) continue;
    auto& e = out.differential(a.target, a.source);
    e = checked::add(e, a.coefficient);
  }
  return out;
}

SliceHomology homology(const SliceComplex& s) {
  const IntMatrix& d = s.differential;
  // left * d * right = diag; the trailing columns of `right` span ker d.
  const SmithDecomposition outer = smith_decomposition(d);
  const std::size_t r = outer.form.rank;
  const IntMatrix kernel = columns(outer.right, r);
  const IntMatrix to_kernel = rows(outer.right_inverse, r);

  // Boundaries written in kernel coordinates; H = Z^k / image.
  const IntMatrix boundaries = to_kernel * d;
  const SmithDecomposition inner = smith_decomposition(boundaries);
  const std::size_t r2 = inner.form.rank;

  SliceHomology out;
  out.group.free_rank = static_cast<std::int64_t>(kernel.cols() - r2);
  for (std::int64_t dv : inner.form.divisors)
    if (dv > 1) out.group.torsion.push_back(dv);
  if (!out.group.torsion.empty())
    throw UnsupportedInput("homology of slice complex has torsion " + to_string(out.group));

  out.cycles = kernel * columns(inner.left_inverse, r2);
  out.coordinates = rows(inner.left, r2) * to_kernel;
  return out;
}

IntMatrix chain_v(const CfkComplex& c, std::int64_t s) {
  const std::size_t n = c.generators.size();
  IntMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    if (ahat_power(c.generators[x].alexander, s) == 0) m(x, x) = 1;
  return m;
}

IntMatrix chain_h(const CfkComplex& c, std::int64_t s) {
  const std::size_t n = c.generators.size();
  IntMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    if (c.generators[x].alexander >= s) m(c.conj[x], x) = 1;
  return m;
}

namespace {

IntMatrix induced(const CfkComplex& c, std::int64_t s, const IntMatrix& chain_map) {
  const SliceHomology ha = homology(ahat(c, s));
  const SliceHomology hb = homology(bhat(c));
  return hb.coordinates * (chain_map * ha.cycles);
}

}  // namespace

IntMatrix induced_v(const CfkComplex& c, std::int64_t s) { return induced(c, s, chain_v(c, s)); }

IntMatrix induced_h(const CfkComplex& c, std::int64_t s) { return induced(c, s, chain_h(c, s)); }

SurgeryProfile to_profile(const CfkComplex& c, std::string name) {
  if (auto errs = validate(c); !errs.empty()) {
    std::string msg = "invalid complex:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw InputError(msg);
  }
  const std::int64_t g = c.genus();
  const SliceHomology hb = homology(bhat(c));
  if (!hb.group.is_z()) throw InternalError("H_*(B) is " + to_string(hb.group) + ", expected Z");

  auto local_at = [&](std::int64_t s) {
    const SliceHomology ha = homology(ahat(c, s));
    const IntMatrix v = hb.coordinates * (chain_v(c, s) * ha.cycles);
    const IntMatrix h = hb.coordinates * (chain_h(c, s) * ha.cycles);
    LocalData d;
    d.rank = ha.group.free_rank;
    d.v.assign(v.entries().begin(), v.entries().end());
    d.h.assign(h.entries().begin(), h.entries().end());
    return d;
  };
  auto is_unit = [](const std::vector<std::int64_t>& row) {
    return row.size() == 1 && (row[0] == 1 || row[0] == -1);
  };

  const LocalData above = local_at(g + 1);
  const LocalData below = local_at(-g - 1);
  if (above.rank != 1 || !is_unit(above.v) || above.h != std::vector<std::int64_t>{0})
    throw InternalError("data above the genus breaks the edge pattern");
  if (below.rank != 1 || !is_unit(below.h) || below.v != std::vector<std::int64_t>{0})
    throw InternalError("data below the genus breaks the edge pattern");

  std::map<std::int64_t, LocalData> overrides;
  for (std::int64_t s = -g; s <= g; ++s) overrides.emplace(s, local_at(s));
  try {
    return SurgeryProfile(std::move(name), g, std::move(overrides));
  } catch (const ProfileError& e) {
    throw InternalError(std::string("derived profile is inconsistent: ") + e.what());
  }
}

}  // namespace hfcone
