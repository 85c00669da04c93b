#include "hfcone/cone.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <numeric>
#include <thread>

namespace hfcone {

Framing::Framing(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q_ == 0) throw InputError("framing denominator must be nonzero");
  if (p_ == 0) throw InputError("framing numerator must be nonzero");
  if (q_ < 0) {
    p_ = checked::neg(p_);
    q_ = checked::neg(q_);
  }
  if (std::gcd(p_, q_) != 1)
    throw InputError("framing " + std::to_string(p_) + "/" + std::to_string(q_) + " is not reduced");
}

std::string Framing::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Framing parse_framing(std::string_view text) {
  auto parse = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw InputError("bad framing '" + std::string(text) + "', expected p/q or p");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Framing(parse(text), 1);
  return Framing(parse(text.substr(0, slash)), parse(text.substr(slash + 1)));
}

std::int64_t phi(std::int64_t i, std::int64_t p, std::int64_t q, std::int64_t s) {
  return floor_div(checked::add(i, checked::mul(p, s)), q);
}

ConeWindow truncation_window(const SurgeryProfile& profile, const Framing& framing, std::int64_t i) {
  const std::int64_t G = std::max<std::int64_t>(profile.genus(), 1);
  const std::int64_t q = framing.q();
  const std::int64_t p = framing.p();
  ConeWindow w;
  if (p > 0) {
    // phi(s) >= G  <=>  i + p s >= G q ;  phi(s) <= -G  <=>  i + p s <= (1 - G) q - 1
    w.a_hi = ceil_div(checked::sub(checked::mul(G, q), i), p);
    w.a_lo = floor_div(checked::sub(checked::sub(checked::mul(1 - G, q), 1), i), p);
    w.b_lo = w.a_lo + 1;
    w.b_hi = w.a_hi;
  } else {
    const std::int64_t P = -p;
    w.a_lo = floor_div(checked::sub(i, checked::mul(G, q)), P);
    w.a_hi = ceil_div(checked::add(checked::sub(i, checked::mul(1 - G, q)), 1), P);
    w.b_lo = w.a_lo;
    w.b_hi = w.a_hi + 1;
  }
  return w;
}

IntMatrix cone_matrix(const SurgeryProfile& profile, const Framing& framing, std::int64_t i,
                      const ConeWindow& window) {
  const std::int64_t p = framing.p(), q = framing.q();
  std::vector<const LocalData*> slots;
  std::size_t cols = 0;
  for (std::int64_t s = window.a_lo; s <= window.a_hi; ++s) {
    slots.push_back(&profile.local(phi(i, p, q, s)));
    cols += static_cast<std::size_t>(slots.back()->rank);
  }
  IntMatrix d(static_cast<std::size_t>(std::max<std::int64_t>(window.b_slots(), 0)), cols);
  auto place = [&](std::int64_t b_slot, std::size_t col, const std::vector<std::int64_t>& row) {
    if (b_slot < window.b_lo || b_slot > window.b_hi) return;
    const auto r = static_cast<std::size_t>(b_slot - window.b_lo);
    for (std::size_t k = 0; k < row.size(); ++k) d(r, col + k) = checked::add(d(r, col + k), row[k]);
  };
  std::size_t col = 0;
  for (std::int64_t s = window.a_lo; s <= window.a_hi; ++s) {
    const LocalData& local = *slots[static_cast<std::size_t>(s - window.a_lo)];
    place(s, col, local.v);
    place(s + 1, col, local.h);
    col += static_cast<std::size_t>(local.rank);
  }
  return d;
}

AbelianGroup spinc_group(const SurgeryProfile& profile, const Framing& framing, std::int64_t i,
                         const ConeWindow& window) {
  const IntMatrix d = cone_matrix(profile, framing, i, window);
  const SmithForm f = smith_normal_form(d);
  // The kernel of an integer matrix is free, so the exact sequence
  // 0 -> coker D -> H -> ker D -> 0 splits.
  AbelianGroup g;
  g.free_rank = static_cast<std::int64_t>((d.cols() - f.rank) + (d.rows() - f.rank));
  for (std::int64_t dv : f.divisors)
    if (dv > 1) g.torsion.push_back(dv);
  return g;
}

AbelianGroup spinc_group(const SurgeryProfile& profile, const Framing& framing, std::int64_t i) {
  if (i < 0 || i >= framing.order())
    throw InputError("spin^c index " + std::to_string(i) + " outside [0, " +
                     std::to_string(framing.order()) + ")");
  return spinc_group(profile, framing, i, truncation_window(profile, framing, i));
}

SurgeryReport surgery_report(const SurgeryProfile& profile, const Framing& framing, unsigned threads) {
  const std::int64_t n = framing.order();
  SurgeryReport report;
  report.framing = framing;
  report.spinc.resize(static_cast<std::size_t>(n));

  auto work = [&](std::int64_t first, std::int64_t stride) {
    for (std::int64_t i = first; i < n; i += stride) {
      SpincEntry& e = report.spinc[static_cast<std::size_t>(i)];
      e.i = i;
      e.group = spinc_group(profile, framing, i);
      e.l_structure = e.group.is_z();
    }
  };

  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(std::max(threads, 1u), n));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> pool;
      for (std::int64_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            work(w, workers);
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& e : report.spinc) {
    report.ell += e.l_structure ? 1 : 0;
    report.total_rank += e.group.free_rank;
  }
  return report;
}

}  // namespace hfcone
