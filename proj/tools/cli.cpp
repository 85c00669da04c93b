#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfcone/cfk.hpp"
#include "hfcone/cone.hpp"
#include "hfcone/obstruct.hpp"
#include "hfcone/profiles.hpp"

namespace hfcone::cli {

namespace {

using json = nlohmann::json;

SurgeryProfile load_profile(const std::string& selector) {
  if (!selector.empty() && selector.front() == '@') {
    const std::string path = selector.substr(1);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open profile file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
  }
  return builtin_profile(selector);
}

// `P1..P2/Q1..Q2`, iterated q-outer, p-inner, skipping p = 0 and non-reduced pairs.
std::vector<Framing> parse_framing_range(const std::string& text) {
  auto parse_span = [&](const std::string& part) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) throw InputError("bad framing range '" + text + "', expected P1..P2/Q1..Q2");
    try {
      std::size_t used = 0;
      const long long lo = std::stoll(part.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(part);
      const std::string rest = part.substr(dots + 2);
      const long long hi = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(part);
      return std::pair<std::int64_t, std::int64_t>{lo, hi};
    } catch (const std::logic_error&) {
      throw InputError("bad framing range '" + text + "', expected P1..P2/Q1..Q2");
    }
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InputError("bad framing range '" + text + "', expected P1..P2/Q1..Q2");
  const auto [p_lo, p_hi] = parse_span(text.substr(0, slash));
  const auto [q_lo, q_hi] = parse_span(text.substr(slash + 1));
  if (q_lo < 1) throw InputError("framing range denominators must be positive");
  std::vector<Framing> out;
  for (std::int64_t q = q_lo; q <= q_hi; ++q)
    for (std::int64_t p = p_lo; p <= p_hi; ++p)
      if (p != 0 && std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

json report_json(const SurgeryReport& r) {
  json spinc = json::array();
  for (const auto& e : r.spinc)
    spinc.push_back({{"i", e.i},
                     {"free_rank", e.group.free_rank},
                     {"torsion", e.group.torsion},
                     {"l_structure", e.l_structure}});
  return {{"framing", r.framing.to_string()}, {"spinc", spinc}, {"ell", r.ell}, {"total_rank", r.total_rank}};
}

void print_report_text(std::ostream& out, const SurgeryReport& r) {
  out << "framing " << r.framing.to_string() << '\n';
  for (const auto& e : r.spinc) out << "i=" << e.i << ' ' << to_string(e.group) << (e.l_structure ? " L" : "") << '\n';
  out << "ell=" << r.ell << " total_rank=" << r.total_rank << '\n';
}

// Restricts a report to one class, recomputing the totals.
SurgeryReport single_class(const SurgeryProfile& profile, const Framing& framing, std::int64_t i) {
  SurgeryReport r;
  r.framing = framing;
  SpincEntry e;
  e.i = i;
  e.group = spinc_group(profile, framing, i);
  e.l_structure = e.group.is_z();
  r.ell = e.l_structure ? 1 : 0;
  r.total_rank = e.group.free_rank;
  r.spinc.push_back(std::move(e));
  return r;
}

std::string row_text(const std::vector<std::int64_t>& row) {
  std::string s = "[";
  for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + std::to_string(row[k]);
  return s + "]";
}

int verdict_exit(std::ostream& out, const Verdict& v) {
  out << to_string(v.status) << ": " << v.detail << '\n';
  return v.status == Status::violated ? kViolated : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard Floer hat groups of rational surgeries via the truncated mapping cone"};
  app.require_subcommand(1);

  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");

  // hf / ell
  std::string profile_sel, framing_text, range_text, format = "text";
  std::int64_t spinc_index = -1;
  auto* hf = app.add_subcommand("hf", "per-spin^c HF-hat groups");
  auto* ell = app.add_subcommand("ell", "number of L-structures and total rank");
  for (auto* sub : {hf, ell}) {
    sub->add_option("--profile", profile_sel, "built-in selector or @file")->required();
    auto* f = sub->add_option("--framing", framing_text, "slope p/q or integer p");
    auto* r = sub->add_option("--framing-range", range_text, "grid P1..P2/Q1..Q2, q-outer then p-inner");
    f->excludes(r);
    r->excludes(f);
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }
  hf->add_option("--spinc", spinc_index, "single spin^c class i in [0, |p|)");

  // bound
  std::int64_t h1 = 0, ell_value = 0, genus = 0;
  auto* bound = app.add_subcommand("bound", "lower bound on the integral surgery genus");
  bound->add_option("--h1", h1, "|H_1(Y)|")->required();
  bound->add_option("--ell", ell_value, "number of L-structures")->required();
  auto* bound_genus = bound->add_option("--genus", genus, "also check the genus bound for a genus-g knot");
  auto* bound_framing = bound->add_option("--framing", framing_text, "slope for --genus");
  bound_genus->needs(bound_framing);
  bound_framing->needs(bound_genus);

  // spinc
  bool oracle = false;
  auto* spinc = app.add_subcommand("spinc", "first/second kind classification of spin^c classes");
  spinc->add_option("--genus", genus)->required();
  spinc->add_option("--framing", framing_text)->required();
  spinc->add_flag("--oracle", oracle, "cross-check the closed form by brute force");

  // pair / kfam
  std::int64_t g1 = 0, g2 = 0, q1 = 0, q2 = 0, p = 0, m = 0, n = 0;
  std::string mode = "first";
  auto* pair = app.add_subcommand("pair", "framed-pair obstruction for tau-extremal knots");
  pair->add_option("--g1", g1)->required();
  pair->add_option("--q1", q1)->required();
  pair->add_option("--g2", g2)->required();
  pair->add_option("--q2", q2)->required();
  pair->add_option("--p", p)->required();
  pair->add_option("--mode", mode, "first or both")->check(CLI::IsMember({"first", "both"}));
  auto* kfam = app.add_subcommand("kfam", "obstruction for the K_{2m,2k+1} family");
  kfam->add_option("--m", m)->required();
  kfam->add_option("--n", n)->required();
  kfam->add_option("--p", p)->required();
  kfam->add_option("--q1", q1)->required();
  kfam->add_option("--q2", q2)->required();

  // staircase
  std::string alexander, name = "staircase";
  bool emit = false;
  auto* stair = app.add_subcommand("staircase", "derive a profile from an L-space knot's Alexander polynomial");
  stair->add_option("--alexander", alexander, "c_top,...,c_bot:top")->required();
  stair->add_option("--name", name, "profile name for --emit-profile");
  stair->add_flag("--emit-profile", emit, "print the derived profile in file format");

  // profile
  std::string show_sel, check_sel;
  auto* prof = app.add_subcommand("profile", "show or validate a profile");
  auto* show = prof->add_option("--show", show_sel, "print the profile in file format");
  auto* check = prof->add_option("--check", check_sel, "validate and summarize");
  show->excludes(check);
  check->excludes(show);
  prof->require_option(1);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const unsigned threads = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());

  try {
    if (hf->parsed() || ell->parsed()) {
      if (framing_text.empty() == range_text.empty()) {
        err << "error: exactly one of --framing or --framing-range is required\n";
        return kUsage;
      }
      const SurgeryProfile profile = load_profile(profile_sel);
      const std::vector<Framing> framings =
          range_text.empty() ? std::vector<Framing>{parse_framing(framing_text)} : parse_framing_range(range_text);
      if (spinc_index >= 0 && framings.size() != 1) {
        err << "error: --spinc needs a single --framing\n";
        return kUsage;
      }
      std::vector<SurgeryReport> reports;
      for (const auto& f : framings)
        reports.push_back(spinc_index >= 0 ? single_class(profile, f, spinc_index)
                                           : surgery_report(profile, f, threads));

      if (format == "json") {
        if (reports.size() == 1) {
          out << report_json(reports.front()).dump() << '\n';
        } else {
          json all = json::array();
          for (const auto& r : reports) all.push_back(report_json(r));
          out << all.dump() << '\n';
        }
        return kOk;
      }
      for (const auto& r : reports) {
        if (hf->parsed()) {
          print_report_text(out, r);
        } else {
          if (reports.size() > 1) out << "framing=" << r.framing.to_string() << ' ';
          out << "ell=" << r.ell << " total_rank=" << r.total_rank << '\n';
        }
      }
      return kOk;
    }

    if (bound->parsed()) {
      const auto lb = gz_lower_bound(h1, ell_value);
      if (lb)
        out << "g_Z >= " << to_string(*lb) << '\n';
      else
        out << "not_applicable: ell = |H_1|, Y is an L-space\n";
      if (bound_genus->count() > 0) {
        const Framing f = parse_framing(framing_text);
        if (f.order() != h1) throw InputError("--framing numerator must satisfy |p| = --h1");
        return verdict_exit(out, genus_inequality(genus, f, ell_value));
      }
      return kOk;
    }

    if (spinc->parsed()) {
      const Framing f = parse_framing(framing_text);
      if (genus < 1) throw InputError("--genus must be at least 1");
      const SpincClassification brute = classify_spinc(genus, f);
      std::vector<std::int64_t> closed = first_kind_closed_form(genus, f.order(), f.q());
      std::sort(closed.begin(), closed.end());
      out << "first_kind count=" << closed.size() << ':';
      for (auto i : closed) out << ' ' << i;
      out << '\n';
      out << "second_kind count=" << brute.second_kind.size() << '\n';
      for (const auto& [i, hits] : brute.second_kind) {
        out << "i=" << i;
        for (const auto& w : hits) out << " s=" << w.s << " phi=" << w.level;
        out << '\n';
      }
      if (oracle) {
        if (brute.first_kind != closed) {
          out << "oracle: MISMATCH\n";
          err << "error: closed form and brute-force classification disagree\n";
          return kInternal;
        }
        out << "oracle: agree\n";
      }
      return kOk;
    }

    if (pair->parsed())
      return verdict_exit(out, pair_obstruction(g1, q1, g2, q2, p,
                                                mode == "both" ? PairMode::tau_extremal_both
                                                               : PairMode::tau_extremal_first));

    if (kfam->parsed()) return verdict_exit(out, k_family_obstruction(m, n, q1, q2, p));

    if (stair->parsed()) {
      const CfkComplex c = staircase_from_alexander(parse_alexander(alexander));
      const SurgeryProfile profile = to_profile(c, name);
      if (emit) {
        out << serialize(profile);
        return kOk;
      }
      out << "ok generators=" << c.generators.size() << " genus=" << profile.genus() << '\n';
      for (std::int64_t s = -profile.genus(); s <= profile.genus(); ++s) {
        const LocalData& d = profile.local(s);
        out << "s=" << s << " rank=" << d.rank << " v=" << row_text(d.v) << " h=" << row_text(d.h) << '\n';
      }
      return kOk;
    }

    if (prof->parsed()) {
      if (!show_sel.empty()) {
        out << serialize(load_profile(show_sel));
      } else {
        const SurgeryProfile sp = load_profile(check_sel);
        out << "ok " << sp.name() << " genus=" << sp.genus() << " overrides=" << sp.overrides().size() << '\n';
      }
      return kOk;
    }
  } catch (const ProfileError& e) {
    err << "error: invalid profile (s = " << e.level() << "): " << e.what() << '\n';
    return kDataError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const OverflowError& e) {
    err << "error: arithmetic overflow: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace hfcone::cli
