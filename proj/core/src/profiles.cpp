#include "hfcone/profiles.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace hfcone {

namespace {

const LocalData kAbove{1, {1}, {0}};
const LocalData kBelow{1, {0}, {1}};

std::string level_msg(const std::string& what, std::int64_t s) {
  return what + " at s = " + std::to_string(s);
}

bool is_unit_row(const std::vector<std::int64_t>& row) {
  return row.size() == 1 && (row[0] == 1 || row[0] == -1);
}

bool same_up_to_sign(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a == b) return true;
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != -b[k]) return false;
  return true;
}

std::vector<std::int64_t> unit_row(std::int64_t width, std::int64_t hot) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(width), 0);
  if (hot >= 0 && hot < width) row[static_cast<std::size_t>(hot)] = 1;
  return row;
}

}  // namespace

SurgeryProfile::SurgeryProfile(std::string name, std::int64_t genus,
                               std::map<std::int64_t, LocalData> overrides)
    : name_(std::move(name)), genus_(genus), overrides_(std::move(overrides)) {
  if (name_.empty() || std::any_of(name_.begin(), name_.end(), [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
      }))
    throw ProfileError("profile name must be a single nonempty token", 0);
  if (genus_ < 0) throw ProfileError("genus must be nonnegative", 0);

  for (const auto& [s, d] : overrides_) {
    if (d.rank < 1) throw ProfileError(level_msg("rank must be at least 1", s), s);
    if (static_cast<std::int64_t>(d.v.size()) != d.rank)
      throw ProfileError(level_msg("v has width " + std::to_string(d.v.size()) + " but rank is " +
                                       std::to_string(d.rank), s),
                         s);
    if (static_cast<std::int64_t>(d.h.size()) != d.rank)
      throw ProfileError(level_msg("h has width " + std::to_string(d.h.size()) + " but rank is " +
                                       std::to_string(d.rank), s),
                         s);
    // For g >= 1 the pattern is already forced at s = +-g (v_g iso, h_g = 0 and
    // symmetrically), and the cone truncation relies on it there.
    const bool above = genus_ >= 1 ? s >= genus_ : s > genus_;
    const bool below = genus_ >= 1 ? s <= -genus_ : s < -genus_;
    if (above && !(d.rank == 1 && is_unit_row(d.v) && d.h == kAbove.h))
      throw ProfileError(level_msg("override contradicts the forced pattern at or above the genus", s), s);
    if (below && !(d.rank == 1 && is_unit_row(d.h) && d.v == kBelow.v))
      throw ProfileError(level_msg("override contradicts the forced pattern at or below the genus", s), s);
  }
  const std::int64_t interior = std::max<std::int64_t>(genus_, 1);
  for (std::int64_t s = -interior + 1; s < interior; ++s)
    if (!overrides_.contains(s)) throw ProfileError(level_msg("missing local data", s), s);
  for (const auto& [s, d] : overrides_)
    if (local(-s).rank != d.rank)
      throw ProfileError(level_msg("symmetry violation: rank " + std::to_string(d.rank) +
                                       " differs from rank " + std::to_string(local(-s).rank) +
                                       " at -s",
                                   s),
                         s);
}

const LocalData& SurgeryProfile::local(std::int64_t s) const {
  if (auto it = overrides_.find(s); it != overrides_.end()) return it->second;
  return s >= genus_ ? kAbove : kBelow;
}

SurgeryProfile SurgeryProfile::renamed(std::string name) const {
  return SurgeryProfile(std::move(name), genus_, overrides_);
}

bool equivalent_up_to_sign(const SurgeryProfile& a, const SurgeryProfile& b) {
  if (a.genus() != b.genus()) return false;
  std::set<std::int64_t> levels;
  for (std::int64_t s = -a.genus() - 1; s <= a.genus() + 1; ++s) levels.insert(s);
  for (const auto& [s, d] : a.overrides()) levels.insert(s);
  for (const auto& [s, d] : b.overrides()) levels.insert(s);
  for (std::int64_t s : levels) {
    const LocalData& x = a.local(s);
    const LocalData& y = b.local(s);
    if (x.rank != y.rank || !same_up_to_sign(x.v, y.v) || !same_up_to_sign(x.h, y.h)) return false;
  }
  return true;
}

SurgeryProfile unknot() { return SurgeryProfile("unknot", 0, {{0, LocalData{1, {1}, {1}}}}); }

SurgeryProfile lspace_knot(std::int64_t g) {
  if (g < 1) throw InputError("lspace_knot requires g >= 1");
  std::map<std::int64_t, LocalData> o;
  for (std::int64_t s = -g; s <= g; ++s)
    o.emplace(s, LocalData{1, {s >= g ? 1 : 0}, {s <= -g ? 1 : 0}});
  return SurgeryProfile("lspace:g=" + std::to_string(g), g, std::move(o));
}

SurgeryProfile figure_eight() {
  return SurgeryProfile("fig8", 1, {{0, LocalData{3, {1, 0, 0}, {1, 0, 0}}}});
}

SurgeryProfile k_family(std::int64_t m, std::int64_t k) {
  if (m < 1 || k < 1) throw InputError("k_family requires m >= 1 and k >= 1");
  std::map<std::int64_t, LocalData> o;
  for (std::int64_t s = -m + 1; s < m; ++s) {
    const std::int64_t r = (m - s) % 2 == 0 ? 3 : 2 * k + 3;
    o.emplace(s, LocalData{r, unit_row(r, 0), unit_row(r, 1)});
  }
  o.emplace(m, kAbove);
  o.emplace(-m, kBelow);
  return SurgeryProfile("kfam:m=" + std::to_string(m) + ",k=" + std::to_string(k), m, std::move(o));
}

SurgeryProfile tau_extremal(std::int64_t g, const std::map<std::int64_t, std::int64_t>& interior_ranks) {
  if (g < 1) throw InputError("tau_extremal requires g >= 1");
  std::string name = "tau:g=" + std::to_string(g);
  std::map<std::int64_t, LocalData> o;
  for (const auto& [s, r] : interior_ranks) {
    if (s <= -g || s >= g)
      throw ProfileError(level_msg("interior rank given outside (-g, g)", s), s);
    if (r < 1) throw ProfileError(level_msg("rank must be at least 1", s), s);
    if (r != 1) name += ",r" + std::to_string(s) + "=" + std::to_string(r);
  }
  for (std::int64_t s = -g + 1; s < g; ++s) {
    auto it = interior_ranks.find(s);
    const std::int64_t r = it == interior_ranks.end() ? 1 : it->second;
    o.emplace(s, LocalData{r, unit_row(r, -1), unit_row(r, -1)});
  }
  o.emplace(g, kAbove);
  o.emplace(-g, kBelow);
  return SurgeryProfile(std::move(name), g, std::move(o));
}

namespace {

std::int64_t to_int(std::string_view s, const std::string& where) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError(where + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::int64_t> to_row(std::string_view s, const std::string& where) {
  std::vector<std::int64_t> out;
  for (;;) {
    const auto comma = s.find(',');
    out.push_back(to_int(s.substr(0, comma), where));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(row[k]);
  }
  return out;
}

}  // namespace

SurgeryProfile parse_profile(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::string name;
  std::int64_t genus = 0;
  std::map<std::int64_t, LocalData> overrides;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);

    std::istringstream tok(line);
    std::vector<std::string> t;
    for (std::string w; tok >> w;) t.push_back(w);

    if (t[0] == "profile") {
      if (have_header) throw InputError(where + ": duplicate profile header");
      if (t.size() != 4 || t[2] != "genus")
        throw InputError(where + ": expected 'profile <name> genus <g>'");
      name = t[1];
      genus = to_int(t[3], where);
      have_header = true;
    } else if (t[0] == "local") {
      if (!have_header) throw InputError(where + ": 'local' before the profile header");
      if (t.size() != 8 || t[2] != "rank" || t[4] != "v" || t[6] != "h")
        throw InputError(where + ": expected 'local <s> rank <r> v <c1,...> h <c1,...>'");
      const std::int64_t s = to_int(t[1], where);
      LocalData d{to_int(t[3], where), to_row(t[5], where), to_row(t[7], where)};
      if (!overrides.emplace(s, std::move(d)).second)
        throw InputError(where + ": duplicate local data for s = " + std::to_string(s));
    } else {
      throw InputError(where + ": unknown directive '" + t[0] + "'");
    }
  }
  if (!have_header) throw InputError("missing 'profile <name> genus <g>' header");
  return SurgeryProfile(std::move(name), genus, std::move(overrides));
}

std::string serialize(const SurgeryProfile& p) {
  std::ostringstream os;
  os << "profile " << p.name() << " genus " << p.genus() << '\n';
  for (const auto& [s, d] : p.overrides())
    os << "local " << s << " rank " << d.rank << " v " << join(d.v) << " h " << join(d.h) << '\n';
  return os.str();
}

SurgeryProfile builtin_profile(std::string_view selector) {
  const auto colon = selector.find(':');
  const std::string_view head = selector.substr(0, colon);
  std::map<std::string, std::int64_t, std::less<>> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = selector.substr(colon + 1);
    for (;;) {
      const auto comma = rest.find(',');
      const std::string_view kv = rest.substr(0, comma);
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos)
        throw InputError("selector parameter '" + std::string(kv) + "' is not key=value");
      params[std::string(kv.substr(0, eq))] = to_int(kv.substr(eq + 1), "selector");
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto take = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end())
      throw InputError("selector '" + std::string(selector) + "' needs parameter " + key);
    const std::int64_t v = it->second;
    params.erase(it);
    return v;
  };
  auto finish = [&](SurgeryProfile p) {
    if (!params.empty())
      throw InputError("unknown parameter '" + params.begin()->first + "' in selector '" +
                       std::string(selector) + "'");
    return p;
  };

  if (head == "unknot") return finish(unknot());
  if (head == "fig8") return finish(figure_eight());
  if (head == "lspace") return finish(lspace_knot(take("g")));
  if (head == "kfam") {
    const std::int64_t m = take("m");
    return finish(k_family(m, take("k")));
  }
  if (head == "tau") {
    const std::int64_t g = take("g");
    std::map<std::int64_t, std::int64_t> ranks;
    for (auto it = params.begin(); it != params.end();) {
      if (it->first.size() > 1 && it->first[0] == 'r') {
        // rS=R sets both S and -S; an explicit conflicting pair still fails validation.
        const std::int64_t level = to_int(std::string_view(it->first).substr(1), "selector");
        ranks[level] = it->second;
        ranks.emplace(-level, it->second);
        it = params.erase(it);
      } else {
        ++it;
      }
    }
    return finish(tau_extremal(g, ranks));
  }
  throw InputError("unknown profile selector '" + std::string(selector) + "'");
}

}  // namespace hfcone
