#include "gfz/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace gfz::io {

namespace {

bool valid_id(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    std::string tok;
    while (in >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool is_section(const Line& l, std::string_view name) {
  return l.tokens.size() == 1 && l.tokens[0] == std::string("[") + std::string(name) + "]";
}

}  // namespace

GsgPtr parse_gsg(std::string_view text) {
  auto lines = tokenize(text);
  size_t i = 0;
  if (i >= lines.size() || !is_section(lines[i], "carrier"))
    fail(i < lines.size() ? lines[i].number : 0, "expected [carrier] section");
  ++i;

  GsgTables t;
  bool have_s = false, have_g = false;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0][0] == '[') break;
    if (l.tokens.size() < 2 || l.tokens[1] != "=") fail(l.number, "expected 'name = values'");
    if (l.tokens[0] == "S") {
      if (have_s) fail(l.number, "duplicate S line");
      have_s = true;
      for (size_t k = 2; k < l.tokens.size(); ++k) {
        if (!valid_id(l.tokens[k])) fail(l.number, "bad id '" + l.tokens[k] + "'");
        t.carrier.push_back(l.tokens[k]);
      }
    } else if (l.tokens[0] == "G") {
      if (have_g) fail(l.number, "duplicate G line");
      have_g = true;
      for (size_t k = 2; k < l.tokens.size(); ++k) {
        if (!valid_id(l.tokens[k])) fail(l.number, "bad id '" + l.tokens[k] + "'");
        t.gamma.push_back(l.tokens[k]);
      }
    } else if (l.tokens[0] == "zero") {
      if (l.tokens.size() != 3) fail(l.number, "zero takes one id");
      t.zero = l.tokens[2];
    } else {
      fail(l.number, "unknown carrier entry '" + l.tokens[0] + "'");
    }
  }
  if (!have_s || t.carrier.empty()) fail(0, "missing or empty S list");
  if (!have_g || t.gamma.empty()) fail(0, "missing or empty G list");

  std::map<std::string, int> sidx, gidx;
  for (size_t k = 0; k < t.carrier.size(); ++k)
    if (!sidx.emplace(t.carrier[k], static_cast<int>(k)).second) fail(0, "duplicate S id");
  for (size_t k = 0; k < t.gamma.size(); ++k)
    if (!gidx.emplace(t.gamma[k], static_cast<int>(k)).second) fail(0, "duplicate G id");
  const int ns = static_cast<int>(t.carrier.size());
  const int ng = static_cast<int>(t.gamma.size());
  t.sgs.assign(static_cast<size_t>(ns) * ng * ns, -1);
  t.gsg.assign(static_cast<size_t>(ng) * ns * ng, -1);

  auto s_at = [&](const Line& l, const std::string& id) {
    auto it = sidx.find(id);
    if (it == sidx.end()) fail(l.number, "unknown S id '" + id + "'");
    return it->second;
  };
  auto g_at = [&](const Line& l, const std::string& id) {
    auto it = gidx.find(id);
    if (it == gidx.end()) fail(l.number, "unknown G id '" + id + "'");
    return it->second;
  };

  bool saw_sgs = false, saw_gsg = false;
  while (i < lines.size()) {
    const Line& header = lines[i];
    bool sgs_section = is_section(header, "sgs");
    bool gsg_section = is_section(header, "gsg");
    if (!sgs_section && !gsg_section) fail(header.number, "expected [sgs] or [gsg]");
    (sgs_section ? saw_sgs : saw_gsg) = true;
    ++i;
    for (; i < lines.size() && lines[i].tokens[0][0] != '['; ++i) {
      const Line& l = lines[i];
      if (l.tokens.size() != 5 || l.tokens[3] != "=")
        fail(l.number, "expected 'x y z = w'");
      if (sgs_section) {
        int a = s_at(l, l.tokens[0]), g = g_at(l, l.tokens[1]), b = s_at(l, l.tokens[2]);
        int v = s_at(l, l.tokens[4]);
        int& slot = t.sgs[(a * ng + g) * ns + b];
        if (slot >= 0 && slot != v) fail(l.number, "conflicting duplicate sgs entry");
        slot = v;
      } else {
        int g = g_at(l, l.tokens[0]), a = s_at(l, l.tokens[1]), h = g_at(l, l.tokens[2]);
        int v = g_at(l, l.tokens[4]);
        int& slot = t.gsg[(g * ns + a) * ng + h];
        if (slot >= 0 && slot != v) fail(l.number, "conflicting duplicate gsg entry");
        slot = v;
      }
    }
  }
  if (!saw_sgs) fail(0, "missing [sgs] section");
  if (!saw_gsg) fail(0, "missing [gsg] section");

  return GammaSemigroup::build(t);
}

std::string print_gsg(const GammaSemigroup& g) {
  std::string out = "[carrier]\nS =";
  for (int i = 0; i < g.size(); ++i) out += " " + g.id(i);
  out += "\nG =";
  for (int i = 0; i < g.gamma_size(); ++i) out += " " + g.gamma_id(i);
  out += "\n";
  if (g.has_zero()) out += "zero = " + g.id(g.zero()) + "\n";
  out += "[sgs]\n";
  for (int a = 0; a < g.size(); ++a)
    for (int ga = 0; ga < g.gamma_size(); ++ga)
      for (int b = 0; b < g.size(); ++b)
        out += g.id(a) + " " + g.gamma_id(ga) + " " + g.id(b) + " = " + g.id(g.sgs(a, ga, b)) +
               "\n";
  out += "[gsg]\n";
  for (int ga = 0; ga < g.gamma_size(); ++ga)
    for (int a = 0; a < g.size(); ++a)
      for (int h = 0; h < g.gamma_size(); ++h)
        out += g.gamma_id(ga) + " " + g.id(a) + " " + g.gamma_id(h) + " = " +
               g.gamma_id(g.gsg(ga, a, h)) + "\n";
  return out;
}

Ifs parse_ifs(std::string_view text, CarrierPtr carrier) {
  auto lines = tokenize(text);
  size_t i = 0;
  if (i >= lines.size() || !is_section(lines[i], "ifs"))
    fail(i < lines.size() ? lines[i].number : 0, "expected [ifs] section");
  ++i;

  std::vector<std::string> ids;
  std::vector<Degree> mu_list, nu_list;
  std::map<std::string, size_t> seen;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0][0] == '[') fail(l.number, "unexpected section");
    if (l.tokens.size() != 4 || l.tokens[1] != "=") fail(l.number, "expected 'id = mu nu'");
    if (!valid_id(l.tokens[0])) fail(l.number, "bad id '" + l.tokens[0] + "'");
    if (!seen.emplace(l.tokens[0], ids.size()).second)
      fail(l.number, "duplicate entry for '" + l.tokens[0] + "'");
    ids.push_back(l.tokens[0]);
    try {
      mu_list.push_back(Degree::parse(l.tokens[2]));
      nu_list.push_back(Degree::parse(l.tokens[3]));
    } catch (const Error& e) {
      fail(l.number, e.what());
    }
  }
  if (ids.empty()) fail(0, "no entries in [ifs] section");

  if (!carrier) {
    return ifs_build(Carrier::make(ids), std::move(mu_list), std::move(nu_list));
  }
  std::vector<Degree> mu(carrier->size()), nu(carrier->size());
  std::vector<bool> covered(carrier->size(), false);
  for (size_t k = 0; k < ids.size(); ++k) {
    auto it = carrier->index.find(ids[k]);
    if (it == carrier->index.end())
      throw Error(Errc::Parse, "'" + ids[k] + "' is not a carrier element");
    mu[it->second] = mu_list[k];
    nu[it->second] = nu_list[k];
    covered[it->second] = true;
  }
  for (int k = 0; k < carrier->size(); ++k)
    if (!covered[k])
      throw Error(Errc::MissingValue, "no entry for carrier element '" + carrier->ids[k] + "'");
  return ifs_build(carrier, std::move(mu), std::move(nu));
}

std::string print_ifs(const Ifs& a) {
  std::string out = "[ifs]\n";
  for (int i = 0; i < a.size(); ++i)
    out += a.carrier->ids[i] + " = " + a.mu[i].str() + " " + a.nu[i].str() + "\n";
  return out;
}

CrispSubset parse_subset(std::string_view csv, const CarrierPtr& carrier) {
  CrispSubset out(carrier);
  size_t pos = 0;
  bool any = false;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view id = csv.substr(pos, comma - pos);
    if (!id.empty()) {
      out.add(carrier->at(id));
      any = true;
    }
    pos = comma + 1;
  }
  if (!any) throw Error(Errc::EmptySubset, "subset list is empty");
  return out;
}

}  // namespace gfz::io
