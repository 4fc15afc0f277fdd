#include "gfz/gamma_semigroup.hpp"

#include <algorithm>
#include <set>

namespace gfz {

std::shared_ptr<const Carrier> Carrier::make(std::vector<std::string> ids) {
  if (ids.empty()) throw Error(Errc::InvalidParameters, "carrier must be nonempty");
  auto c = std::make_shared<Carrier>();
  c->ids = std::move(ids);
  for (int i = 0; i < static_cast<int>(c->ids.size()); ++i) {
    if (!c->index.emplace(c->ids[i], i).second)
      throw Error(Errc::InvalidParameters, "duplicate id '" + c->ids[i] + "'");
  }
  return c;
}

std::string CrispSubset::str() const {
  std::string out;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    if (!out.empty()) out += ",";
    out += carrier->ids[i];
  }
  return out;
}

CrispSubset subset_intersect(const CrispSubset& a, const CrispSubset& b) {
  CrispSubset r(a.carrier);
  for (size_t i = 0; i < a.bits.size(); ++i) r.bits[i] = a.bits[i] && b.bits[i];
  return r;
}

namespace {

std::string tuple_str(const GammaSemigroup& g, std::initializer_list<std::pair<char, int>> parts) {
  std::string out;
  int k = 0;
  for (auto [role, idx] : parts) {
    if (k++) out += " ";
    out += (role == 's') ? g.id(idx) : g.gamma_id(idx);
  }
  return out;
}

}  // namespace

GsgPtr GammaSemigroup::build(const GsgTables& t) {
  auto g = std::shared_ptr<GammaSemigroup>(new GammaSemigroup());
  g->carrier_ = Carrier::make(t.carrier);
  if (t.gamma.empty()) throw Error(Errc::InvalidParameters, "gamma must be nonempty");
  g->gamma_ = t.gamma;
  for (int i = 0; i < static_cast<int>(g->gamma_.size()); ++i) {
    if (!g->gamma_index_.emplace(g->gamma_[i], i).second)
      throw Error(Errc::InvalidParameters, "duplicate gamma id '" + g->gamma_[i] + "'");
  }

  const int ns = g->size();
  const int ng = g->gamma_size();
  if (t.sgs.size() != static_cast<size_t>(ns) * ng * ns ||
      t.gsg.size() != static_cast<size_t>(ng) * ns * ng)
    throw Error(Errc::MissingTableEntry, "table has the wrong number of entries");
  g->sgs_ = t.sgs;
  g->gsg_ = t.gsg;

  for (int a = 0; a < ns; ++a)
    for (int al = 0; al < ng; ++al)
      for (int b = 0; b < ns; ++b) {
        int v = g->sgs(a, al, b);
        if (v < 0 || v >= ns)
          throw Error(Errc::MissingTableEntry,
                      "sgs entry " + g->id(a) + " " + g->gamma_id(al) + " " + g->id(b));
      }
  for (int al = 0; al < ng; ++al)
    for (int a = 0; a < ns; ++a)
      for (int be = 0; be < ng; ++be) {
        int v = g->gsg(al, a, be);
        if (v < 0 || v >= ng)
          throw Error(Errc::MissingTableEntry,
                      "gsg entry " + g->gamma_id(al) + " " + g->id(a) + " " + g->gamma_id(be));
      }

  // First law, every tuple in lexicographic (a, alpha, b, beta, c) order:
  // (a alpha b) beta c = a (alpha b beta) c = a alpha (b beta c).
  for (int a = 0; a < ns; ++a)
    for (int al = 0; al < ng; ++al)
      for (int b = 0; b < ns; ++b)
        for (int be = 0; be < ng; ++be)
          for (int c = 0; c < ns; ++c) {
            int left = g->sgs(g->sgs(a, al, b), be, c);
            int mid = g->sgs(a, g->gsg(al, b, be), c);
            int right = g->sgs(a, al, g->sgs(b, be, c));
            if (left != mid || left != right) {
              throw Error(
                  Errc::AssociativityViolation,
                  "first law at (" +
                      tuple_str(*g, {{'s', a}, {'g', al}, {'s', b}, {'g', be}, {'s', c}}) +
                      "): outer-left=" + g->id(left) + " middle=" + g->id(mid) +
                      " outer-right=" + g->id(right));
            }
          }

  // Second law in (alpha, a, beta, b, gamma) order:
  // alpha (a beta b) gamma = (alpha a beta) b gamma = alpha a (beta b gamma).
  for (int al = 0; al < ng; ++al)
    for (int a = 0; a < ns; ++a)
      for (int be = 0; be < ng; ++be)
        for (int b = 0; b < ns; ++b)
          for (int ga = 0; ga < ng; ++ga) {
            int left = g->gsg(al, g->sgs(a, be, b), ga);
            int mid = g->gsg(g->gsg(al, a, be), b, ga);
            int right = g->gsg(al, a, g->gsg(be, b, ga));
            if (left != mid || left != right) {
              throw Error(
                  Errc::AssociativityViolation,
                  "second law at (" +
                      tuple_str(*g, {{'g', al}, {'s', a}, {'g', be}, {'s', b}, {'g', ga}}) +
                      "): outer-left=" + g->gamma_id(left) + " middle=" + g->gamma_id(mid) +
                      " outer-right=" + g->gamma_id(right));
            }
          }

  if (t.zero) {
    g->zero_ = g->carrier_->at(*t.zero);
    for (int a = 0; a < ns; ++a)
      for (int al = 0; al < ng; ++al) {
        if (g->sgs(g->zero_, al, a) != g->zero_ || g->sgs(a, al, g->zero_) != g->zero_)
          throw Error(Errc::InvalidZero, "'" + *t.zero + "' does not absorb " + g->id(a) +
                                             " under " + g->gamma_id(al));
      }
  }

  return g;
}

int GammaSemigroup::gamma_element(std::string_view id) const {
  auto it = gamma_index_.find(id);
  if (it == gamma_index_.end())
    throw Error(Errc::UnknownElement, "no gamma element '" + std::string(id) + "'");
  return it->second;
}

const std::vector<std::vector<std::tuple<int, int, int>>>& GammaSemigroup::factorizations() const {
  std::call_once(fact_once_, [this] {
    fact_.assign(size(), {});
    for (int u = 0; u < size(); ++u)
      for (int g = 0; g < gamma_size(); ++g)
        for (int v = 0; v < size(); ++v) fact_[sgs(u, g, v)].emplace_back(u, g, v);
  });
  return fact_;
}

int op_sgs(const GammaSemigroup& g, int a, int gamma, int b) {
  if (a < 0 || a >= g.size() || b < 0 || b >= g.size() || gamma < 0 || gamma >= g.gamma_size())
    throw Error(Errc::UnknownElement, "sgs argument out of range");
  return g.sgs(a, gamma, b);
}

int op_gsg(const GammaSemigroup& g, int gamma, int a, int beta) {
  if (a < 0 || a >= g.size() || gamma < 0 || gamma >= g.gamma_size() || beta < 0 ||
      beta >= g.gamma_size())
    throw Error(Errc::UnknownElement, "gsg argument out of range");
  return g.gsg(gamma, a, beta);
}

bool is_commutative(const GammaSemigroup& g) {
  for (int a = 0; a < g.size(); ++a)
    for (int ga = 0; ga < g.gamma_size(); ++ga)
      for (int b = a + 1; b < g.size(); ++b)
        if (g.sgs(a, ga, b) != g.sgs(b, ga, a)) return false;
  return true;
}

RegularityResult is_regular(const GammaSemigroup& g) {
  RegularityResult res;
  res.witnesses.resize(g.size());
  for (int c = 0; c < g.size(); ++c) {
    bool found = false;
    // Canonical witness order: (g1, x, g2).
    for (int g1 = 0; g1 < g.gamma_size() && !found; ++g1)
      for (int x = 0; x < g.size() && !found; ++x)
        for (int g2 = 0; g2 < g.gamma_size() && !found; ++g2) {
          if (g.sgs(g.sgs(c, g1, x), g2, c) == c) {
            res.witnesses[c] = {x, g1, g2};
            found = true;
          }
        }
    if (!found) {
      res.regular = false;
      res.failing = c;
      return res;
    }
  }
  res.regular = true;
  return res;
}

int power_element(const GammaSemigroup& g, int x, int alpha, int n) {
  if (x < 0 || x >= g.size() || alpha < 0 || alpha >= g.gamma_size() || n < 0)
    throw Error(Errc::UnknownElement, "power argument out of range");
  int acc = x;
  for (int i = 0; i < n; ++i) acc = g.sgs(x, alpha, acc);
  return acc;
}

GsgPtr make_modular(int n, const std::vector<int>& gamma_subset) {
  if (n < 1) throw Error(Errc::InvalidParameters, "modulus must be >= 1");
  if (gamma_subset.empty()) throw Error(Errc::InvalidParameters, "gamma subset must be nonempty");
  std::set<int> gset;
  for (int v : gamma_subset) {
    if (v < 0 || v >= n)
      throw Error(Errc::InvalidParameters, "gamma value " + std::to_string(v) + " not in Z_" +
                                               std::to_string(n));
    gset.insert(v);
  }

  std::vector<int> gval(gset.begin(), gset.end());
  std::vector<int> gidx(n, -1);
  for (int i = 0; i < static_cast<int>(gval.size()); ++i) gidx[gval[i]] = i;

  // The gamma table realizes (a, s, b) -> a*s*b mod n, so the subset has to
  // absorb those products or the table is not total into gamma.
  for (int a : gval)
    for (int s = 0; s < n; ++s)
      for (int b : gval) {
        int p = (a * s % n) * b % n;
        if (gidx[p] < 0)
          throw Error(Errc::InvalidParameters,
                      "gamma subset not closed: " + std::to_string(a) + "*" + std::to_string(s) +
                          "*" + std::to_string(b) + " = " + std::to_string(p) +
                          " (mod " + std::to_string(n) + ") is outside the subset");
      }

  GsgTables t;
  for (int i = 0; i < n; ++i) t.carrier.push_back(std::to_string(i));
  for (int v : gval) t.gamma.push_back(std::to_string(v));
  const int ng = static_cast<int>(gval.size());
  t.sgs.resize(static_cast<size_t>(n) * ng * n);
  t.gsg.resize(static_cast<size_t>(ng) * n * ng);
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < ng; ++g)
      for (int b = 0; b < n; ++b)
        t.sgs[(a * ng + g) * n + b] = (a * gval[g] % n) * b % n;
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < n; ++a)
      for (int h = 0; h < ng; ++h)
        t.gsg[(g * n + a) * ng + h] = gidx[(gval[g] * a % n) * gval[h] % n];
  t.zero = "0";
  return GammaSemigroup::build(t);
}

}  // namespace gfz
