#include "gfz/catalog.hpp"

#include <functional>

namespace gfz {

namespace {

GsgPtr build_from_fns(std::vector<std::string> s_ids, std::vector<std::string> g_ids,
                      const std::function<int(int, int, int)>& sgs,
                      const std::function<int(int, int, int)>& gsg,
                      std::optional<std::string> zero = std::nullopt) {
  GsgTables t;
  t.carrier = std::move(s_ids);
  t.gamma = std::move(g_ids);
  t.zero = std::move(zero);
  const int ns = static_cast<int>(t.carrier.size());
  const int ng = static_cast<int>(t.gamma.size());
  t.sgs.resize(static_cast<size_t>(ns) * ng * ns);
  t.gsg.resize(static_cast<size_t>(ng) * ns * ng);
  for (int a = 0; a < ns; ++a)
    for (int g = 0; g < ng; ++g)
      for (int b = 0; b < ns; ++b) t.sgs[(a * ng + g) * ns + b] = sgs(a, g, b);
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < ns; ++a)
      for (int h = 0; h < ng; ++h) t.gsg[(g * ns + a) * ng + h] = gsg(g, a, h);
  return GammaSemigroup::build(t);
}

GsgPtr make_units_mod5() {
  // Carrier {1,2,3,4} under mod-5 products; products of units stay units.
  std::vector<std::string> ids = {"1", "2", "3", "4"};
  auto val = [](int i) { return i + 1; };
  auto idx = [](int v) { return v - 1; };
  return build_from_fns(
      ids, ids,
      [&](int a, int g, int b) { return idx(val(a) * val(g) % 5 * val(b) % 5); },
      [&](int g, int a, int h) { return idx(val(g) * val(a) % 5 * val(h) % 5); });
}

GsgPtr make_left_projection() {
  return build_from_fns({"a", "b"}, {"g"}, [](int a, int, int) { return a; },
                        [](int, int, int) { return 0; });
}

GsgPtr make_right_projection() {
  return build_from_fns({"a", "b"}, {"g"}, [](int, int, int b) { return b; },
                        [](int, int, int) { return 0; });
}

GsgPtr make_constant2() {
  return build_from_fns({"a", "b"}, {"g"}, [](int, int, int) { return 0; },
                        [](int, int, int) { return 0; }, "a");
}

GsgPtr make_negq4() {
  // S magnitudes: n0 = 0, n1 = 1, n2 = 2, n3 = 3 and below.
  // Gamma magnitudes: e0 = 0, e2 = 2, e4 = even 4 and below.
  const int smag[4] = {0, 1, 2, 3};
  const int gmag[3] = {0, 2, 4};
  auto sclass = [](long long m) { return m == 0 ? 0 : (m == 1 ? 1 : (m == 2 ? 2 : 3)); };
  return build_from_fns(
      {"n0", "n1", "n2", "n3"}, {"e0", "e2", "e4"},
      [&](int a, int g, int b) {
        return sclass(static_cast<long long>(smag[a]) * gmag[g] * smag[b]);
      },
      [&](int g, int a, int h) {
        long long m = static_cast<long long>(gmag[g]) * smag[a] * gmag[h];
        return m == 0 ? 0 : 2;  // nonzero operator products are all 4 or deeper
      },
      "n0");
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"singleton", make_modular(1, {0}), "one element, commutative, zero, regular"});
    v.push_back({"mod2-full", make_modular(2, {0, 1}), "Z2 products, commutative, zero, regular"});
    v.push_back({"mod4-full", make_modular(4, {0, 1, 2, 3}),
                 "Z4 products, commutative, zero, non-regular"});
    v.push_back({"mod4-geven", make_modular(4, {0, 2}),
                 "Z4 with even operators, commutative, zero, non-regular"});
    v.push_back({"mod5-full", make_modular(5, {0, 1, 2, 3, 4}),
                 "Z5 products, commutative, zero, regular"});
    v.push_back({"mod6-full", make_modular(6, {0, 1, 2, 3, 4, 5}),
                 "Z6 products, commutative, zero, regular"});
    v.push_back({"mod6-geven", make_modular(6, {0, 2, 4}),
                 "Z6 with even operators, commutative, zero, non-regular"});
    v.push_back({"mod6-g03", make_modular(6, {0, 3}),
                 "Z6 with operators {0,3}, commutative, zero, non-regular"});
    v.push_back({"umod5", make_units_mod5(), "units mod 5, commutative, no zero, regular"});
    v.push_back({"leftzero2", make_left_projection(),
                 "left projection, non-commutative, no zero, regular"});
    v.push_back({"rightzero2", make_right_projection(),
                 "right projection, non-commutative, no zero, regular"});
    v.push_back({"const2", make_constant2(),
                 "constant product, commutative, zero, non-regular; 'b' has no factorization"});
    v.push_back({"negq4", make_negq4(),
                 "magnitude classes of non-positive integers, commutative, zero, non-regular"});
    return v;
  }();
  return entries;
}

GsgPtr catalog_instance(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e.instance;
  throw Error(Errc::UnknownCase, "no catalog instance '" + std::string(name) + "'");
}

Ifs graded_ifs(const GammaSemigroup& negq4) {
  std::vector<Degree> mu = {Degree::one(), Degree::of(1, 10), Degree::of(1, 10),
                            Degree::of(2, 10)};
  std::vector<Degree> nu = {Degree::zero(), Degree::of(6, 10), Degree::of(6, 10),
                            Degree::of(7, 10)};
  return ifs_build(negq4.carrier(), std::move(mu), std::move(nu));
}

CarrierPtr graded_snapshot_carrier() {
  static const CarrierPtr c = Carrier::make({"n0", "n1", "n3"});
  return c;
}

Ifs graded_snapshot_ifs() {
  return ifs_build(graded_snapshot_carrier(),
                   {Degree::one(), Degree::of(1, 10), Degree::of(2, 10)},
                   {Degree::zero(), Degree::of(6, 10), Degree::of(7, 10)});
}

}  // namespace gfz
