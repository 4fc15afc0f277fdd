#include "gfz/ifs.hpp"

#include <algorithm>

namespace gfz {

namespace {

void require_same_carrier(const Ifs& a, const Ifs& b) {
  if (!a.carrier || !b.carrier || !a.carrier->same_as(*b.carrier))
    throw Error(Errc::CarrierMismatch, "operands live on different carriers");
}

}  // namespace

Ifs ifs_build(CarrierPtr carrier, std::vector<Degree> mu, std::vector<Degree> nu) {
  if (!carrier) throw Error(Errc::MissingValue, "null carrier");
  const size_t n = carrier->ids.size();
  if (mu.size() != n || nu.size() != n)
    throw Error(Errc::MissingValue, "maps must cover every carrier element exactly once");
  for (size_t i = 0; i < n; ++i) {
    if (!sum_within_one(mu[i], nu[i]))
      throw Error(Errc::SumExceedsOne, "mu + nu > 1 at '" + carrier->ids[i] + "' (" +
                                           mu[i].str() + " + " + nu[i].str() + ")");
  }
  return Ifs{std::move(carrier), std::move(mu), std::move(nu)};
}

bool ifs_leq(const Ifs& a, const Ifs& b) {
  require_same_carrier(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (b.mu[i] < a.mu[i] || a.nu[i] < b.nu[i]) return false;
  return true;
}

bool ifs_eq(const Ifs& a, const Ifs& b) {
  require_same_carrier(a, b);
  return a.mu == b.mu && a.nu == b.nu;
}

Ifs ifs_complement(const Ifs& a) { return Ifs{a.carrier, a.nu, a.mu}; }

Ifs ifs_box(const Ifs& a) {
  std::vector<Degree> nu;
  nu.reserve(a.mu.size());
  for (const Degree& m : a.mu) nu.push_back(m.complement());
  return Ifs{a.carrier, a.mu, std::move(nu)};
}

Ifs ifs_diamond(const Ifs& a) {
  std::vector<Degree> mu;
  mu.reserve(a.nu.size());
  for (const Degree& n : a.nu) mu.push_back(n.complement());
  return Ifs{a.carrier, std::move(mu), a.nu};
}

Ifs ifs_meet(const Ifs& a, const Ifs& b) {
  require_same_carrier(a, b);
  Ifs out{a.carrier, {}, {}};
  for (int i = 0; i < a.size(); ++i) {
    out.mu.push_back(degree_min(a.mu[i], b.mu[i]));
    out.nu.push_back(degree_max(a.nu[i], b.nu[i]));
  }
  return out;
}

Ifs ifs_join(const Ifs& a, const Ifs& b) {
  require_same_carrier(a, b);
  Ifs out{a.carrier, {}, {}};
  for (int i = 0; i < a.size(); ++i) {
    out.mu.push_back(degree_max(a.mu[i], b.mu[i]));
    out.nu.push_back(degree_min(a.nu[i], b.nu[i]));
  }
  return out;
}

Ifs ifs_family_inf(std::span<const Ifs> family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "family inf over no members");
  Ifs out = family[0];
  for (size_t k = 1; k < family.size(); ++k) out = ifs_meet(out, family[k]);
  return out;
}

Ifs ifs_family_sup(std::span<const Ifs> family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "family sup over no members");
  Ifs out = family[0];
  for (size_t k = 1; k < family.size(); ++k) out = ifs_join(out, family[k]);
  return out;
}

CrispSubset upper_cut(const Ifs& a, const Degree& t) {
  CrispSubset out(a.carrier);
  for (int i = 0; i < a.size(); ++i)
    if (a.mu[i] >= t) out.add(i);
  return out;
}

CrispSubset lower_cut(const Ifs& a, const Degree& t) {
  CrispSubset out(a.carrier);
  for (int i = 0; i < a.size(); ++i)
    if (a.nu[i] <= t) out.add(i);
  return out;
}

CrispSubset support(const Ifs& a) {
  CrispSubset out(a.carrier);
  for (int i = 0; i < a.size(); ++i)
    if (Degree::zero() < a.mu[i] && a.nu[i] < Degree::one()) out.add(i);
  return out;
}

Ifs characteristic_pair(const CrispSubset& p) {
  Ifs out{p.carrier, {}, {}};
  for (size_t i = 0; i < p.bits.size(); ++i) {
    out.mu.push_back(p.bits[i] ? Degree::one() : Degree::zero());
    out.nu.push_back(p.bits[i] ? Degree::zero() : Degree::one());
  }
  return out;
}

Ifs step_ifs(const CrispSubset& i, const Degree& a0, const Degree& a1, const Degree& b0,
             const Degree& b1) {
  if (!(a1 < a0) || !(b0 < b1))
    throw Error(Errc::ParameterOrderViolation,
                "step parameters need a1 < a0 and b0 < b1 (got a0=" + a0.str() + " a1=" +
                    a1.str() + " b0=" + b0.str() + " b1=" + b1.str() + ")");
  if (!sum_within_one(a0, b0) || !sum_within_one(a1, b1))
    throw Error(Errc::SumExceedsOne, "step parameter pair sums above 1");
  Ifs out{i.carrier, {}, {}};
  for (size_t k = 0; k < i.bits.size(); ++k) {
    out.mu.push_back(i.bits[k] ? a0 : a1);
    out.nu.push_back(i.bits[k] ? b0 : b1);
  }
  return out;
}

bool ifs_nonempty(const Ifs& a) {
  for (int i = 0; i < a.size(); ++i)
    if (Degree::zero() < a.mu[i] || a.nu[i] < Degree::one()) return true;
  return false;
}

std::vector<Degree> degree_images(const Ifs& a) {
  std::vector<Degree> vals = a.mu;
  vals.insert(vals.end(), a.nu.begin(), a.nu.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::vector<Degree> degree_images_common(const Ifs& a) {
  std::vector<Degree> mu = a.mu, nu = a.nu;
  std::sort(mu.begin(), mu.end());
  std::sort(nu.begin(), nu.end());
  std::vector<Degree> out;
  std::set_intersection(mu.begin(), mu.end(), nu.begin(), nu.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gfz
