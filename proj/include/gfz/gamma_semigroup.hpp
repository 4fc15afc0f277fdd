#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gfz/carrier.hpp"

namespace gfz {

// Raw table data handed to build(). Tables are flat, indexed as
// sgs[(a*|G| + g)*|S| + b] and gsg[(g*|S| + a)*|G| + h]; -1 marks a missing
// entry.
struct GsgTables {
  std::vector<std::string> carrier;
  std::vector<std::string> gamma;
  std::vector<int> sgs;
  std::vector<int> gsg;
  std::optional<std::string> zero;
};

class GammaSemigroup;
using GsgPtr = std::shared_ptr<const GammaSemigroup>;

// Finite both-sided Gamma-semigroup. Immutable after build(); the
// factorization index is created once on first use and read-only afterward,
// so instances are safe for concurrent reads.
class GammaSemigroup {
 public:
  // Validates totality, both associative laws over every tuple, and the
  // absorbing property of the zero element when one is designated.
  static GsgPtr build(const GsgTables& tables);

  const CarrierPtr& carrier() const { return carrier_; }
  int size() const { return carrier_->size(); }
  int gamma_size() const { return static_cast<int>(gamma_.size()); }

  const std::string& id(int i) const { return carrier_->ids[i]; }
  const std::string& gamma_id(int g) const { return gamma_[g]; }
  int element(std::string_view id) const { return carrier_->at(id); }
  int gamma_element(std::string_view id) const;

  int sgs(int a, int g, int b) const { return sgs_[(a * gamma_.size() + g) * carrier_->size() + b]; }
  int gsg(int g, int a, int h) const { return gsg_[(g * carrier_->size() + a) * gamma_.size() + h]; }

  bool has_zero() const { return zero_ >= 0; }
  int zero() const { return zero_; }

  // Factorizations (u, g, v) with u g v = x, grouped per x.
  const std::vector<std::vector<std::tuple<int, int, int>>>& factorizations() const;

 private:
  GammaSemigroup() = default;

  CarrierPtr carrier_;
  std::vector<std::string> gamma_;
  std::map<std::string, int, std::less<>> gamma_index_;
  std::vector<int> sgs_;
  std::vector<int> gsg_;
  int zero_ = -1;

  mutable std::once_flag fact_once_;
  mutable std::vector<std::vector<std::tuple<int, int, int>>> fact_;
};

int op_sgs(const GammaSemigroup& g, int a, int gamma, int b);
int op_gsg(const GammaSemigroup& g, int gamma, int a, int beta);

bool is_commutative(const GammaSemigroup& g);

struct RegularityWitness {
  int x = -1, g1 = -1, g2 = -1;
};

struct RegularityResult {
  bool regular = false;
  // Witness per carrier element when regular; first element with no witness
  // otherwise.
  std::vector<RegularityWitness> witnesses;
  int failing = -1;
};

RegularityResult is_regular(const GammaSemigroup& g);

// (x a)^n x with the n = 0 convention giving back x.
int power_element(const GammaSemigroup& g, int x, int alpha, int n);

// Carrier Z_n with both tables the mod-n product of the three arguments.
// gamma_subset must be closed under (a, s, b) -> a*s*b mod n, otherwise the
// gamma table would not be total into gamma and InvalidParameters is raised.
GsgPtr make_modular(int n, const std::vector<int>& gamma_subset);

}  // namespace gfz
