#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paracon/carrier.hpp"

namespace paracon {

// Partial order over a carrier. Construction validates the axioms eagerly and
// rejects invalid input; it never repairs (no implicit reflexive or
// transitive closure).
class Poset {
 public:
  Poset(CarrierPtr carrier, const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs)
      : carrier_(std::move(carrier)) {
    if (!carrier_) throw std::invalid_argument("poset: null carrier");
    const std::size_t n = carrier_->size();
    up_.assign(n, 0);
    down_.assign(n, 0);
    for (auto [a, b] : leq_pairs) {
      if (a >= n || b >= n) throw std::domain_error("poset: pair element outside carrier");
      up_[a] |= Mask{1} << b;
      down_[b] |= Mask{1} << a;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!leq(i, i))
        throw std::invalid_argument("poset: not reflexive, missing " + carrier_->name(i) +
                                    " <= " + carrier_->name(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq(i, j) && leq(j, i))
          throw std::invalid_argument("poset: antisymmetry fails on " + carrier_->name(i) + ", " +
                                      carrier_->name(j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j) && (up_[j] & ~up_[i]))
          throw std::invalid_argument("poset: transitivity fails above " + carrier_->name(i) +
                                      " <= " + carrier_->name(j));
  }

  static Poset from_names(CarrierPtr carrier,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    idx.reserve(pairs.size());
    for (const auto& [a, b] : pairs) idx.emplace_back(carrier->require(a), carrier->require(b));
    return Poset(std::move(carrier), idx);
  }

  const Carrier& carrier() const { return *carrier_; }
  CarrierPtr carrier_ptr() const { return carrier_; }

  bool leq(std::size_t a, std::size_t b) const { return (up_[a] >> b) & 1; }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  // {α : γ ≤ α for every γ ∈ gamma}; the full carrier when gamma is empty.
  Mask upper_bounds(Mask gamma) const { return bounds(gamma, up_); }
  // {α : α ≤ γ for every γ ∈ gamma}.
  Mask lower_bounds(Mask gamma) const { return bounds(gamma, down_); }

 private:
  Mask bounds(Mask gamma, const std::vector<Mask>& dir) const {
    Mask acc = carrier_->full();
    for (std::size_t i = 0; i < carrier_->size(); ++i)
      if ((gamma >> i) & 1) acc &= dir[i];
    return acc;
  }

  CarrierPtr carrier_;
  std::vector<Mask> up_;    // up_[i] = {j : i ≤ j}
  std::vector<Mask> down_;  // down_[i] = {j : j ≤ i}
};

}  // namespace paracon
