#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "paracon/carrier.hpp"
#include "paracon/poset.hpp"
#include "paracon/verdict.hpp"

namespace paracon {

// Total map from premise sets to consequence sets, indexed by subset mask.
class ConsequenceMap {
 public:
  ConsequenceMap(CarrierPtr carrier, std::vector<Mask> table)
      : carrier_(std::move(carrier)), table_(std::move(table)) {
    if (!carrier_) throw std::invalid_argument("consequence map: null carrier");
    if (carrier_->size() > kDefaultEnumerationLimit)
      throw std::invalid_argument("consequence map: carrier exceeds the enumeration limit of " +
                                  std::to_string(kDefaultEnumerationLimit));
    if (table_.size() != (std::size_t{1} << carrier_->size()))
      throw std::invalid_argument("consequence map: table must cover all 2^n premise sets");
    for (Mask row : table_)
      if (row & ~carrier_->full())
        throw std::domain_error("consequence map: consequence outside the carrier");
  }

  const Carrier& carrier() const { return *carrier_; }
  CarrierPtr carrier_ptr() const { return carrier_; }
  std::size_t subsets() const { return table_.size(); }

  Mask consequences(Mask gamma) const {
    if (gamma & ~carrier_->full())
      throw std::domain_error("consequence map: premise set outside the carrier");
    return table_[gamma];
  }

  const std::vector<Mask>& table() const { return table_; }

  bool operator==(const ConsequenceMap& o) const {
    return *carrier_ == *o.carrier_ && table_ == o.table_;
  }

 private:
  CarrierPtr carrier_;
  std::vector<Mask> table_;
};

// A queryable consequence relation over a finite carrier. All implementations
// here are immutable after construction and answer membership queries
// exactly; trivialization is therefore decidable for every provider below.
class ConsequenceProvider {
 public:
  virtual ~ConsequenceProvider() = default;

  const Carrier& carrier() const { return *carrier_; }
  CarrierPtr carrier_ptr() const { return carrier_; }

  virtual Mask consequences(Mask gamma) const = 0;
  virtual std::string kind() const = 0;
  virtual bool exact_trivialization() const { return true; }

  bool entails(Mask gamma, std::size_t alpha) const {
    if (alpha >= carrier_->size()) throw std::domain_error("entails: element outside the carrier");
    return (consequences(gamma) >> alpha) & 1;
  }

  bool trivializes(Mask gamma) const { return consequences(gamma) == carrier_->full(); }

  Verdict is_trivializing(Mask gamma) const {
    Mask c = consequences(gamma);
    if (c == carrier_->full())
      return make_holds(SubsetWitness{gamma, std::nullopt}, "consequences cover the carrier");
    std::size_t missing = mask_first(~c & carrier_->full());
    return make_fails(SubsetWitness{gamma, missing},
                      "'" + carrier_->name(missing) + "' is not a consequence");
  }

  ConsequenceMap materialize(std::size_t limit = kDefaultEnumerationLimit) const {
    if (carrier_->size() > limit)
      throw std::domain_error("materialize: carrier exceeds the enumeration limit");
    std::vector<Mask> table(std::size_t{1} << carrier_->size());
    for (Mask g = 0; g < table.size(); ++g) table[g] = consequences(g);
    return ConsequenceMap(carrier_, std::move(table));
  }

 protected:
  explicit ConsequenceProvider(CarrierPtr carrier) : carrier_(std::move(carrier)) {
    if (!carrier_) throw std::invalid_argument("consequence provider: null carrier");
  }

  void check_premises(Mask gamma) const {
    if (gamma & ~carrier_->full())
      throw std::domain_error("consequences: premise set outside the carrier");
  }

  CarrierPtr carrier_;
};

using ProviderPtr = std::shared_ptr<const ConsequenceProvider>;

class ExplicitConsequence final : public ConsequenceProvider {
 public:
  explicit ExplicitConsequence(ConsequenceMap map)
      : ConsequenceProvider(map.carrier_ptr()), map_(std::move(map)) {}

  Mask consequences(Mask gamma) const override { return map_.consequences(gamma); }
  std::string kind() const override { return "explicit"; }
  const ConsequenceMap& map() const { return map_; }

 private:
  ConsequenceMap map_;
};

// Γ ⊢ α iff α ∈ Γ. No theorems: C(∅) = ∅.
class PurelyReflexiveConsequence final : public ConsequenceProvider {
 public:
  explicit PurelyReflexiveConsequence(CarrierPtr carrier)
      : ConsequenceProvider(std::move(carrier)) {}

  Mask consequences(Mask gamma) const override {
    check_premises(gamma);
    return gamma;
  }
  std::string kind() const override { return "purely-reflexive"; }
};

enum class PosetRule { up, down };

// Up rule: Γ ⊢ α iff γ ≤ α for every γ ∈ Γ (consequences are upper bounds).
// Down rule: Γ ⊢ α iff α ≤ γ for every γ ∈ Γ.
class PosetConsequence final : public ConsequenceProvider {
 public:
  PosetConsequence(Poset poset, PosetRule rule)
      : ConsequenceProvider(poset.carrier_ptr()), poset_(std::move(poset)), rule_(rule) {}

  Mask consequences(Mask gamma) const override {
    check_premises(gamma);
    return rule_ == PosetRule::up ? poset_.upper_bounds(gamma) : poset_.lower_bounds(gamma);
  }
  std::string kind() const override { return rule_ == PosetRule::up ? "poset" : "poset-dual"; }
  const Poset& poset() const { return poset_; }
  PosetRule rule() const { return rule_; }

 private:
  Poset poset_;
  PosetRule rule_;
};

// Family of valuations into a poset. Γ ⊨ α iff v(β) ≤ v(α) for every
// valuation v and every β ∈ Γ. An empty Γ makes every α a theorem.
class ValuationOrderConsequence final : public ConsequenceProvider {
 public:
  ValuationOrderConsequence(CarrierPtr domain, Poset codomain,
                            std::vector<std::vector<std::size_t>> valuations)
      : ConsequenceProvider(std::move(domain)),
        codomain_(std::move(codomain)),
        valuations_(std::move(valuations)) {
    for (const auto& v : valuations_) {
      if (v.size() != carrier_->size())
        throw std::invalid_argument("valuation-order: valuation is not total on the domain");
      for (std::size_t img : v)
        if (img >= codomain_.carrier().size())
          throw std::domain_error("valuation-order: image outside the codomain poset");
    }
  }

  Mask consequences(Mask gamma) const override {
    check_premises(gamma);
    Mask out = 0;
    for (std::size_t a = 0; a < carrier_->size(); ++a) {
      bool ok = true;
      for (const auto& v : valuations_) {
        for (std::size_t b = 0; b < carrier_->size() && ok; ++b)
          if ((gamma >> b) & 1 && !codomain_.leq(v[b], v[a])) ok = false;
        if (!ok) break;
      }
      if (ok) out |= Mask{1} << a;
    }
    return out;
  }
  std::string kind() const override { return "valuation-order"; }
  const Poset& codomain() const { return codomain_; }
  const std::vector<std::vector<std::size_t>>& valuations() const { return valuations_; }

 private:
  Poset codomain_;
  std::vector<std::vector<std::size_t>> valuations_;
};

// Validates the two operator laws and rejects violations, reporting the
// offending premise set(s): monotonicity, and W(Γ ∪ W(Γ)) = W(Γ).
class QConsequence final : public ConsequenceProvider {
 public:
  explicit QConsequence(ConsequenceMap w)
      : ConsequenceProvider(w.carrier_ptr()), w_(std::move(w)) {
    const Mask full = carrier_->full();
    for (Mask g = 0; g <= full; ++g) {
      for (Mask s = g;; s = (s + 1) | g) {
        if (w_.consequences(g) & ~w_.consequences(s))
          throw std::invalid_argument("q-consequence: monotonicity fails between " +
                                      format_mask(*carrier_, g) + " and " +
                                      format_mask(*carrier_, s));
        if (s == full) break;
      }
      Mask closed = g | w_.consequences(g);
      if (w_.consequences(closed) != w_.consequences(g))
        throw std::invalid_argument("q-consequence: weak idempotence fails at " +
                                    format_mask(*carrier_, g));
    }
  }

  Mask consequences(Mask gamma) const override { return w_.consequences(gamma); }
  std::string kind() const override { return "q-consequence"; }
  const ConsequenceMap& w() const { return w_; }

 private:
  ConsequenceMap w_;
};

inline ProviderPtr explicit_consequence(ConsequenceMap map) {
  return std::make_shared<ExplicitConsequence>(std::move(map));
}
inline ProviderPtr purely_reflexive(CarrierPtr carrier) {
  return std::make_shared<PurelyReflexiveConsequence>(std::move(carrier));
}
inline ProviderPtr poset_consequence(Poset poset, PosetRule rule) {
  return std::make_shared<PosetConsequence>(std::move(poset), rule);
}
inline ProviderPtr valuation_order_consequence(CarrierPtr domain, Poset codomain,
                                               std::vector<std::vector<std::size_t>> valuations) {
  return std::make_shared<ValuationOrderConsequence>(std::move(domain), std::move(codomain),
                                                     std::move(valuations));
}
inline ProviderPtr q_consequence_provider(ConsequenceMap w) {
  return std::make_shared<QConsequence>(std::move(w));
}

// ---- Tarskian checks -----------------------------------------------------
// All three enumerate every premise set, so they require a carrier within the
// enumeration limit. Witnesses are deterministic: lowest premise mask first,
// then lowest inner choice.

namespace detail {
inline void require_enumerable(const ConsequenceProvider& p, const char* what) {
  if (p.carrier().size() > kDefaultEnumerationLimit)
    throw std::domain_error(std::string(what) + ": carrier exceeds the enumeration limit");
}
}  // namespace detail

// Γ ⊆ C(Γ) for all Γ.
inline Verdict check_reflexivity(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "check_reflexivity");
  const Mask full = p.carrier().full();
  for (Mask g = 0; g <= full; ++g) {
    Mask missing = g & ~p.consequences(g);
    if (missing)
      return make_fails(SubsetWitness{g, mask_first(missing)},
                        format_mask(p.carrier(), g) + " does not entail its member '" +
                            p.carrier().name(mask_first(missing)) + "'");
    if (g == full) break;
  }
  return make_holds(NoCertificate{}, "gamma subset of C(gamma) for all premise sets");
}

// Γ ⊆ Σ implies C(Γ) ⊆ C(Σ).
inline Verdict check_monotonicity(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "check_monotonicity");
  const Mask full = p.carrier().full();
  for (Mask g = 0; g <= full; ++g) {
    Mask cg = p.consequences(g);
    for (Mask s = g;; s = (s + 1) | g) {
      Mask lost = cg & ~p.consequences(s);
      if (lost)
        return make_fails(SubsetPair{g, s, mask_first(lost)},
                          "'" + p.carrier().name(mask_first(lost)) + "' follows from " +
                              format_mask(p.carrier(), g) + " but not from the superset " +
                              format_mask(p.carrier(), s));
      if (s == full) break;
    }
    if (g == full) break;
  }
  return make_holds(NoCertificate{}, "consequences grow with the premise set");
}

// Cut: Δ ⊆ C(Γ) implies C(Γ ∪ Δ) ⊆ C(Γ).
inline Verdict check_transitivity(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "check_transitivity");
  const Mask full = p.carrier().full();
  for (Mask g = 0; g <= full; ++g) {
    Mask cg = p.consequences(g);
    for (Mask d = cg;; d = (d - 1) & cg) {
      Mask escaped = p.consequences(g | d) & ~cg;
      if (escaped)
        return make_fails(CutWitness{g, d, mask_first(escaped)},
                          "adjoining derivable " + format_mask(p.carrier(), d) + " to " +
                              format_mask(p.carrier(), g) + " newly yields '" +
                              p.carrier().name(mask_first(escaped)) + "'");
      if (d == 0) break;
    }
    if (g == full) break;
  }
  return make_holds(NoCertificate{}, "derivable premises add no consequences");
}

// Set-level cut: Δ ⊆ C(Γ) implies C(Δ) ⊆ C(Γ). Derivable from monotonicity
// plus cut; strictly stronger than cut alone on non-monotone maps. Used as
// the hypothesis gate for composition-style theorem checks.
inline Verdict check_cut_for_sets(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "check_cut_for_sets");
  const Mask full = p.carrier().full();
  for (Mask g = 0; g <= full; ++g) {
    Mask cg = p.consequences(g);
    for (Mask d = cg;; d = (d - 1) & cg) {
      Mask escaped = p.consequences(d) & ~cg;
      if (escaped)
        return make_fails(CutWitness{g, d, mask_first(escaped)},
                          "derivable set " + format_mask(p.carrier(), d) + " proves '" +
                              p.carrier().name(mask_first(escaped)) + "' which " +
                              format_mask(p.carrier(), g) + " does not");
      if (d == 0) break;
    }
    if (g == full) break;
  }
  return make_holds(NoCertificate{}, "consequence composes through derivable sets");
}

inline bool is_tarskian(const ConsequenceProvider& p) {
  return check_reflexivity(p).holds() && check_monotonicity(p).holds() &&
         check_transitivity(p).holds();
}

}  // namespace paracon
