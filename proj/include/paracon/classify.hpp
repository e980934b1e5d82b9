#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paracon/consequence.hpp"
#include "paracon/matrix.hpp"
#include "paracon/verdict.hpp"

namespace paracon {

// Total unary map on a carrier, used as an element-level negation.
class ElementUnaryMap {
 public:
  ElementUnaryMap(CarrierPtr carrier, std::vector<std::size_t> map)
      : carrier_(std::move(carrier)), map_(std::move(map)) {
    if (!carrier_) throw std::invalid_argument("unary map: null carrier");
    if (map_.size() != carrier_->size())
      throw std::invalid_argument("unary map: must be total on the carrier");
    for (std::size_t v : map_)
      if (v >= carrier_->size()) throw std::domain_error("unary map: image outside the carrier");
  }

  const Carrier& carrier() const { return *carrier_; }
  std::size_t apply(std::size_t a) const { return map_.at(a); }
  const std::vector<std::size_t>& table() const { return map_; }

 private:
  CarrierPtr carrier_;
  std::vector<std::size_t> map_;
};

// Total binary map on a carrier, flattened little-endian (entry (a, b) at
// index a + n*b), used as an element-level conjunction-like fusion.
class ElementBinaryMap {
 public:
  ElementBinaryMap(CarrierPtr carrier, std::vector<std::size_t> map)
      : carrier_(std::move(carrier)), map_(std::move(map)) {
    if (!carrier_) throw std::invalid_argument("binary map: null carrier");
    if (map_.size() != carrier_->size() * carrier_->size())
      throw std::invalid_argument("binary map: must be total on the carrier");
    for (std::size_t v : map_)
      if (v >= carrier_->size()) throw std::domain_error("binary map: image outside the carrier");
  }

  const Carrier& carrier() const { return *carrier_; }
  std::size_t apply(std::size_t a, std::size_t b) const {
    return map_.at(a + carrier_->size() * b);
  }
  const std::vector<std::size_t>& table() const { return map_; }

  bool commutative() const {
    for (std::size_t a = 0; a < carrier_->size(); ++a)
      for (std::size_t b = a + 1; b < carrier_->size(); ++b)
        if (apply(a, b) != apply(b, a)) return false;
    return true;
  }

 private:
  CarrierPtr carrier_;
  std::vector<std::size_t> map_;
};

using NegationMap = ElementUnaryMap;
using FusionMap = ElementBinaryMap;

namespace detail {
inline Mask single(std::size_t a) { return Mask{1} << a; }
}  // namespace detail

// Explosion partners of a: every b such that {a, b} yields the whole
// language.
inline Mask element_qn(const ConsequenceProvider& p, std::size_t a) {
  detail::require_enumerable(p, "element_qn");
  Mask out = 0;
  for (std::size_t b = 0; b < p.carrier().size(); ++b)
    if (p.trivializes(detail::single(a) | detail::single(b))) out |= detail::single(b);
  return out;
}

inline std::optional<std::size_t> find_trivializing_singleton(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "find_trivializing_singleton");
  for (std::size_t a = 0; a < p.carrier().size(); ++a)
    if (p.trivializes(detail::single(a))) return a;
  return std::nullopt;
}

// --- laws over an abstract consequence ------------------------------------
// The carrier doubles as the formula universe, so each scan is exhaustive
// and every verdict is exact.

// {a, not a} yields everything, for every a.
inline Verdict check_ecq(const ConsequenceProvider& p, const NegationMap& neg) {
  detail::require_enumerable(p, "check_ecq");
  for (std::size_t a = 0; a < p.carrier().size(); ++a)
    if (!p.trivializes(detail::single(a) | detail::single(neg.apply(a))))
      return make_fails(ElementWitness{a},
                        "'" + p.carrier().name(a) + "' with its negation does not explode");
  return make_holds(NoCertificate{}, "every element explodes with its negation");
}

// {fus(a, not a)} yields everything, for every a.
inline Verdict check_conj_ecq(const ConsequenceProvider& p, const NegationMap& neg,
                              const FusionMap& fus) {
  detail::require_enumerable(p, "check_conj_ecq");
  for (std::size_t a = 0; a < p.carrier().size(); ++a)
    if (!p.trivializes(detail::single(fus.apply(a, neg.apply(a)))))
      return make_fails(ElementWitness{a}, "the contradiction on '" + p.carrier().name(a) +
                                               "' does not explode");
  return make_holds(NoCertificate{}, "every fused contradiction explodes");
}

// --- paraconsistency properties over an abstract consequence --------------

inline Verdict check_bot_paraconsistency(const ConsequenceProvider& p, std::size_t bottom) {
  if (bottom >= p.carrier().size())
    throw std::domain_error("bot check: element outside the carrier");
  Verdict t = p.is_trivializing(detail::single(bottom));
  if (t.holds())
    return make_fails(t.certificate, "'" + p.carrier().name(bottom) + "' yields everything");
  return make_holds(t.certificate, "'" + p.carrier().name(bottom) + "' does not yield everything");
}

// Some a explodes with no partner at all.
inline Verdict check_nf_paraconsistency(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "check_nf_paraconsistency");
  const std::size_t n = p.carrier().size();
  std::vector<std::size_t> partner(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool safe = true;
    for (std::size_t b = 0; b < n && safe; ++b)
      if (p.trivializes(detail::single(a) | detail::single(b))) {
        partner[a] = b;
        safe = false;
      }
    if (safe)
      return make_holds(ElementWitness{a},
                        "no companion of '" + p.carrier().name(a) + "' yields everything");
  }
  return make_fails(PerElementTable{std::move(partner)},
                    "every element has an exploding companion");
}

// Some a such that no fusion fus(a, b) explodes.
inline Verdict check_nff_paraconsistency(const ConsequenceProvider& p, const FusionMap& fus) {
  detail::require_enumerable(p, "check_nff_paraconsistency");
  const std::size_t n = p.carrier().size();
  std::vector<std::size_t> partner(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool safe = true;
    for (std::size_t b = 0; b < n && safe; ++b)
      if (p.trivializes(detail::single(fus.apply(a, b)))) {
        partner[a] = b;
        safe = false;
      }
    if (safe)
      return make_holds(ElementWitness{a},
                        "no fusion with '" + p.carrier().name(a) + "' yields everything");
  }
  return make_fails(PerElementTable{std::move(partner)},
                    "every element has an exploding fusion partner");
}

// Some a that explodes with no member of K.
inline Verdict check_k_paraconsistency(const ConsequenceProvider& p, Mask k_set) {
  detail::require_enumerable(p, "check_k_paraconsistency");
  if (k_set & ~p.carrier().full())
    throw std::domain_error("k check: candidate set outside the carrier");
  if (k_set == 0) throw std::invalid_argument("k check: candidate set must be nonempty");
  const std::size_t n = p.carrier().size();
  std::vector<std::size_t> partner(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool safe = true;
    for (std::size_t b = 0; b < n && safe; ++b)
      if ((k_set >> b) & 1 && p.trivializes(detail::single(a) | detail::single(b))) {
        partner[a] = b;
        safe = false;
      }
    if (safe)
      return make_holds(ElementWitness{a}, "no member of the candidate set explodes with '" +
                                               p.carrier().name(a) + "'");
  }
  return make_fails(PerElementTable{std::move(partner)},
                    "every element explodes with some candidate");
}

// --- rule validity over an abstract consequence ---------------------------

// fus(a, b) follows from {a, b}.
inline Verdict check_fusion_intro_rule(const ConsequenceProvider& p, const FusionMap& fus) {
  detail::require_enumerable(p, "check_fusion_intro_rule");
  const std::size_t n = p.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!p.entails(detail::single(a) | detail::single(b), fus.apply(a, b)))
        return make_fails(ElementPair{a, b}, "fusion of the pair does not follow from it");
  return make_holds();
}

// Both components follow from {fus(a, b)}.
inline Verdict check_fusion_elim_rule(const ConsequenceProvider& p, const FusionMap& fus) {
  detail::require_enumerable(p, "check_fusion_elim_rule");
  const std::size_t n = p.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mask g = detail::single(fus.apply(a, b));
      if (!p.entails(g, a))
        return make_fails(ElementPair{a, b}, "left component does not follow from the fusion");
      if (!p.entails(g, b))
        return make_fails(ElementPair{a, b}, "right component does not follow from the fusion");
    }
  return make_holds();
}

// --- matrix-level laws -----------------------------------------------------
// Schematic variables range over all carrier elements because a valuation
// may send a variable anywhere, so each scan below is exact for formula
// schemata; the "fails" direction additionally needs a non-designated value
// to leak into a fresh variable.

inline bool matrix_has_implication(const Matrix& m) {
  return m.roles().implication.has_value() ||
         (m.roles().negation.has_value() && m.roles().disjunction.has_value());
}

// Implication value: a dedicated table when the matrix names one, otherwise
// the material compound not-a-or-b.
inline std::size_t matrix_impl(const Matrix& m, std::size_t a, std::size_t b) {
  if (m.roles().implication) return m.algebra().apply2(*m.roles().implication, a, b);
  if (m.roles().negation && m.roles().disjunction)
    return m.algebra().apply2(*m.roles().disjunction,
                              m.algebra().apply1(*m.roles().negation, a), b);
  throw inapplicable_error("matrix '" + m.name() + "' offers no implication");
}

inline std::size_t matrix_neg(const Matrix& m, std::size_t a) {
  if (!m.roles().negation) throw inapplicable_error("matrix '" + m.name() + "' has no negation");
  return m.algebra().apply1(*m.roles().negation, a);
}

inline std::size_t matrix_fus(const Matrix& m, std::size_t a, std::size_t b) {
  if (!m.roles().fusion) throw inapplicable_error("matrix '" + m.name() + "' has no fusion");
  return m.algebra().apply2(*m.roles().fusion, a, b);
}

// Premise pair {p, ~p} entails an unrelated variable.
inline Verdict matrix_check_ecq(const Matrix& m) {
  if (!m.designated_proper())
    return make_holds(NoCertificate{}, "all values designated, every entailment is immediate");
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    if (m.is_designated(a) && m.is_designated(matrix_neg(m, a)))
      return make_fails(ElementWitness{a}, "'" + m.carrier().name(a) +
                                               "' and its negation are jointly designated");
  return make_holds(NoCertificate{}, "no value is designated together with its negation");
}

// Single premise p & ~p entails an unrelated variable.
inline Verdict matrix_check_conj_ecq(const Matrix& m) {
  if (!m.designated_proper())
    return make_holds(NoCertificate{}, "all values designated, every entailment is immediate");
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    if (m.is_designated(matrix_fus(m, a, matrix_neg(m, a))))
      return make_fails(ElementWitness{a}, "the contradiction on '" + m.carrier().name(a) +
                                               "' is designated");
  return make_holds(NoCertificate{}, "no fused contradiction is designated");
}

// (p & ~p) -> q is a tautology.
inline Verdict matrix_check_aecq(const Matrix& m) {
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!m.is_designated(matrix_impl(m, matrix_fus(m, a, matrix_neg(m, a)), b)))
        return make_fails(ElementPair{a, b});
  return make_holds();
}

// ~p -> (p -> q) is a tautology.
inline Verdict matrix_check_aefq1(const Matrix& m) {
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!m.is_designated(matrix_impl(m, matrix_neg(m, a), matrix_impl(m, a, b))))
        return make_fails(ElementPair{a, b});
  return make_holds();
}

// p -> (~p -> q) is a tautology.
inline Verdict matrix_check_aefq2(const Matrix& m) {
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!m.is_designated(matrix_impl(m, a, matrix_impl(m, matrix_neg(m, a), b))))
        return make_fails(ElementPair{a, b});
  return make_holds();
}

// The falsum constant does not yield everything, i.e. its value is
// designated somewhere (being a constant: designated outright).
inline Verdict matrix_check_bot_paraconsistency(const Matrix& m) {
  if (!m.roles().bottom) throw inapplicable_error("matrix '" + m.name() + "' has no falsum");
  const std::size_t v = m.algebra().table(*m.roles().bottom)[0];
  if (m.is_designated(v))
    return make_holds(ElementWitness{v}, "falsum evaluates to a designated value");
  if (!m.designated_proper())
    return make_holds(ElementWitness{v}, "all values designated");
  return make_fails(ElementWitness{v}, "falsum is never designated");
}

// Rule p, q => p & q as a schema.
inline Verdict matrix_validate_fusion_intro(const Matrix& m) {
  if (!m.designated_proper())
    return make_holds(NoCertificate{}, "all values designated");
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m.is_designated(a) && m.is_designated(b) && !m.is_designated(matrix_fus(m, a, b)))
        return make_fails(ElementPair{a, b}, "designated pair with undesignated fusion");
  return make_holds(NoCertificate{}, "designated values are closed under fusion");
}

// Rules p & q => p and p & q => q as schemata.
inline Verdict matrix_validate_fusion_elim(const Matrix& m) {
  if (!m.designated_proper())
    return make_holds(NoCertificate{}, "all values designated");
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!m.is_designated(matrix_fus(m, a, b))) continue;
      if (!m.is_designated(a))
        return make_fails(ElementPair{a, b}, "designated fusion with undesignated left component");
      if (!m.is_designated(b))
        return make_fails(ElementPair{a, b},
                          "designated fusion with undesignated right component");
    }
  return make_holds(NoCertificate{}, "components of designated fusions stay designated");
}

inline Verdict matrix_fusion_commutative(const Matrix& m) {
  const std::size_t n = m.carrier().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (matrix_fus(m, a, b) != matrix_fus(m, b, a)) return make_fails(ElementPair{a, b});
  return make_holds();
}

// --- matrix-level paraconsistency properties -------------------------------

namespace detail {

inline SearchBound bound_of(const MatrixContext& ctx) {
  return SearchBound{ctx.fragment().variables(), ctx.fragment().depth(), ctx.fragment().size()};
}

inline std::optional<std::size_t> never_designated_formula(const MatrixContext& ctx) {
  for (std::size_t i = 0; i < ctx.fragment().size(); ++i)
    if (ctx.designated_rows(i).none()) return i;
  return std::nullopt;
}

}  // namespace detail

// Some formula that explodes with no partner whatsoever. A designated value
// fixed by the whole signature settles "holds"; a formula no valuation
// designates settles "fails" (it explodes with everything); otherwise the
// fragment was not decisive.
inline Verdict matrix_check_nf(const MatrixContext& ctx) {
  const Matrix& m = ctx.matrix();
  if (!m.designated_proper())
    return make_fails(NoCertificate{},
                      "all values designated, every premise set yields everything");
  const bool has_constants = m.signature().has_constant();
  if (!has_constants) {
    for (std::size_t e : diagonal_fixpoints(m.algebra()))
      if (m.is_designated(e))
        return make_holds(FixpointCertificate{e},
                          "the constant valuation at '" + m.carrier().name(e) +
                              "' designates every formula");
  } else {
    Mask ground = ground_closure(m.algebra());
    if ((ground & ~m.designated()) == 0)
      for (std::size_t e : infectious_elements(m.algebra()))
        if (m.is_designated(e))
          return make_holds(
              InfectiousCertificate{e},
              "'" + m.carrier().name(e) +
                  "' infects every open formula and ground values stay designated");
  }
  if (auto bad = detail::never_designated_formula(ctx))
    return make_fails(FormulaWitness{print_formula(m.signature(), ctx.fragment().at(*bad)), "", {}},
                      "never designated, so it explodes with every partner");
  return make_unknown(detail::bound_of(ctx), "no certificate within the searched fragment");
}

// Some formula whose fusions never explode. A designated value absorbing
// fusion from the left settles "holds" with a bare variable as witness; a
// formula whose value always kills fusion designation settles "fails".
inline Verdict matrix_check_nff(const MatrixContext& ctx) {
  const Matrix& m = ctx.matrix();
  if (!m.roles().fusion) throw inapplicable_error("matrix '" + m.name() + "' has no fusion");
  if (!m.designated_proper())
    return make_fails(NoCertificate{},
                      "all values designated, every premise set yields everything");
  const std::size_t n = m.carrier().size();
  for (std::size_t e = 0; e < n; ++e) {
    if (!m.is_designated(e)) continue;
    bool absorbs = true;
    for (std::size_t x = 0; x < n && absorbs; ++x)
      if (matrix_fus(m, e, x) != e) absorbs = false;
    if (absorbs)
      return make_holds(InfectiousCertificate{e},
                        "'" + m.carrier().name(e) +
                            "' is designated and absorbs fusion from the left; witness " +
                            variable_name(0));
  }
  Mask bad = 0;
  for (std::size_t b = 0; b < n; ++b) {
    bool kills = true;
    for (std::size_t a = 0; a < n && kills; ++a)
      if (m.is_designated(matrix_fus(m, a, b))) kills = false;
    if (kills) bad |= Mask{1} << b;
  }
  if (bad != 0)
    for (std::size_t i = 0; i < ctx.fragment().size(); ++i) {
      bool all_bad = true;
      const auto& row = ctx.values(i);
      for (std::size_t v = 0; v < ctx.valuation_count() && all_bad; ++v)
        if (((bad >> row[v]) & 1) == 0) all_bad = false;
      if (all_bad)
        return make_fails(
            FormulaWitness{print_formula(m.signature(), ctx.fragment().at(i)), "", {}},
            "as right fusion argument it is never designated, so every fusion with it explodes");
    }
  return make_unknown(detail::bound_of(ctx), "no certificate within the searched fragment");
}

// Some fragment formula that explodes with no member of the candidate list.
inline Verdict matrix_check_k(const MatrixContext& ctx, const std::vector<std::size_t>& k_set) {
  const Matrix& m = ctx.matrix();
  if (k_set.empty()) throw std::invalid_argument("k check: candidate set must be nonempty");
  if (!m.designated_proper())
    return make_fails(NoCertificate{},
                      "all values designated, every premise set yields everything");
  for (std::size_t b : k_set)
    if (ctx.designated_rows(b).none())
      return make_fails(
          FormulaWitness{print_formula(m.signature(), ctx.fragment().at(b)), "", {}},
          "candidate is never designated, so it explodes with everything");
  for (std::size_t a = 0; a < ctx.fragment().size(); ++a) {
    bool safe = true;
    for (std::size_t b : k_set) {
      Bitvec both = ctx.designated_rows(a);
      both &= ctx.designated_rows(b);
      if (both.none()) {
        safe = false;
        break;
      }
    }
    if (safe)
      return make_holds(
          FormulaWitness{print_formula(m.signature(), ctx.fragment().at(a)), "", {}},
          "jointly designatable with every candidate");
  }
  return make_unknown(detail::bound_of(ctx), "no witness within the searched fragment");
}

// --- structural theorems ----------------------------------------------------
// Each row records which hypotheses gate the statement, whether they are met
// here, and how the antecedent/consequent came out. A row only ever reports
// "fails" when its gates are met and the implication itself is violated.

struct TheoremCheck {
  std::string name;
  std::vector<std::string> gates;
  std::vector<std::string> unmet;
  Status antecedent = Status::unknown;
  Status consequent = Status::unknown;
  Status outcome = Status::unknown;
  std::string note;
};

namespace detail {

inline TheoremCheck implication_row(std::string name, std::vector<std::string> gates,
                                    std::vector<std::string> unmet, bool antecedent,
                                    bool consequent) {
  TheoremCheck row;
  row.name = std::move(name);
  row.gates = std::move(gates);
  row.unmet = std::move(unmet);
  if (!row.unmet.empty()) {
    row.outcome = Status::unknown;
    row.note = "hypotheses not met, statement not asserted here";
    return row;
  }
  row.antecedent = antecedent ? Status::holds : Status::fails;
  row.consequent = consequent ? Status::holds : Status::fails;
  if (!antecedent) {
    row.outcome = Status::holds;
    row.note = "vacuous, antecedent fails";
  } else if (consequent) {
    row.outcome = Status::holds;
  } else {
    row.outcome = Status::fails;
    row.note = "counterexample: antecedent holds, consequent fails";
  }
  return row;
}

}  // namespace detail

// Runs every structural statement that makes sense for the given structure
// and optional element-level connectives.
inline std::vector<TheoremCheck> theorem_suite(const ConsequenceProvider& p,
                                               const std::optional<NegationMap>& neg = {},
                                               const std::optional<FusionMap>& fus = {}) {
  detail::require_enumerable(p, "theorem_suite");
  std::vector<TheoremCheck> rows;
  const std::size_t n = p.carrier().size();

  const Verdict nf = check_nf_paraconsistency(p);
  const bool cut_sets = check_cut_for_sets(p).holds();
  const bool monotone = check_monotonicity(p).holds();

  // A counter-free language cannot explode anywhere, so no negation ever
  // turns it explosive: verified against the supplied negation, or against
  // every possible companion when none is supplied.
  {
    TheoremCheck row;
    row.name = "nf-implies-negation-paraconsistent";
    if (nf.holds()) {
      bool ok = true;
      const std::size_t w = std::get<ElementWitness>(nf.certificate).element;
      if (neg) {
        ok = !p.trivializes(detail::single(w) | detail::single(neg->apply(w)));
        row.note = "checked against the supplied negation";
      } else {
        for (std::size_t b = 0; b < n && ok; ++b)
          ok = !p.trivializes(detail::single(w) | detail::single(b));
        row.note = "checked against every unary negation via the witness element";
      }
      row.antecedent = Status::holds;
      row.consequent = ok ? Status::holds : Status::fails;
      row.outcome = ok ? Status::holds : Status::fails;
    } else {
      row.antecedent = Status::fails;
      row.outcome = Status::holds;
      row.note = "vacuous, antecedent fails";
    }
    rows.push_back(std::move(row));
  }

  {
    const bool singleton = find_trivializing_singleton(p).has_value();
    rows.push_back(detail::implication_row(
        "monotone-exploding-singleton-excludes-nf", {"monotonicity"},
        monotone ? std::vector<std::string>{} : std::vector<std::string>{"monotonicity"},
        singleton, nf.fails()));
  }

  if (fus) {
    const bool intro = check_fusion_intro_rule(p, *fus).holds();
    const bool elim = check_fusion_elim_rule(p, *fus).holds();
    const Verdict nff = check_nff_paraconsistency(p, *fus);

    {
      std::vector<std::string> unmet;
      if (!cut_sets) unmet.push_back("cut-for-sets");
      if (!intro) unmet.push_back("fusion-intro");
      rows.push_back(detail::implication_row("fusion-intro-lifts-nf-to-nff",
                                             {"cut-for-sets", "fusion-intro"}, std::move(unmet),
                                             nf.holds(), nff.holds()));
    }
    {
      std::vector<std::string> unmet;
      if (!cut_sets) unmet.push_back("cut-for-sets");
      if (!elim) unmet.push_back("fusion-elim");
      rows.push_back(detail::implication_row("fusion-elim-lifts-nff-to-nf",
                                             {"cut-for-sets", "fusion-elim"}, std::move(unmet),
                                             nff.holds(), nf.holds()));
    }
    if (neg) {
      TheoremCheck row;
      row.name = "ecq-agrees-with-conj-ecq";
      row.gates = {"cut-for-sets", "fusion-intro", "fusion-elim"};
      if (!cut_sets) row.unmet.push_back("cut-for-sets");
      if (!intro) row.unmet.push_back("fusion-intro");
      if (!elim) row.unmet.push_back("fusion-elim");
      const Verdict ecq = check_ecq(p, *neg);
      const Verdict cecq = check_conj_ecq(p, *neg, *fus);
      row.antecedent = ecq.status;
      row.consequent = cecq.status;
      if (!row.unmet.empty()) {
        row.outcome = Status::unknown;
        row.note = "hypotheses not met, statement not asserted here";
      } else if (ecq.status == cecq.status) {
        row.outcome = Status::holds;
      } else {
        row.outcome = Status::fails;
        row.note = "counterexample: the two explosion laws disagree";
      }
      rows.push_back(std::move(row));
    }
  }

  // Explosion partnership does not depend on the order of the pair.
  {
    TheoremCheck row;
    row.name = "qn-symmetry";
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      Mask qa = element_qn(p, a);
      for (std::size_t b = 0; b < n && ok; ++b)
        if (((qa >> b) & 1) != ((element_qn(p, b) >> a) & 1)) ok = false;
    }
    row.antecedent = row.consequent = ok ? Status::holds : Status::fails;
    row.outcome = row.antecedent;
    rows.push_back(std::move(row));
  }

  {
    bool some_empty = false;
    for (std::size_t a = 0; a < n && !some_empty; ++a)
      if (element_qn(p, a) == 0) some_empty = true;
    TheoremCheck row;
    row.name = "empty-qn-iff-nf";
    row.antecedent = some_empty ? Status::holds : Status::fails;
    row.consequent = nf.status;
    row.outcome = (some_empty == nf.holds()) ? Status::holds : Status::fails;
    if (row.outcome == Status::fails)
      row.note = "counterexample: emptiness of explosion partners disagrees with nf";
    rows.push_back(std::move(row));
  }

  if (p.kind() == "q-consequence") {
    const bool gap = p.consequences(p.carrier().full()) != p.carrier().full();
    rows.push_back(
        detail::implication_row("q-gap-implies-nf", {"q-consequence"}, {}, gap, nf.holds()));
  }

  if (const auto* vo = dynamic_cast<const ValuationOrderConsequence*>(&p)) {
    bool incomparable = false;
    for (const auto& v : vo->valuations())
      for (std::size_t a = 0; a < n && !incomparable; ++a)
        for (std::size_t b = 0; b < n && !incomparable; ++b)
          if (!vo->codomain().comparable(v[a], v[b])) incomparable = true;
    rows.push_back(detail::implication_row("incomparable-values-imply-nf", {"valuation-order"},
                                           {}, incomparable, nf.holds()));
  }

  return rows;
}

}  // namespace paracon
