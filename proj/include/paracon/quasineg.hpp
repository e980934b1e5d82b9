#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracon/classify.hpp"

namespace paracon {

// --- element level ----------------------------------------------------------

inline std::vector<Mask> qn_table(const ConsequenceProvider& p) {
  detail::require_enumerable(p, "qn_table");
  std::vector<Mask> out(p.carrier().size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = element_qn(p, a);
  return out;
}

struct QnLinks {
  std::vector<Mask> table;
  std::optional<std::size_t> empty_at;  // witness with no explosion partner
  bool symmetric = false;
  Verdict nf;
  bool empty_iff_nf = false;
};

// The explosion-partner table, its symmetry, and its tie to the existence of
// a formula with no exploding companion.
inline QnLinks qn_paraconsistency_links(const ConsequenceProvider& p) {
  QnLinks links;
  links.table = qn_table(p);
  const std::size_t n = p.carrier().size();
  for (std::size_t a = 0; a < n && !links.empty_at; ++a)
    if (links.table[a] == 0) links.empty_at = a;
  links.symmetric = true;
  for (std::size_t a = 0; a < n && links.symmetric; ++a)
    for (std::size_t b = 0; b < n && links.symmetric; ++b)
      if (((links.table[a] >> b) & 1) != ((links.table[b] >> a) & 1)) links.symmetric = false;
  links.nf = check_nf_paraconsistency(p);
  links.empty_iff_nf = links.empty_at.has_value() == links.nf.holds();
  return links;
}

// --- formula level ----------------------------------------------------------

// Fragment members that are never designated together with the given
// designation row.
inline Bitvec formula_qn_of_row(const MatrixContext& ctx, const Bitvec& des_row) {
  Bitvec out(ctx.fragment().size());
  for (std::size_t w = 0; w < ctx.fragment().size(); ++w)
    if (!des_row.intersects(ctx.designated_rows(w))) out.set(w);
  return out;
}

inline Bitvec formula_qn(const MatrixContext& ctx, std::size_t formula) {
  if (!ctx.matrix().designated_proper())
    throw inapplicable_error("explosion partners need a non-designated value");
  return formula_qn_of_row(ctx, ctx.designated_rows(formula));
}

// Entailment between formulas gets reversed on explosion-partner sets.
inline Verdict check_qn_antitone(const MatrixContext& ctx) {
  if (!ctx.matrix().designated_proper())
    throw inapplicable_error("explosion partners need a non-designated value");
  const std::size_t f = ctx.fragment().size();
  std::vector<Bitvec> qn;
  qn.reserve(f);
  for (std::size_t i = 0; i < f; ++i) qn.push_back(formula_qn(ctx, i));
  const Signature& sig = ctx.fragment().signature();
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = 0; b < f; ++b) {
      if (!ctx.designated_rows(a).subset_of(ctx.designated_rows(b))) continue;
      if (!qn[b].subset_of(qn[a]))
        return make_fails(FormulaWitness{print_formula(sig, ctx.fragment().at(a)),
                                         print_formula(sig, ctx.fragment().at(b)),
                                         {}},
                          "entailment holds but the partner sets are not reversed");
    }
  Verdict v = make_holds();
  v.bound = SearchBound{ctx.fragment().variables(), ctx.fragment().depth(), f};
  return v;
}

// Everything that explodes with a formula is refuted by it.
inline Verdict check_quasi_double_negation(const MatrixContext& ctx) {
  const Matrix& m = ctx.matrix();
  if (!m.roles().negation) throw inapplicable_error("matrix '" + m.name() + "' has no negation");
  if (!m.designated_proper())
    throw inapplicable_error("explosion partners need a non-designated value");
  const Signature& sig = ctx.fragment().signature();
  const std::size_t f = ctx.fragment().size();
  std::vector<Bitvec> neg_rows;
  neg_rows.reserve(f);
  for (std::size_t w = 0; w < f; ++w)
    neg_rows.push_back(ctx.designated_row_of(
        make_app(sig, *m.roles().negation, {ctx.fragment().at(w)})));
  for (std::size_t a = 0; a < f; ++a) {
    Bitvec qa = formula_qn(ctx, a);
    for (std::size_t w = qa.first(); w < f; ++w) {
      if (!qa.test(w)) continue;
      if (!ctx.designated_rows(a).subset_of(neg_rows[w]))
        return make_fails(FormulaWitness{print_formula(sig, ctx.fragment().at(a)),
                                         print_formula(sig, ctx.fragment().at(w)),
                                         {}},
                          "explosion partner whose negation is not entailed");
    }
  }
  Verdict v = make_holds();
  v.bound = SearchBound{ctx.fragment().variables(), ctx.fragment().depth(), f};
  return v;
}

// --- the induced negation-like connective ------------------------------------
// The explosion-partner sets induce a virtual unary connective on top of any
// matrix: its instance on a formula is designated wherever some explosion
// partner of that formula is designated, and its own partner set is what all
// those partners agree to explode with. The suite below probes the classic
// negation laws for this connective.

class VirtualNegation {
 public:
  explicit VirtualNegation(const MatrixContext& ctx) : ctx_(ctx) {
    if (!ctx.matrix().designated_proper())
      throw inapplicable_error("explosion partners need a non-designated value");
    const std::size_t f = ctx.fragment().size();
    qn_.reserve(f);
    for (std::size_t i = 0; i < f; ++i)
      qn_.push_back(formula_qn_of_row(ctx, ctx.designated_rows(i)));
    des_virt_.reserve(f);
    for (std::size_t i = 0; i < f; ++i) des_virt_.push_back(or_rows(qn_[i]));
    qn_virt_.reserve(f);
    for (std::size_t i = 0; i < f; ++i) qn_virt_.push_back(intersect_qn(qn_[i]));
    des_virt2_.reserve(f);
    for (std::size_t i = 0; i < f; ++i) des_virt2_.push_back(or_rows(qn_virt_[i]));
  }

  const MatrixContext& context() const { return ctx_; }
  const Bitvec& partners(std::size_t i) const { return qn_.at(i); }
  const Bitvec& designated_virtual(std::size_t i) const { return des_virt_.at(i); }
  const Bitvec& partners_of_virtual(std::size_t i) const { return qn_virt_.at(i); }
  const Bitvec& designated_double_virtual(std::size_t i) const { return des_virt2_.at(i); }
  bool vacuous(std::size_t i) const { return qn_.at(i).none(); }

  // Valuations where some member of the given partner set is designated.
  Bitvec or_rows(const Bitvec& members) const {
    Bitvec acc(ctx_.valuation_count());
    for (std::size_t w = 0; w < ctx_.fragment().size(); ++w)
      if (members.test(w)) acc |= ctx_.designated_rows(w);
    return acc;
  }

  // Partner sets agreed on by every member (everything, when there are none).
  Bitvec intersect_qn(const Bitvec& members) const {
    Bitvec acc(ctx_.fragment().size(), true);
    for (std::size_t w = 0; w < ctx_.fragment().size(); ++w)
      if (members.test(w)) acc &= qn_[w];
    return acc;
  }

 private:
  const MatrixContext& ctx_;
  std::vector<Bitvec> qn_;
  std::vector<Bitvec> des_virt_;
  std::vector<Bitvec> qn_virt_;
  std::vector<Bitvec> des_virt2_;
};

struct KiteProperty {
  std::string name;
  Verdict verdict;
};

struct KiteReport {
  std::vector<KiteProperty> properties;
  std::size_t vacuous_formulas = 0;  // fragment members with no partner at all
  bool all_vacuous = false;
  SearchBound bound;
};

namespace detail {

inline std::vector<std::size_t> valuation_digits(const MatrixContext& ctx, std::size_t v) {
  std::vector<std::size_t> out(ctx.fragment().variables());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.variable_value(i, v);
  return out;
}

}  // namespace detail

// The five negation laws for the induced connective, checked across the
// whole fragment. Formulas with an empty partner set satisfy everything
// vacuously; they are skipped and counted instead.
inline KiteReport kite_property_suite(const MatrixContext& ctx) {
  const Matrix& m = ctx.matrix();
  if (!m.roles().negation) throw inapplicable_error("matrix '" + m.name() + "' has no negation");
  VirtualNegation vn(ctx);
  const Signature& sig = ctx.fragment().signature();
  const std::size_t f = ctx.fragment().size();

  KiteReport report;
  report.bound = SearchBound{ctx.fragment().variables(), ctx.fragment().depth(), f};
  for (std::size_t i = 0; i < f; ++i)
    if (vn.vacuous(i)) ++report.vacuous_formulas;
  report.all_vacuous = report.vacuous_formulas == f;

  auto printed = [&](std::size_t i) { return print_formula(sig, ctx.fragment().at(i)); };
  auto skip = [&](std::size_t i) { return vn.vacuous(i); };

  // 1: entailment contraposes through the virtual connective.
  {
    Verdict v = make_holds();
    for (std::size_t a = 0; a < f && v.holds(); ++a) {
      if (skip(a)) continue;
      for (std::size_t b = 0; b < f; ++b) {
        if (skip(b)) continue;
        if (!ctx.designated_rows(a).subset_of(ctx.designated_rows(b))) continue;
        if (!vn.designated_virtual(b).subset_of(vn.designated_virtual(a))) {
          v = make_fails(FormulaWitness{printed(a), printed(b), {}},
                         "entailment does not contrapose");
          break;
        }
      }
    }
    v.bound = report.bound;
    report.properties.push_back({"contraposition", std::move(v)});
  }

  // 2: the connective pair forms a Galois connection with the real negation:
  // a formula refutes each of its partners, and it entails the virtual
  // negation of its real negation.
  {
    Verdict v = check_quasi_double_negation(ctx);
    if (v.holds()) {
      for (std::size_t a = 0; a < f && v.holds(); ++a) {
        if (skip(a)) continue;
        Formula negated = make_app(sig, *m.roles().negation, {ctx.fragment().at(a)});
        Bitvec des_neg = ctx.designated_row_of(negated);
        Bitvec virt = vn.or_rows(formula_qn_of_row(ctx, des_neg));
        if (!ctx.designated_rows(a).subset_of(virt))
          v = make_fails(FormulaWitness{printed(a), print_formula(sig, negated), {}},
                         "virtual negation of the real negation is not entailed");
      }
      v.bound = report.bound;
    }
    report.properties.push_back({"galois-double-negation", std::move(v)});
  }

  // 3: everything entails its virtual double negation.
  {
    Verdict v = make_holds();
    for (std::size_t a = 0; a < f; ++a) {
      if (skip(a)) continue;
      if (!ctx.designated_rows(a).subset_of(vn.designated_double_virtual(a))) {
        Bitvec gap = ctx.designated_rows(a);
        std::size_t bad = gap.first_not_in(vn.designated_double_virtual(a));
        v = make_fails(FormulaWitness{printed(a), "", detail::valuation_digits(ctx, bad)},
                       "virtual double negation is not entailed");
        break;
      }
    }
    v.bound = report.bound;
    report.properties.push_back({"constructive-double-negation", std::move(v)});
  }

  // 4: the virtual double negation collapses back.
  {
    Verdict v = make_holds();
    for (std::size_t a = 0; a < f && v.holds(); ++a) {
      if (skip(a)) continue;
      if (!vn.designated_double_virtual(a).subset_of(ctx.designated_rows(a))) {
        Bitvec extra = vn.designated_double_virtual(a);
        std::size_t bad = extra.first_not_in(ctx.designated_rows(a));
        std::string partner;
        const Bitvec& members = vn.partners_of_virtual(a);
        for (std::size_t u = 0; u < f; ++u)
          if (members.test(u) && ctx.designated_rows(u).test(bad)) {
            partner = printed(u);
            break;
          }
        v = make_fails(FormulaWitness{printed(a), partner, detail::valuation_digits(ctx, bad)},
                       "virtual double negation overshoots");
      }
    }
    v.bound = report.bound;
    report.properties.push_back({"classical-double-negation", std::move(v)});
  }

  // 5: a formula together with its virtual negation entails everything.
  {
    Verdict v = make_holds();
    for (std::size_t a = 0; a < f && v.holds(); ++a) {
      if (skip(a)) continue;
      Bitvec joint = ctx.designated_rows(a);
      joint &= vn.designated_virtual(a);
      if (joint.none()) continue;
      for (std::size_t b = 0; b < f; ++b)
        if (!joint.subset_of(ctx.designated_rows(b))) {
          std::size_t bad = joint.first_not_in(ctx.designated_rows(b));
          v = make_fails(FormulaWitness{printed(a), printed(b), detail::valuation_digits(ctx, bad)},
                         "joint designation escapes some conclusion");
          break;
        }
    }
    v.bound = report.bound;
    report.properties.push_back({"absurdity", std::move(v)});
  }

  return report;
}

}  // namespace paracon
