#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "paracon/io.hpp"
#include "paracon/quasineg.hpp"

using namespace paracon;

TEST_CASE("partner tables are symmetric and tied to partner-freeness") {
  for (const char* name : {"poset-a", "poset-a-dual", "poset-b", "poset-b-dual", "reflexive2",
                           "reflexive3", "qsample", "valorder"}) {
    auto s = builtin_structure(name);
    QnLinks links = qn_paraconsistency_links(*s.provider);
    INFO(name);
    REQUIRE(links.symmetric);
    REQUIRE(links.empty_iff_nf);
    REQUIRE(links.empty_at.has_value() == links.nf.holds());
    const std::size_t n = s.provider->carrier().size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool partner = (links.table[a] >> b) & 1;
        REQUIRE(partner == s.provider->trivializes((Mask{1} << a) | (Mask{1} << b)));
      }
  }
}

TEST_CASE("formula partner sets on the two-valued matrix match an unsatisfiability oracle") {
  Matrix m = boolean2();
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  const Fragment& frag = ctx.fragment();
  for (std::size_t i = 0; i < 100; ++i) {
    Bitvec qn = formula_qn_of_row(ctx, ctx.designated_rows(i));
    for (std::size_t j = 0; j < frag.size(); ++j) {
      bool expected = oracles::jointly_unsat(m.signature(), frag.at(i), frag.at(j), 2);
      if (qn.test(j) != expected) {
        INFO(print_formula(m.signature(), frag.at(i)) + " vs " +
             print_formula(m.signature(), frag.at(j)));
        REQUIRE(qn.test(j) == expected);
      }
    }
  }
}

TEST_CASE("formula partner sets need a proper designated set") {
  Matrix wk = weak_kleene();
  Matrix all("all-designated", wk.algebra(), 0b111, wk.roles());
  MatrixContext ctx(all, Fragment(all.signature(), 1, 1));
  REQUIRE_THROWS_AS(formula_qn(ctx, 0), inapplicable_error);
}

TEST_CASE("partner sets shrink as formulas strengthen") {
  for (const Matrix& m : {boolean2(), paraconsistent_weak_kleene(), godel3()}) {
    MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
    INFO(m.name());
    REQUIRE(check_qn_antitone(ctx).holds());
    REQUIRE(check_quasi_double_negation(ctx).holds());
  }
}

TEST_CASE("every induced-negation law holds on the two-valued matrix") {
  Matrix m = boolean2();
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  KiteReport report = kite_property_suite(ctx);
  REQUIRE(report.properties.size() == 5);
  for (const auto& prop : report.properties) {
    INFO(prop.name);
    REQUIRE(prop.verdict.holds());
  }
  REQUIRE(report.vacuous_formulas == 0);
  REQUIRE_FALSE(report.all_vacuous);
}

TEST_CASE("the tolerant matrix never explodes, so every law holds vacuously") {
  Matrix m = paraconsistent_weak_kleene();
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  KiteReport report = kite_property_suite(ctx);
  REQUIRE(report.all_vacuous);
  REQUIRE(report.vacuous_formulas == ctx.fragment().size());
  for (const auto& prop : report.properties) REQUIRE(prop.verdict.holds());
}

TEST_CASE("on the three-element chain exactly the classical collapse fails") {
  Matrix m = godel3();
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  KiteReport report = kite_property_suite(ctx);
  REQUIRE(report.vacuous_formulas == 0);
  for (const auto& prop : report.properties) {
    INFO(prop.name);
    if (prop.name == "classical-double-negation") {
      REQUIRE(prop.verdict.fails());
      auto fw = std::get<FormulaWitness>(prop.verdict.certificate);
      REQUIRE(fw.subject == "p");
      REQUIRE(fw.partner == "~~p");
      REQUIRE(m.carrier().name(fw.assignment.at(0)) == "h");
      // Replay the countermodel: at this valuation the subject itself is
      // undesignated ...
      std::size_t v = 0, stride = 1;
      for (std::size_t i = 0; i < fw.assignment.size(); ++i) {
        v += fw.assignment[i] * stride;
        stride *= m.carrier().size();
      }
      std::size_t subject = *ctx.fragment().index_of(fw.subject);
      REQUIRE_FALSE(ctx.designated_rows(subject).test(v));
      // ... while the printed partner is designated and refutes everything
      // that refutes the subject, which is what double negation asserts.
      Formula partner = parse_formula(m.signature(), fw.partner);
      REQUIRE(ctx.designated_row_of(partner).test(v));
      Bitvec qn_subject = formula_qn_of_row(ctx, ctx.designated_rows(subject));
      std::size_t partner_idx = *ctx.fragment().index_of(partner);
      for (std::size_t w = 0; w < ctx.fragment().size(); ++w)
        if (qn_subject.test(w)) {
          Bitvec qn_w = formula_qn_of_row(ctx, ctx.designated_rows(w));
          REQUIRE(qn_w.test(partner_idx));
        }
    } else {
      REQUIRE(prop.verdict.holds());
    }
  }
}

TEST_CASE("kite reports carry the searched bound") {
  Matrix m = boolean2();
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  KiteReport report = kite_property_suite(ctx);
  REQUIRE(report.bound.formulas == ctx.fragment().size());
  REQUIRE(report.bound.variables == 2);
  REQUIRE(report.bound.depth == 2);
}
