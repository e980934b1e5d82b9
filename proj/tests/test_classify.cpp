#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "paracon/classify.hpp"
#include "paracon/io.hpp"

using namespace paracon;

namespace {

ExplicitConsequence table2(Mask e, Mask x, Mask y, Mask xy) {
  return ExplicitConsequence(ConsequenceMap(make_carrier({"x", "y"}), {e, x, y, xy}));
}

}  // namespace

TEST_CASE("explosion partners by brute force on a two-element table") {
  // C({x}) = everything, C({y}) and mixed sets stay partial.
  ExplicitConsequence p = table2(0b00, 0b11, 0b01, 0b11);
  REQUIRE(element_qn(p, 0) == 0b11);  // x explodes with anything
  REQUIRE(element_qn(p, 1) == 0b01);  // y only with x
  REQUIRE(find_trivializing_singleton(p) == 0);
}

TEST_CASE("pairwise explosion law on explicit tables") {
  auto c = make_carrier({"x", "y"});
  NegationMap swap_neg(c, {1, 0});
  // Every pair {alpha, neg alpha} = {x, y} trivializes.
  ExplicitConsequence exploding = table2(0b00, 0b01, 0b10, 0b11);
  REQUIRE(check_ecq(exploding, swap_neg).holds());
  // ... and here {x, y} stays partial, witnessed by either element.
  ExplicitConsequence tolerant = table2(0b00, 0b01, 0b10, 0b10);
  Verdict v = check_ecq(tolerant, swap_neg);
  REQUIRE(v.fails());
  REQUIRE(std::get<ElementWitness>(v.certificate).element <= 1);
}

TEST_CASE("partner-freeness and its per-element refutation table") {
  // Every companion of y fails to explode.
  ExplicitConsequence nf = table2(0b00, 0b11, 0b01, 0b01);
  Verdict hv = check_nf_paraconsistency(nf);
  REQUIRE(hv.holds());
  REQUIRE(std::get<ElementWitness>(hv.certificate).element == 1);

  // Everything has an exploding companion.
  ExplicitConsequence gecq = table2(0b00, 0b11, 0b11, 0b11);
  Verdict fv = check_nf_paraconsistency(gecq);
  REQUIRE(fv.fails());
  auto partners = std::get<PerElementTable>(fv.certificate).partner;
  REQUIRE(partners.size() == 2);
  for (std::size_t a = 0; a < 2; ++a)
    REQUIRE(gecq.trivializes((Mask{1} << a) | (Mask{1} << partners[a])));
}

TEST_CASE("fusion-freeness needs a fusion whose outputs never explode alone") {
  auto c = make_carrier({"x", "y"});
  // C({x}) partial, C({y}) = everything; fusion constantly x.
  ExplicitConsequence p = table2(0b00, 0b01, 0b11, 0b11);
  FusionMap to_x(c, {0, 0, 0, 0});
  REQUIRE(check_nff_paraconsistency(p, to_x).holds());
  FusionMap to_y(c, {1, 1, 1, 1});
  REQUIRE(check_nff_paraconsistency(p, to_y).fails());
}

TEST_CASE("falsum and relativized explosion on explicit tables") {
  ExplicitConsequence p = table2(0b00, 0b01, 0b11, 0b11);
  REQUIRE(check_bot_paraconsistency(p, 0).holds());   // C({x}) partial
  REQUIRE(check_bot_paraconsistency(p, 1).fails());   // C({y}) = everything
  REQUIRE(check_k_paraconsistency(p, 0b01).holds());  // x safe against {x}
  REQUIRE(check_k_paraconsistency(p, 0b10).fails());  // nothing survives y
  REQUIRE_THROWS_AS(check_k_paraconsistency(p, 0b00), std::invalid_argument);
}

TEST_CASE("fusion rule validation on the tolerant weak Kleene matrix") {
  Matrix m = paraconsistent_weak_kleene();
  REQUIRE(matrix_validate_fusion_intro(m).holds());
  Verdict elim = matrix_validate_fusion_elim(m);
  REQUIRE(elim.fails());
  auto pair = std::get<ElementPair>(elim.certificate);
  REQUIRE(m.carrier().name(pair.first) == "0");
  REQUIRE(m.carrier().name(pair.second) == "u");
  // Replay: the fused value is designated while the left component is not.
  std::size_t fused = m.algebra().apply2(*m.roles().fusion, pair.first, pair.second);
  REQUIRE(m.is_designated(fused));
  REQUIRE_FALSE(m.is_designated(pair.first));
  REQUIRE(matrix_fusion_commutative(m).holds());
}

TEST_CASE("matrix explosion laws across the builtin family") {
  REQUIRE(matrix_check_ecq(boolean2()).holds());
  REQUIRE(matrix_check_ecq(weak_kleene()).holds());
  REQUIRE(matrix_check_ecq(godel3()).holds());
  REQUIRE(matrix_check_ecq(godel4()).holds());

  Verdict pwk_ecq = matrix_check_ecq(paraconsistent_weak_kleene());
  REQUIRE(pwk_ecq.fails());
  std::size_t w = std::get<ElementWitness>(pwk_ecq.certificate).element;
  Matrix m = paraconsistent_weak_kleene();
  REQUIRE(m.is_designated(w));
  REQUIRE(m.is_designated(m.algebra().apply1(*m.roles().negation, w)));
  REQUIRE(matrix_check_conj_ecq(paraconsistent_weak_kleene()).fails());
}

TEST_CASE("arrow explosion via material implication") {
  REQUIRE(matrix_check_aecq(paraconsistent_weak_kleene()).holds());
  REQUIRE(matrix_check_aefq1(paraconsistent_weak_kleene()).holds());
  REQUIRE(matrix_check_aefq2(paraconsistent_weak_kleene()).holds());
  REQUIRE(matrix_check_aecq(boolean2()).holds());

  // Plain weak Kleene loses them: u-contaminated instances are undesignated.
  Matrix wk = weak_kleene();
  Verdict v = matrix_check_aecq(wk);
  REQUIRE(v.fails());
  // Reference scan, straight from the tables.
  bool all_designated = true;
  for (std::size_t a = 0; a < 3 && all_designated; ++a)
    for (std::size_t b = 0; b < 3 && all_designated; ++b) {
      std::size_t contradiction = oracles::kWkConj[a][oracles::kWkNeg[a]];
      std::size_t inst = oracles::kWkDisj[oracles::kWkNeg[contradiction]][b];
      if (!wk.is_designated(inst)) all_designated = false;
    }
  REQUIRE_FALSE(all_designated);
}

TEST_CASE("arrow explosion uses the implication table when one is declared") {
  REQUIRE(matrix_check_aecq(godel3()).holds());
  REQUIRE(matrix_check_aefq1(godel3()).holds());
  REQUIRE(matrix_check_aefq2(godel3()).holds());
  // Without negation there is nothing to check.
  Matrix g = godel3();
  MatrixRoles roles = g.roles();
  roles.negation.reset();
  Matrix stripped("no-neg", g.algebra(), g.designated(), roles);
  REQUIRE_THROWS_AS(matrix_check_aecq(stripped), inapplicable_error);
}

TEST_CASE("matrix partner-freeness certificates replay") {
  Matrix pwk = paraconsistent_weak_kleene();
  MatrixContext ctx(pwk, Fragment(pwk.signature(), 2, 2));
  Verdict nf = matrix_check_nf(ctx);
  REQUIRE(nf.holds());
  std::size_t fix = std::get<FixpointCertificate>(nf.certificate).element;
  REQUIRE(pwk.carrier().name(fix) == "u");
  REQUIRE(pwk.is_designated(fix));
  for (std::size_t k = 0; k < pwk.signature().size(); ++k) {
    std::size_t arity = pwk.signature().at(k).arity;
    REQUIRE(pwk.algebra().apply(k, std::vector<std::size_t>(arity, fix)) == fix);
  }

  Verdict nff = matrix_check_nff(ctx);
  REQUIRE(nff.holds());
  std::size_t inf = std::get<InfectiousCertificate>(nff.certificate).element;
  REQUIRE(inf == fix);
  for (std::size_t b = 0; b < 3; ++b)
    REQUIRE(pwk.algebra().apply2(*pwk.roles().fusion, inf, b) == inf);
}

TEST_CASE("falsum constant defeats matrix partner-freeness") {
  Matrix m = paraconsistent_weak_kleene_bottom();
  REQUIRE(matrix_check_bot_paraconsistency(m).fails());
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  Verdict nf = matrix_check_nf(ctx);
  REQUIRE(nf.fails());
  auto fw = std::get<FormulaWitness>(nf.certificate);
  REQUIRE(fw.subject == "0");
  // Replay: the witness formula explodes with every fragment formula.
  std::size_t bot = *ctx.fragment().index_of(fw.subject);
  for (std::size_t b = 0; b < ctx.fragment().size(); ++b)
    REQUIRE(ctx.trivializes({bot, b}));
  REQUIRE(matrix_check_nff(ctx).holds());
}

TEST_CASE("two-valued logic is explosive in every generalized sense") {
  Matrix b = boolean2();
  MatrixContext ctx(b, Fragment(b.signature(), 2, 2));
  REQUIRE(matrix_check_nf(ctx).fails());
  REQUIRE(matrix_check_nff(ctx).fails());
  REQUIRE(matrix_check_bot_paraconsistency(paraconsistent_weak_kleene_bottom()).fails());
}

TEST_CASE("plain weak Kleene is not partner-free despite failing no explosion") {
  Matrix wk = weak_kleene();
  MatrixContext ctx(wk, Fragment(wk.signature(), 2, 2));
  Verdict nf = matrix_check_nf(ctx);
  REQUIRE(nf.fails());
  auto fw = std::get<FormulaWitness>(nf.certificate);
  // The witness is never designated, so it explodes with everything.
  Bitvec row = ctx.designated_row_of(parse_formula(wk.signature(), fw.subject));
  REQUIRE(row.none());
}

TEST_CASE("relativized explosion for matrices") {
  Matrix m = paraconsistent_weak_kleene();
  MatrixContext ctx(m, Fragment(m.signature(), 2, 2));
  std::size_t p = *ctx.fragment().index_of("p");
  std::size_t np = *ctx.fragment().index_of("~p");
  REQUIRE(matrix_check_k(ctx, {p, np}).holds());
  Matrix b = boolean2();
  MatrixContext bctx(b, Fragment(b.signature(), 2, 2));
  std::size_t bp = *bctx.fragment().index_of("p");
  std::size_t bnp = *bctx.fragment().index_of("~p");
  // Relative to just {p, ~p} even two-valued logic keeps a safe formula: q
  // never explodes with either member.
  REQUIRE(matrix_check_k(bctx, {bp, bnp}).holds());
  REQUIRE_THROWS_AS(matrix_check_k(bctx, {}), std::invalid_argument);
  // Relative to the whole fragment the notion collapses to partner-freeness.
  std::vector<std::size_t> everything(bctx.fragment().size());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;
  REQUIRE(matrix_check_k(bctx, everything).fails());
}

TEST_CASE("theorem rows adapt to what the structure provides") {
  auto poset = builtin_structure("poset-a");
  auto rows = theorem_suite(*poset.provider);
  std::vector<std::string> names;
  for (const auto& r : rows) names.push_back(r.name);
  REQUIRE(names == std::vector<std::string>{"nf-implies-negation-paraconsistent",
                                            "monotone-exploding-singleton-excludes-nf",
                                            "qn-symmetry", "empty-qn-iff-nf"});

  auto qs = builtin_structure("qsample");
  bool has_gap_row = false;
  for (const auto& r : theorem_suite(*qs.provider))
    if (r.name == "q-gap-implies-nf") {
      has_gap_row = true;
      REQUIRE(r.outcome == Status::holds);
      REQUIRE(r.antecedent == Status::holds);
      REQUIRE(r.consequent == Status::holds);
    }
  REQUIRE(has_gap_row);

  auto vo = builtin_structure("valorder");
  bool has_incomparable_row = false;
  for (const auto& r : theorem_suite(*vo.provider))
    if (r.name == "incomparable-values-imply-nf") {
      has_incomparable_row = true;
      REQUIRE(r.outcome == Status::holds);
    }
  REQUIRE(has_incomparable_row);
}

TEST_CASE("ungated fusion statements have counterexamples, so the gates matter") {
  auto c = make_carrier({"x", "y"});
  // Adjunction valid, partner-free, yet no fusion-freeness: possible only
  // because consequence fails to compose through derivable sets.
  ExplicitConsequence p(ConsequenceMap(c, {0b00, 0b11, 0b01, 0b01}));
  FusionMap to_x(c, {0, 0, 0, 0});
  REQUIRE(check_fusion_intro_rule(p, to_x).holds());
  REQUIRE(check_nf_paraconsistency(p).holds());
  REQUIRE(check_nff_paraconsistency(p, to_x).fails());
  REQUIRE(check_cut_for_sets(p).fails());
  for (const auto& r : theorem_suite(p, std::nullopt, to_x))
    if (r.name == "fusion-intro-lifts-nf-to-nff") {
      REQUIRE(r.outcome == Status::unknown);
      REQUIRE_FALSE(r.unmet.empty());
    }
}

TEST_CASE("ungated pairwise-vs-fused equivalence has a counterexample too") {
  auto c = make_carrier({"x", "y"});
  ExplicitConsequence p(ConsequenceMap(c, {0b00, 0b11, 0b01, 0b11}));
  NegationMap neg(c, {0, 0});
  FusionMap fus(c, {1, 0, 0, 0});
  REQUIRE(check_fusion_intro_rule(p, fus).holds());
  REQUIRE(check_fusion_elim_rule(p, fus).holds());
  REQUIRE(check_ecq(p, neg).holds());
  REQUIRE(check_conj_ecq(p, neg, fus).fails());
  REQUIRE(check_cut_for_sets(p).fails());
  for (const auto& r : theorem_suite(p, neg, fus))
    if (r.name == "ecq-agrees-with-conj-ecq") {
      REQUIRE(r.outcome == Status::unknown);
      REQUIRE_FALSE(r.unmet.empty());
    }
}

TEST_CASE("theorem suite is clean on tarskian builtins") {
  for (const char* name : {"reflexive2", "reflexive3"}) {
    auto s = builtin_structure(name);
    for (const auto& r : theorem_suite(*s.provider)) REQUIRE(r.outcome != Status::fails);
  }
}
