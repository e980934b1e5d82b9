#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "paracon/paracon.hpp"
#include "paracon/version.hpp"

namespace {

using namespace paracon;

void emit(const OrderedJson& j, const std::vector<std::string>& lines, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& l : lines) std::cout << l << "\n";
}

OrderedJson report_root(const char* command) {
  OrderedJson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string word = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!word.empty()) out.push_back(word);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct FragmentOptions {
  std::size_t variables = 2;
  std::size_t depth = 2;
};

MatrixContext context_for(const Matrix& m, const FragmentOptions& opt) {
  return MatrixContext(m, Fragment(m.signature(), opt.variables, opt.depth));
}

// --- analyze -----------------------------------------------------------------

int run_analyze_abstract(const LoadedStructure& s, const std::string& k_arg, bool as_json) {
  const ConsequenceProvider& p = *s.provider;
  const Carrier& carrier = p.carrier();
  OrderedJson j = report_root("analyze");
  std::vector<std::string> lines;

  j["structure"] = OrderedJson{{"name", s.name}, {"kind", s.kind}};
  OrderedJson elems = OrderedJson::array();
  for (std::size_t i = 0; i < carrier.size(); ++i) elems.push_back(carrier.name(i));
  j["structure"]["elements"] = std::move(elems);
  lines.push_back(s.name + " (" + s.kind + "), elements " +
                  format_mask(carrier, carrier.full()));

  Verdict refl = check_reflexivity(p);
  Verdict mono = check_monotonicity(p);
  Verdict trans = check_transitivity(p);
  Verdict cut = check_cut_for_sets(p);
  j["operator"] = OrderedJson{{"reflexivity", verdict_json(refl, &carrier)},
                              {"monotonicity", verdict_json(mono, &carrier)},
                              {"transitivity", verdict_json(trans, &carrier)},
                              {"cut-for-sets", verdict_json(cut, &carrier)},
                              {"tarskian", refl.holds() && mono.holds() && trans.holds()}};
  lines.push_back("operator:");
  lines.push_back("  reflexivity:  " + verdict_text(refl, &carrier));
  lines.push_back("  monotonicity: " + verdict_text(mono, &carrier));
  lines.push_back("  transitivity: " + verdict_text(trans, &carrier));
  lines.push_back("  cut-for-sets: " + verdict_text(cut, &carrier));

  if (carrier.size() <= 6) {
    ConsequenceMap table = p.materialize();
    j["table"] = consequence_map_json(table)["table"];
    lines.push_back("table:");
    for (const auto& l : consequence_map_lines(table)) lines.push_back("  " + l);
  }

  OrderedJson para;
  lines.push_back("paraconsistency:");
  Verdict nf = check_nf_paraconsistency(p);
  para["nf"] = verdict_json(nf, &carrier);
  lines.push_back("  nf:       " + verdict_text(nf, &carrier));
  if (s.fusion) {
    Verdict nff = check_nff_paraconsistency(p, *s.fusion);
    para["nff"] = verdict_json(nff, &carrier);
    lines.push_back("  nff:      " + verdict_text(nff, &carrier));
  }
  if (s.bottom) {
    Verdict bot = check_bot_paraconsistency(p, *s.bottom);
    para["bot"] = verdict_json(bot, &carrier);
    lines.push_back("  bot:      " + verdict_text(bot, &carrier));
  }
  if (s.negation) {
    Verdict ecq = check_ecq(p, *s.negation);
    para["ecq"] = verdict_json(ecq, &carrier);
    lines.push_back("  ecq:      " + verdict_text(ecq, &carrier));
    if (s.fusion) {
      Verdict cecq = check_conj_ecq(p, *s.negation, *s.fusion);
      para["conj-ecq"] = verdict_json(cecq, &carrier);
      lines.push_back("  conj-ecq: " + verdict_text(cecq, &carrier));
    }
  }
  if (!k_arg.empty()) {
    Mask k = 0;
    for (const auto& name : split_commas(k_arg)) k |= Mask{1} << carrier.require(name);
    Verdict kv = check_k_paraconsistency(p, k);
    para["k"] = verdict_json(kv, &carrier);
    para["k"]["candidates"] = mask_json(carrier, k);
    lines.push_back("  k:        " + verdict_text(kv, &carrier) + " over " +
                    format_mask(carrier, k));
  }
  j["paraconsistency"] = std::move(para);

  OrderedJson thms = OrderedJson::array();
  lines.push_back("theorems:");
  for (const TheoremCheck& row : theorem_suite(p, s.negation, s.fusion)) {
    thms.push_back(theorem_check_json(row));
    lines.push_back("  " + theorem_check_text(row));
  }
  j["theorems"] = std::move(thms);

  emit(j, lines, as_json);
  return 0;
}

int run_analyze_matrix(const LoadedStructure& s, const std::string& k_arg,
                       const FragmentOptions& frag_opt, bool as_json) {
  const Matrix& m = *s.matrix;
  const Carrier& carrier = m.carrier();
  OrderedJson j = report_root("analyze");
  std::vector<std::string> lines;

  j["structure"] = matrix_json(m);
  lines.push_back(m.name() + " (matrix), elements " + format_mask(carrier, carrier.full()) +
                  ", designated " + format_mask(carrier, m.designated()));
  for (const auto& l : matrix_table_lines(m)) lines.push_back("  " + l);

  OrderedJson laws;
  lines.push_back("laws:");
  auto law = [&](const char* key, const char* label, const Verdict& v) {
    laws[key] = verdict_json(v, &carrier);
    lines.push_back("  " + std::string(label) + verdict_text(v, &carrier));
  };
  if (m.roles().negation) {
    law("ecq", "ecq:           ", matrix_check_ecq(m));
    if (m.roles().fusion) law("conj-ecq", "conj-ecq:      ", matrix_check_conj_ecq(m));
    if (matrix_has_implication(m)) {
      law("aecq", "aecq:          ", matrix_check_aecq(m));
      law("aefq1", "aefq1:         ", matrix_check_aefq1(m));
      law("aefq2", "aefq2:         ", matrix_check_aefq2(m));
    }
  }
  if (m.roles().fusion) {
    law("fusion-intro", "fusion-intro:  ", matrix_validate_fusion_intro(m));
    law("fusion-elim", "fusion-elim:   ", matrix_validate_fusion_elim(m));
    law("fusion-commutative", "fusion-comm:   ", matrix_fusion_commutative(m));
  }
  if (m.roles().bottom) law("bot", "bot:           ", matrix_check_bot_paraconsistency(m));
  j["laws"] = std::move(laws);

  MatrixContext ctx = context_for(m, frag_opt);
  j["fragment"] = OrderedJson{{"variables", ctx.fragment().variables()},
                              {"depth", ctx.fragment().depth()},
                              {"formulas", ctx.fragment().size()},
                              {"valuations", ctx.valuation_count()}};
  lines.push_back("fragment: " + std::to_string(ctx.fragment().size()) + " formulas over " +
                  std::to_string(ctx.fragment().variables()) + " vars at depth " +
                  std::to_string(ctx.fragment().depth()) + ", " +
                  std::to_string(ctx.valuation_count()) + " valuations");

  OrderedJson para;
  lines.push_back("paraconsistency:");
  Verdict nf = matrix_check_nf(ctx);
  para["nf"] = verdict_json(nf, &carrier);
  lines.push_back("  nf:  " + verdict_text(nf, &carrier));
  if (m.roles().fusion) {
    Verdict nff = matrix_check_nff(ctx);
    para["nff"] = verdict_json(nff, &carrier);
    lines.push_back("  nff: " + verdict_text(nff, &carrier));
  }
  if (!k_arg.empty()) {
    std::vector<std::size_t> k_indices;
    for (const auto& text : split_commas(k_arg)) {
      Formula f = parse_formula(m.signature(), text);
      auto idx = ctx.fragment().index_of(f);
      if (!idx)
        throw std::invalid_argument("formula '" + text +
                                    "' lies outside the enumerated fragment; raise "
                                    "--fragment-depth or --fragment-vars");
      k_indices.push_back(*idx);
    }
    Verdict kv = matrix_check_k(ctx, k_indices);
    para["k"] = verdict_json(kv, &carrier);
    lines.push_back("  k:   " + verdict_text(kv, &carrier) + " over " + k_arg);
  }
  j["paraconsistency"] = std::move(para);

  emit(j, lines, as_json);
  return 0;
}

// --- closure -----------------------------------------------------------------

int run_closure(const LoadedStructure& s, const std::vector<std::string>& premises, bool all,
                bool as_json) {
  if (!s.provider)
    throw inapplicable_error("closure works on abstract structures, not matrices");
  const ConsequenceProvider& p = *s.provider;
  const Carrier& carrier = p.carrier();
  OrderedJson j = report_root("closure");
  std::vector<std::string> lines;
  j["structure"] = OrderedJson{{"name", s.name}, {"kind", s.kind}};

  if (all) {
    ConsequenceMap table = p.materialize();
    j["table"] = consequence_map_json(table)["table"];
    lines = consequence_map_lines(table);
  } else {
    Mask gamma = 0;
    for (const auto& name : premises) gamma |= Mask{1} << carrier.require(name);
    Mask result = p.consequences(gamma);
    j["premises"] = mask_json(carrier, gamma);
    j["consequences"] = mask_json(carrier, result);
    j["trivializes"] = result == carrier.full();
    lines.push_back("C(" + format_mask(carrier, gamma) + ") = " + format_mask(carrier, result) +
                    (result == carrier.full() ? "   [everything]" : ""));
  }
  emit(j, lines, as_json);
  return 0;
}

// --- qn ------------------------------------------------------------------------

int run_qn(const LoadedStructure& s, const std::string& formula_text,
           const FragmentOptions& frag_opt, std::size_t limit, bool as_json) {
  OrderedJson j = report_root("qn");
  std::vector<std::string> lines;

  if (!s.is_matrix()) {
    const ConsequenceProvider& p = *s.provider;
    const Carrier& carrier = p.carrier();
    if (!formula_text.empty())
      throw inapplicable_error("--formula applies to matrices; this structure is element-level");
    j["structure"] = OrderedJson{{"name", s.name}, {"kind", s.kind}};
    QnLinks links = qn_paraconsistency_links(p);
    OrderedJson table;
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      table[carrier.name(a)] = mask_json(carrier, links.table[a]);
      lines.push_back("partners(" + carrier.name(a) + ") = " +
                      format_mask(carrier, links.table[a]));
    }
    j["partners"] = std::move(table);
    j["symmetric"] = links.symmetric;
    j["empty-at"] = links.empty_at ? OrderedJson(carrier.name(*links.empty_at)) : OrderedJson();
    j["nf"] = verdict_json(links.nf, &carrier);
    j["empty-iff-nf"] = links.empty_iff_nf;
    lines.push_back(std::string("symmetric: ") + (links.symmetric ? "yes" : "no"));
    lines.push_back("empty partner set: " +
                    (links.empty_at ? "at " + carrier.name(*links.empty_at) : std::string("none")));
    lines.push_back("nf: " + verdict_text(links.nf, &carrier));
    lines.push_back(std::string("empty-iff-nf: ") + (links.empty_iff_nf ? "agrees" : "DISAGREES"));
    emit(j, lines, as_json);
    return 0;
  }

  const Matrix& m = *s.matrix;
  const Carrier& carrier = m.carrier();
  MatrixContext ctx = context_for(m, frag_opt);
  j["structure"] = OrderedJson{{"name", s.name}, {"kind", "matrix"}};
  j["fragment"] = OrderedJson{{"variables", ctx.fragment().variables()},
                              {"depth", ctx.fragment().depth()},
                              {"formulas", ctx.fragment().size()}};

  if (!formula_text.empty()) {
    Formula f = parse_formula(m.signature(), formula_text);
    Bitvec qn = formula_qn_of_row(ctx, ctx.designated_row_of(f));
    j["formula"] = print_formula(m.signature(), f);
    j["partner-count"] = qn.count();
    OrderedJson members = OrderedJson::array();
    std::size_t shown = 0;
    for (std::size_t w = 0; w < ctx.fragment().size() && shown < limit; ++w)
      if (qn.test(w)) {
        members.push_back(print_formula(m.signature(), ctx.fragment().at(w)));
        ++shown;
      }
    j["partners"] = std::move(members);
    lines.push_back("partners(" + print_formula(m.signature(), f) + "): " +
                    std::to_string(qn.count()) + " within the fragment");
    for (const auto& e : j["partners"]) lines.push_back("  " + e.get<std::string>());
    if (qn.count() > limit)
      lines.push_back("  ... (" + std::to_string(qn.count() - limit) + " more)");
    emit(j, lines, as_json);
    return 0;
  }

  KiteReport kite = kite_property_suite(ctx);
  j["kite"] = kite_report_json(kite, carrier);
  lines.push_back("induced-negation properties over " + std::to_string(ctx.fragment().size()) +
                  " formulas:");
  for (const auto& prop : kite.properties)
    lines.push_back("  " + prop.name + ": " + verdict_text(prop.verdict, &carrier));
  lines.push_back("  vacuous formulas (no partners): " + std::to_string(kite.vacuous_formulas) +
                  (kite.all_vacuous ? " (all of them -- every set empty)" : ""));
  Verdict antitone = check_qn_antitone(ctx);
  Verdict quasi = check_quasi_double_negation(ctx);
  j["antitone"] = verdict_json(antitone, &carrier);
  j["refutes-partners"] = verdict_json(quasi, &carrier);
  lines.push_back("  partner sets antitone: " + verdict_text(antitone, &carrier));
  lines.push_back("  refutes its partners:  " + verdict_text(quasi, &carrier));
  emit(j, lines, as_json);
  return 0;
}

// --- search ----------------------------------------------------------------------

int run_search(std::size_t size, const std::string& pred_text, const std::string& mode,
               std::size_t samples, std::uint64_t seed, double bias, std::size_t witnesses,
               bool reflexive_scan, bool minimal, bool as_json) {
  StructurePredicate pred = StructurePredicate::parse(pred_text);
  if (reflexive_scan && minimal && !pred.wants(Atom::reflexive))
    pred.atoms.insert(pred.atoms.begin(), Atom::reflexive);
  OrderedJson j = report_root("search");
  std::vector<std::string> lines;
  j["predicate"] = pred.render();

  if (minimal) {
    auto found = minimal_example(pred);
    j["mode"] = "minimal";
    if (!found) {
      j["found"] = false;
      lines.push_back("no example with at most " + std::to_string(kMaxExhaustiveElements) +
                      " elements satisfies: " + pred.render());
      emit(j, lines, as_json);
      return 0;
    }
    j["found"] = true;
    j["elements"] = found->elements;
    j["index"] = found->index;
    j["scan"] = found->reflexive_pruned ? "reflexive" : "unconstrained";
    j["witness"] = consequence_map_json(found->map);
    lines.push_back("smallest example for " + pred.render() + ": " +
                    std::to_string(found->elements) + " element(s), index " +
                    std::to_string(found->index) +
                    (found->reflexive_pruned ? " of the reflexive scan" : ""));
    for (const auto& l : consequence_map_lines(found->map)) lines.push_back("  " + l);
    emit(j, lines, as_json);
    return 0;
  }

  if (mode == "sample") {
    SampleResult res = sample_structures(size, pred, samples, seed, bias, witnesses);
    j["mode"] = "sample";
    j["rng"] = res.rng;
    j["seed"] = res.seed;
    j["bias"] = res.bias;
    j["elements"] = res.elements;
    j["samples"] = res.samples;
    j["matched"] = res.matched;
    lines.push_back("sampled " + std::to_string(res.samples) + " tables on " +
                    std::to_string(res.elements) + " elements (rng " + res.rng + ", seed " +
                    std::to_string(res.seed) + ", bias " + std::to_string(res.bias) + ")");
    lines.push_back("matched " + std::to_string(res.matched) + " for " + pred.render());
    OrderedJson wits = OrderedJson::array();
    for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
      OrderedJson w;
      w["draw"] = res.witness_draws[i];
      w["seed"] = res.seed + res.witness_draws[i];
      w["map"] = consequence_map_json(res.witnesses[i]);
      wits.push_back(std::move(w));
      lines.push_back("witness draw " + std::to_string(res.witness_draws[i]) + " (seed " +
                      std::to_string(res.seed + res.witness_draws[i]) + "):");
      for (const auto& l : consequence_map_lines(res.witnesses[i])) lines.push_back("  " + l);
    }
    j["witnesses"] = std::move(wits);
    emit(j, lines, as_json);
    return 0;
  }

  if (mode != "exhaustive") throw std::invalid_argument("unknown mode '" + mode + "'");
  EnumerationResult res = enumerate_structures(size, pred, witnesses, reflexive_scan);
  j["mode"] = "exhaustive";
  j["elements"] = res.elements;
  j["scan"] = res.reflexive_pruned ? "reflexive" : "unconstrained";
  j["space"] = res.space;
  j["matched"] = res.matched;
  j["threads"] = res.threads;
  lines.push_back("scanned " + std::to_string(res.space) + " tables on " +
                  std::to_string(res.elements) + " element(s)" +
                  (res.reflexive_pruned ? " (reflexive scan)" : ""));
  lines.push_back("matched " + std::to_string(res.matched) + " for " + pred.render());
  OrderedJson wits = OrderedJson::array();
  for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
    OrderedJson w;
    w["index"] = res.witness_indices[i];
    w["map"] = consequence_map_json(res.witnesses[i]);
    wits.push_back(std::move(w));
    lines.push_back("witness index " + std::to_string(res.witness_indices[i]) + ":");
    for (const auto& l : consequence_map_lines(res.witnesses[i])) lines.push_back("  " + l);
  }
  j["witnesses"] = std::move(wits);
  emit(j, lines, as_json);
  return 0;
}

// --- reproduce ---------------------------------------------------------------------

struct ItemOutcome {
  bool pass = false;
  std::string expected, actual;
};

struct ChecklistItem {
  std::string id;
  std::string title;
  std::function<ItemOutcome()> run;
};

ItemOutcome outcome_eq(const std::string& expected, const std::string& actual) {
  return ItemOutcome{expected == actual, expected, actual};
}

ItemOutcome outcome_status(const char* expected, const Verdict& v) {
  return outcome_eq(expected, to_string(v.status));
}

std::string table_rows_by_first_arg(const Matrix& m, std::size_t conn) {
  const std::size_t n = m.carrier().size();
  std::string out;
  for (std::size_t a = 0; a < n; ++a) {
    if (a) out += " / ";
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out += " ";
      out += m.carrier().name(m.algebra().apply2(conn, a, b));
    }
  }
  return out;
}

std::vector<ChecklistItem> build_checklist() {
  std::vector<ChecklistItem> items;
  auto add = [&](std::string id, std::string title, std::function<ItemOutcome()> run) {
    items.push_back({std::move(id), std::move(title), std::move(run)});
  };

  // Three-valued infectious algebra, entry by entry.
  add("wk-neg-table", "negation over the infectious three-valued algebra", [] {
    Matrix m = weak_kleene();
    std::string neg;
    for (std::size_t a = 0; a < 3; ++a) {
      if (a) neg += " ";
      neg += m.carrier().name(m.algebra().apply1(0, a));
    }
    return outcome_eq("1 u 0", neg);
  });
  add("wk-conj-table", "conjunction rows of the infectious algebra", [] {
    return outcome_eq("0 u 0 / u u u / 0 u 1", table_rows_by_first_arg(weak_kleene(), 1));
  });
  add("wk-disj-table", "disjunction rows of the infectious algebra", [] {
    return outcome_eq("0 u 1 / u u u / 1 u 1", table_rows_by_first_arg(weak_kleene(), 2));
  });
  add("wk-infectious-unique", "u is the one infectious element", [] {
    Matrix m = weak_kleene();
    std::string got;
    for (std::size_t e : infectious_elements(m.algebra())) got += m.carrier().name(e);
    return outcome_eq("u", got);
  });
  add("wk-designated", "plain designation keeps only 1", [] {
    Matrix m = weak_kleene();
    return outcome_eq("{1}", format_mask(m.carrier(), m.designated()));
  });
  add("pwk-designated", "tolerant designation keeps u and 1", [] {
    Matrix m = paraconsistent_weak_kleene();
    return outcome_eq("{u, 1}", format_mask(m.carrier(), m.designated()));
  });

  // Two-valued baseline.
  add("boolean2-ecq", "two-valued logic explodes on contradictory pairs",
      [] { return outcome_status("holds", matrix_check_ecq(boolean2())); });
  add("boolean2-nf", "two-valued logic has explosive company for everything", [] {
    Matrix m = boolean2();
    return outcome_status("fails", matrix_check_nf(MatrixContext(m, Fragment(m.signature(), 2, 2))));
  });
  add("boolean2-nff", "two-valued fusions always find an exploding partner", [] {
    Matrix m = boolean2();
    return outcome_status("fails",
                          matrix_check_nff(MatrixContext(m, Fragment(m.signature(), 2, 2))));
  });
  add("boolean2-fragment-302", "the two-variable depth-two fragment has 302 formulas", [] {
    Matrix m = boolean2();
    return outcome_eq("302", std::to_string(Fragment(m.signature(), 2, 2).size()));
  });

  // Plain weak Kleene.
  add("wk-ecq", "plain designation explodes on contradictory pairs",
      [] { return outcome_status("holds", matrix_check_ecq(weak_kleene())); });
  add("wk-nf", "plain designation leaves no partner-free formula", [] {
    Matrix m = weak_kleene();
    return outcome_status("fails", matrix_check_nf(MatrixContext(m, Fragment(m.signature(), 2, 2))));
  });

  // Tolerant weak Kleene.
  add("pwk-ecq", "tolerant designation tolerates contradictory pairs", [] {
    Matrix m = paraconsistent_weak_kleene();
    Verdict v = matrix_check_ecq(m);
    if (!v.fails()) return outcome_eq("fails", to_string(v.status));
    auto w = std::get<ElementWitness>(v.certificate);
    return outcome_eq("fails at u", "fails at " + m.carrier().name(w.element));
  });
  add("pwk-conj-ecq", "tolerant designation tolerates fused contradictions",
      [] { return outcome_status("fails", matrix_check_conj_ecq(paraconsistent_weak_kleene())); });
  add("pwk-aecq", "the arrow form of explosion still goes through (material arrow)",
      [] { return outcome_status("holds", matrix_check_aecq(paraconsistent_weak_kleene())); });
  add("pwk-aefq1", "arrow explosion, negated antecedent first",
      [] { return outcome_status("holds", matrix_check_aefq1(paraconsistent_weak_kleene())); });
  add("pwk-aefq2", "arrow explosion, plain antecedent first",
      [] { return outcome_status("holds", matrix_check_aefq2(paraconsistent_weak_kleene())); });
  add("pwk-fusion-intro", "designated values are closed under conjunction",
      [] { return outcome_status("holds", matrix_validate_fusion_intro(paraconsistent_weak_kleene())); });
  add("pwk-fusion-elim", "conjunction elimination breaks, witnessed by (0, u)", [] {
    Matrix m = paraconsistent_weak_kleene();
    Verdict v = matrix_validate_fusion_elim(m);
    if (!v.fails()) return outcome_eq("fails", to_string(v.status));
    auto pr = std::get<ElementPair>(v.certificate);
    return outcome_eq("fails at (0, u)", "fails at (" + m.carrier().name(pr.first) + ", " +
                                             m.carrier().name(pr.second) + ")");
  });
  add("pwk-fusion-commutative", "conjunction is commutative",
      [] { return outcome_status("holds", matrix_fusion_commutative(paraconsistent_weak_kleene())); });
  add("pwk-nf", "some formula explodes with nothing, by the constant-u valuation", [] {
    Matrix m = paraconsistent_weak_kleene();
    Verdict v = matrix_check_nf(MatrixContext(m, Fragment(m.signature(), 2, 2)));
    if (!v.holds()) return outcome_eq("holds", to_string(v.status));
    auto fx = std::get<FixpointCertificate>(v.certificate);
    return outcome_eq("holds via u", "holds via " + m.carrier().name(fx.element));
  });
  add("pwk-nff", "no fusion with a bare variable ever explodes", [] {
    Matrix m = paraconsistent_weak_kleene();
    Verdict v = matrix_check_nff(MatrixContext(m, Fragment(m.signature(), 2, 2)));
    if (!v.holds()) return outcome_eq("holds", to_string(v.status));
    auto in = std::get<InfectiousCertificate>(v.certificate);
    return outcome_eq("holds via u", "holds via " + m.carrier().name(in.element));
  });

  // Adding a falsum constant.
  add("pwk0-bot", "the falsum constant explodes on its own", [] {
    return outcome_status("fails",
                          matrix_check_bot_paraconsistency(paraconsistent_weak_kleene_bottom()));
  });
  add("pwk0-nf", "the falsum constant kills partner-freeness", [] {
    Matrix m = paraconsistent_weak_kleene_bottom();
    Verdict v = matrix_check_nf(MatrixContext(m, Fragment(m.signature(), 2, 2)));
    if (!v.fails()) return outcome_eq("fails", to_string(v.status));
    auto fw = std::get<FormulaWitness>(v.certificate);
    return outcome_eq("fails via 0", "fails via " + fw.subject);
  });
  add("pwk0-nff", "fusions with a bare variable still never explode", [] {
    Matrix m = paraconsistent_weak_kleene_bottom();
    return outcome_status("holds", matrix_check_nff(MatrixContext(m, Fragment(m.signature(), 2, 2))));
  });

  // Goedel chain.
  add("godel3-ecq", "the three-element chain explodes on contradictory pairs",
      [] { return outcome_status("holds", matrix_check_ecq(godel3())); });
  add("godel3-aecq", "the chain validates arrow explosion",
      [] { return outcome_status("holds", matrix_check_aecq(godel3())); });

  // Induced-negation property kites.
  add("boolean2-kite", "all five induced-negation laws hold two-valued", [] {
    Matrix m = boolean2();
    KiteReport k = kite_property_suite(MatrixContext(m, Fragment(m.signature(), 2, 2)));
    std::string got;
    for (const auto& p : k.properties) {
      if (!got.empty()) got += " ";
      got += to_string(p.verdict.status);
    }
    got += " vacuous=" + std::to_string(k.vacuous_formulas);
    return outcome_eq("holds holds holds holds holds vacuous=0", got);
  });
  add("godel3-kite", "on the chain exactly the classical collapse fails, at p = h", [] {
    Matrix m = godel3();
    KiteReport k = kite_property_suite(MatrixContext(m, Fragment(m.signature(), 2, 2)));
    std::string got;
    for (const auto& p : k.properties) {
      if (!got.empty()) got += " ";
      got += p.name + "=" + to_string(p.verdict.status);
      if (p.verdict.fails()) {
        auto fw = std::get<FormulaWitness>(p.verdict.certificate);
        got += "(" + fw.subject + "," + fw.partner + "," +
               m.carrier().name(fw.assignment.at(0)) + ")";
      }
    }
    return outcome_eq(
        "contraposition=holds galois-double-negation=holds constructive-double-negation=holds "
        "classical-double-negation=fails(p,~~p,h) absurdity=holds",
        got);
  });

  // Order-driven consequence examples.
  auto closure_of = [](const char* builtin, Mask gamma) {
    auto s = builtin_structure(builtin);
    return format_mask(s.provider->carrier(), s.provider->consequences(gamma));
  };
  add("poset-a-closure-01", "upper bounds of {0, 1} in the one-step order",
      [=] { return outcome_eq("{1}", closure_of("poset-a", 0b011)); });
  add("poset-a-closure-12", "no common upper bound of {1, 2}",
      [=] { return outcome_eq("{}", closure_of("poset-a", 0b110)); });
  add("poset-a-closure-02", "no common upper bound of {0, 2}",
      [=] { return outcome_eq("{}", closure_of("poset-a", 0b101)); });
  add("poset-a-closure-empty", "empty premises yield everything vacuously",
      [=] { return outcome_eq("{0, 1, 2}", closure_of("poset-a", 0)); });
  add("poset-a-nf", "the one-step order is partner-free somewhere, rechecked element by element",
      [] {
        auto s = builtin_structure("poset-a");
        Verdict v = check_nf_paraconsistency(*s.provider);
        if (!v.holds()) return outcome_eq("holds+validated", to_string(v.status));
        std::size_t w = std::get<ElementWitness>(v.certificate).element;
        for (std::size_t b = 0; b < s.provider->carrier().size(); ++b)
          if (s.provider->trivializes((Mask{1} << w) | (Mask{1} << b)))
            return outcome_eq("holds+validated", "witness explodes with " +
                                                     s.provider->carrier().name(b));
        return outcome_eq("holds+validated", "holds+validated");
      });
  add("poset-a-irreflexive", "the upper-bound rule is not reflexive", [] {
    auto s = builtin_structure("poset-a");
    return outcome_status("fails", check_reflexivity(*s.provider));
  });
  add("poset-a-nonmonotone", "the upper-bound rule is not monotone", [] {
    auto s = builtin_structure("poset-a");
    return outcome_status("fails", check_monotonicity(*s.provider));
  });
  add("poset-all-nontarskian", "every bound-rule builtin drops reflexivity and monotonicity", [] {
    std::string got;
    for (const char* b : {"poset-a", "poset-a-dual", "poset-b", "poset-b-dual"}) {
      auto s = builtin_structure(b);
      if (check_reflexivity(*s.provider).holds()) got += std::string(b) + ":reflexive ";
      if (check_monotonicity(*s.provider).holds()) got += std::string(b) + ":monotone ";
    }
    return outcome_eq("all-drop-both", got.empty() ? "all-drop-both" : got);
  });
  add("poset-a-dual-closure", "lower bounds of {0, 1} in the dual reading",
      [=] { return outcome_eq("{0}", closure_of("poset-a-dual", 0b011)); });
  add("poset-b-closures", "the two-below-one order sends both mixed pairs to the top", [=] {
    return outcome_eq("{2} {2}",
                      closure_of("poset-b", 0b101) + " " + closure_of("poset-b", 0b110));
  });
  add("poset-b-dual-closures", "the reversed order with the dual rule agrees", [=] {
    return outcome_eq("{2} {2}",
                      closure_of("poset-b-dual", 0b101) + " " + closure_of("poset-b-dual", 0b110));
  });

  // Identity-closure examples.
  add("reflexive2-nf", "identity closure on two elements explodes pairwise", [] {
    auto s = builtin_structure("reflexive2");
    return outcome_status("fails", check_nf_paraconsistency(*s.provider));
  });
  add("reflexive3-nf", "identity closure on three elements is partner-free", [] {
    auto s = builtin_structure("reflexive3");
    return outcome_status("holds", check_nf_paraconsistency(*s.provider));
  });

  // The gappy operator example.
  add("qsample-gap", "the sample gappy operator keeps only a from the whole language", [] {
    auto s = builtin_structure("qsample");
    return outcome_eq("{a}", format_mask(s.provider->carrier(),
                                         s.provider->consequences(s.provider->carrier().full())));
  });
  add("qsample-nf", "a proper gap forces partner-freeness", [] {
    auto s = builtin_structure("qsample");
    return outcome_status("holds", check_nf_paraconsistency(*s.provider));
  });
  add("qsample-gap-theorem", "the gap-to-partner-freeness statement holds on the sample", [] {
    auto s = builtin_structure("qsample");
    for (const TheoremCheck& row : theorem_suite(*s.provider))
      if (row.name == "q-gap-implies-nf")
        return outcome_eq("holds/holds/holds", std::string(to_string(row.antecedent)) + "/" +
                                                   to_string(row.consequent) + "/" +
                                                   to_string(row.outcome));
    return outcome_eq("q-gap row present", "row missing");
  });

  // The incomparable-image example.
  add("valorder-incomparable", "incomparable images force partner-freeness on the sample", [] {
    auto s = builtin_structure("valorder");
    for (const TheoremCheck& row : theorem_suite(*s.provider))
      if (row.name == "incomparable-values-imply-nf")
        return outcome_eq("holds/holds/holds", std::string(to_string(row.antecedent)) + "/" +
                                                   to_string(row.consequent) + "/" +
                                                   to_string(row.outcome));
    return outcome_eq("incomparable row present", "row missing");
  });
  add("valorder-nf", "the two-point valuation order is partner-free", [] {
    auto s = builtin_structure("valorder");
    return outcome_status("holds", check_nf_paraconsistency(*s.provider));
  });

  // Search-space bookkeeping.
  add("search-space-sizes", "table space sizes at two and three elements", [] {
    std::string got = std::to_string(unconstrained_space(2)) + " " +
                      std::to_string(unconstrained_space(3)) + " " +
                      std::to_string(reflexive_space(2)) + " " +
                      std::to_string(reflexive_space(3));
    return outcome_eq("256 16777216 16 4096", got);
  });
  add("search-minimal-nf", "the smallest partner-free table is the empty one on one element", [] {
    auto found = minimal_example(StructurePredicate::parse("nf"));
    if (!found) return outcome_eq("n=1 index=0", "none");
    return outcome_eq("n=1 index=0", "n=" + std::to_string(found->elements) +
                                         " index=" + std::to_string(found->index));
  });
  add("search-minimal-reflexive-nf",
      "under reflexivity the smallest partner-free table is the identity on three elements", [] {
        auto found = minimal_example(StructurePredicate::parse("reflexive,nf"));
        if (!found) return outcome_eq("n=3 index=0 identity", "none");
        bool identity = true;
        for (std::size_t sset = 0; sset < found->map.table().size(); ++sset)
          if (found->map.table()[sset] != static_cast<Mask>(sset)) identity = false;
        return outcome_eq("n=3 index=0 identity",
                          "n=" + std::to_string(found->elements) +
                              " index=" + std::to_string(found->index) +
                              (identity ? " identity" : " other"));
      });
  add("theorem-sweep-clean", "no structural statement fails anywhere on two elements", [] {
    TheoremSweep sweep = run_theorem_sweep(2);
    return outcome_eq("0 violations in 114688 rows",
                      std::to_string(sweep.violations.size()) + " violations in " +
                          std::to_string(sweep.rows) + " rows");
  });

  return items;
}

int run_reproduce(const std::string& only, bool as_json) {
  std::vector<ChecklistItem> items = build_checklist();
  OrderedJson j = report_root("reproduce-paper");
  std::vector<std::string> lines;
  OrderedJson rows = OrderedJson::array();
  std::size_t ran = 0, passed = 0;
  for (const auto& item : items) {
    if (!only.empty() && item.id.find(only) == std::string::npos) continue;
    ++ran;
    ItemOutcome out = item.run();
    if (out.pass) ++passed;
    OrderedJson row;
    row["id"] = item.id;
    row["title"] = item.title;
    row["pass"] = out.pass;
    row["expected"] = out.expected;
    row["actual"] = out.actual;
    rows.push_back(std::move(row));
    if (out.pass) {
      lines.push_back("PASS  " + item.id);
    } else {
      lines.push_back("FAIL  " + item.id + "  (" + item.title + ")");
      lines.push_back("      expected: " + out.expected);
      lines.push_back("      actual:   " + out.actual);
    }
  }
  j["items"] = std::move(rows);
  j["ran"] = ran;
  j["passed"] = passed;
  lines.push_back(std::to_string(passed) + "/" + std::to_string(ran) + " passed");
  if (ran == 0) {
    lines.push_back("nothing matched the --only filter");
    emit(j, lines, as_json);
    return 2;
  }
  emit(j, lines, as_json);
  return passed == ran ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explore paraconsistency of abstract consequence structures and logical matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(paracon::kToolName) + " " +
                                        paracon::kToolVersion);

  bool as_json = false;
  std::string structure_ref, k_arg, formula_text, pred_text = "nf", mode = "exhaustive";
  std::vector<std::string> premises;
  bool closure_all = false, reflexive_scan = false, minimal = false;
  FragmentOptions frag_opt;
  std::size_t search_size = 2, samples = 1000, witnesses = 5, qn_limit = 10;
  std::uint64_t seed = 1;
  double bias = 0.5;
  std::string only;

  auto add_json_flag = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit a JSON report instead of text");
  };
  auto add_fragment_options = [&](CLI::App* cmd) {
    cmd->add_option("--fragment-vars", frag_opt.variables, "variables in the formula fragment")
        ->default_val(2)
        ->check(CLI::Range(std::size_t{1}, std::size_t{6}));
    cmd->add_option("--fragment-depth", frag_opt.depth, "connective nesting depth")
        ->default_val(2)
        ->check(CLI::Range(std::size_t{0}, std::size_t{6}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "classify one structure or matrix");
  add_json_flag(analyze);
  analyze->add_option("structure", structure_ref, "builtin name or JSON file")->required();
  analyze->add_option("--k", k_arg, "comma-separated candidate set for the k-style property");
  add_fragment_options(analyze);

  CLI::App* closure = app.add_subcommand("closure", "evaluate consequence sets");
  add_json_flag(closure);
  closure->add_option("structure", structure_ref, "builtin name or JSON file")->required();
  closure->add_option("premises", premises, "premise element names");
  closure->add_flag("--all", closure_all, "print the whole table");

  CLI::App* qn = app.add_subcommand("qn", "explosion partners and the induced negation");
  add_json_flag(qn);
  qn->add_option("structure", structure_ref, "builtin name or JSON file")->required();
  qn->add_option("--formula", formula_text, "matrix only: list partners of this formula");
  qn->add_option("--limit", qn_limit, "partners to print")->default_val(10);
  add_fragment_options(qn);

  CLI::App* search = app.add_subcommand("search", "scan table spaces for structures");
  add_json_flag(search);
  search->add_option("--size", search_size, "carrier size")->default_val(2);
  search->add_option("--pred", pred_text, "comma-separated predicate atoms")->default_val("nf");
  search->add_option("--mode", mode, "exhaustive or sample")->default_val("exhaustive");
  search->add_option("--samples", samples, "draws in sample mode")->default_val(1000);
  search->add_option("--seed", seed, "rng seed in sample mode")->default_val(1);
  search->add_option("--bias", bias, "membership bias in sample mode")->default_val(0.5);
  search->add_option("--witnesses", witnesses, "witnesses to keep")->default_val(5);
  search->add_flag("--reflexive", reflexive_scan, "scan only reflexive tables");
  search->add_flag("--minimal", minimal, "report the smallest example instead");

  CLI::App* reproduce =
      app.add_subcommand("reproduce-paper", "re-derive the recorded example results");
  add_json_flag(reproduce);
  reproduce->add_option("--only", only, "run only items whose id contains this text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      LoadedStructure s = paracon::resolve_structure(structure_ref);
      return s.is_matrix() ? run_analyze_matrix(s, k_arg, frag_opt, as_json)
                           : run_analyze_abstract(s, k_arg, as_json);
    }
    if (closure->parsed())
      return run_closure(paracon::resolve_structure(structure_ref), premises, closure_all,
                         as_json);
    if (qn->parsed())
      return run_qn(paracon::resolve_structure(structure_ref), formula_text, frag_opt, qn_limit,
                    as_json);
    if (search->parsed())
      return run_search(search_size, pred_text, mode, samples, seed, bias, witnesses,
                        reflexive_scan, minimal, as_json);
    if (reproduce->parsed()) return run_reproduce(only, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
