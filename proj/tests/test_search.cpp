#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "paracon/classify.hpp"
#include "paracon/search.hpp"

using namespace paracon;

TEST_CASE("generator matches the published splitmix64 sequence") {
  Splitmix64 rng(0x123456789abcdefull);
  std::uint64_t state = 0x123456789abcdefull;
  for (int i = 0; i < 8; ++i) REQUIRE(rng.next() == oracles::splitmix64_step(state));
  Splitmix64 again(0x123456789abcdefull);
  double d = again.next_double();
  REQUIRE(d >= 0.0);
  REQUIRE(d < 1.0);
}

TEST_CASE("space sizes and the enumeration cap") {
  REQUIRE(unconstrained_space(1) == 4);
  REQUIRE(unconstrained_space(2) == 256);
  REQUIRE(unconstrained_space(3) == 16777216);
  REQUIRE(reflexive_space(2) == 16);
  REQUIRE(reflexive_space(3) == 4096);
  REQUIRE(reflexive_space(2) == oracles::reflexive_count(2));
  REQUIRE(reflexive_space(3) == oracles::reflexive_count(3));
  REQUIRE_THROWS_AS(unconstrained_space(4), std::domain_error);
  REQUIRE_THROWS_AS(reflexive_space(4), std::domain_error);
}

TEST_CASE("table indexing is a little-endian bijection") {
  for (std::uint64_t idx : {0ull, 1ull, 37ull, 255ull}) {
    std::vector<Mask> table = table_from_index(2, idx);
    std::uint64_t back = 0, place = 1;
    for (Mask row : table) {
      back += row * place;
      place *= 4;
    }
    REQUIRE(back == idx);
  }
}

TEST_CASE("the reflexive scan hits every reflexive table exactly once") {
  std::set<std::vector<Mask>> seen;
  for (std::uint64_t idx = 0; idx < reflexive_space(2); ++idx) {
    std::vector<Mask> table = reflexive_table_from_index(2, idx);
    for (Mask g = 0; g < 4; ++g) REQUIRE((table[g] & g) == g);
    REQUIRE(seen.insert(table).second);
  }
  std::size_t reflexive_in_full_scan = 0;
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    std::vector<Mask> table = table_from_index(2, idx);
    bool reflexive = true;
    for (Mask g = 0; g < 4; ++g)
      if ((table[g] & g) != g) reflexive = false;
    if (reflexive) {
      ++reflexive_in_full_scan;
      REQUIRE(seen.count(table) == 1);
    }
  }
  REQUIRE(reflexive_in_full_scan == 16);
}

TEST_CASE("predicate atoms agree with the reference checks on every small table") {
  StructurePredicate mono = StructurePredicate::parse("monotone");
  StructurePredicate trans = StructurePredicate::parse("transitive");
  StructurePredicate cut = StructurePredicate::parse("cut-for-sets");
  StructurePredicate tarskian = StructurePredicate::parse("tarskian");
  StructurePredicate nf = StructurePredicate::parse("nf");
  auto c = make_carrier({"a", "b"});
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    std::vector<Mask> table = table_from_index(2, idx);
    REQUIRE(mono.evaluate(table, 2) == oracles::table_monotone_ref(table, 2));
    REQUIRE(trans.evaluate(table, 2) == oracles::table_transitive_ref(table, 2));
    REQUIRE(cut.evaluate(table, 2) == oracles::table_cut_ref(table, 2));

    ExplicitConsequence p(ConsequenceMap(c, table));
    REQUIRE(tarskian.evaluate(table, 2) == is_tarskian(p));
    REQUIRE(nf.evaluate(table, 2) == check_nf_paraconsistency(p).holds());
  }
}

TEST_CASE("predicate parsing round-trips and rejects unknown atoms") {
  StructurePredicate pred = StructurePredicate::parse("reflexive,nf");
  REQUIRE(pred.render() == "reflexive,nf");
  REQUIRE(pred.wants(Atom::reflexive));
  REQUIRE_FALSE(pred.wants(Atom::monotone));
  REQUIRE_THROWS_AS(StructurePredicate::parse("sparkly"), std::invalid_argument);
  REQUIRE_THROWS_AS(StructurePredicate::parse(""), std::invalid_argument);
}

TEST_CASE("exhaustive counts at two elements") {
  REQUIRE(enumerate_structures(2, StructurePredicate::parse("nf")).matched == 180);
  REQUIRE(enumerate_structures(2, StructurePredicate::parse("reflexive")).matched == 16);
  REQUIRE(enumerate_structures(2, StructurePredicate::parse("reflexive,nf")).matched == 0);
  EnumerationResult tarskian = enumerate_structures(2, StructurePredicate::parse("tarskian"));
  std::uint64_t direct = 0;
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    std::vector<Mask> table = table_from_index(2, idx);
    ExplicitConsequence p(ConsequenceMap(make_carrier({"a", "b"}), table));
    if (is_tarskian(p)) ++direct;
  }
  REQUIRE(tarskian.matched == direct);
}

TEST_CASE("witness indices are the first matches in scan order") {
  EnumerationResult res = enumerate_structures(2, StructurePredicate::parse("nf"), 3);
  REQUIRE(res.witness_indices.size() == 3);
  REQUIRE(res.witnesses.size() == 3);
  std::size_t found = 0;
  for (std::uint64_t idx = 0; idx < 256 && found < 3; ++idx) {
    std::vector<Mask> table = table_from_index(2, idx);
    if (StructurePredicate::parse("nf").evaluate(table, 2)) {
      REQUIRE(res.witness_indices[found] == idx);
      REQUIRE(res.witnesses[found].table() == table);
      ++found;
    }
  }
  REQUIRE(found == 3);
}

TEST_CASE("enumeration is stable across worker counts") {
  setenv("PARACON_THREADS", "1", 1);
  EnumerationResult one = enumerate_structures(2, StructurePredicate::parse("nf"), 4);
  setenv("PARACON_THREADS", "7", 1);
  EnumerationResult seven = enumerate_structures(2, StructurePredicate::parse("nf"), 4);
  unsetenv("PARACON_THREADS");
  REQUIRE(one.matched == seven.matched);
  REQUIRE(one.witness_indices == seven.witness_indices);
  for (std::size_t i = 0; i < one.witnesses.size(); ++i)
    REQUIRE(one.witnesses[i].table() == seven.witnesses[i].table());
  REQUIRE(seven.threads == 7);
}

TEST_CASE("random tables are reproducible and respect the bias extremes") {
  ConsequenceMap a = random_structure(3, 42, 0.5);
  ConsequenceMap b = random_structure(3, 42, 0.5);
  REQUIRE(a.table() == b.table());
  ConsequenceMap c = random_structure(3, 43, 0.5);
  REQUIRE(a.table() != c.table());

  ConsequenceMap full = random_structure(2, 1, 1.0);
  for (Mask row : full.table()) REQUIRE(row == 0b11);
  ConsequenceMap empty = random_structure(2, 1, 0.0);
  for (Mask row : empty.table()) REQUIRE(row == 0);
}

TEST_CASE("sampling counts matches and keeps regenerable witnesses") {
  SampleResult res = sample_structures(2, StructurePredicate::parse("nf"), 200, 7, 0.5);
  REQUIRE(res.rng == "splitmix64");
  REQUIRE(res.matched == 139);
  REQUIRE(res.witness_draws == std::vector<std::size_t>{1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
    ConsequenceMap regenerated = random_structure(2, res.seed + res.witness_draws[i], res.bias);
    REQUIRE(regenerated.table() == res.witnesses[i].table());
    REQUIRE(StructurePredicate::parse("nf").evaluate(regenerated.table(), 2));
  }
}

TEST_CASE("smallest examples, unrestricted and under reflexivity") {
  auto nf = minimal_example(StructurePredicate::parse("nf"));
  REQUIRE(nf.has_value());
  REQUIRE(nf->elements == 1);
  REQUIRE(nf->index == 0);
  REQUIRE_FALSE(nf->reflexive_pruned);

  auto refl_nf = minimal_example(StructurePredicate::parse("reflexive,nf"));
  REQUIRE(refl_nf.has_value());
  REQUIRE(refl_nf->elements == 3);
  REQUIRE(refl_nf->index == 0);
  REQUIRE(refl_nf->reflexive_pruned);
  // The first reflexive candidate adds nothing to any premise set.
  for (std::size_t g = 0; g < refl_nf->map.table().size(); ++g)
    REQUIRE(refl_nf->map.table()[g] == static_cast<Mask>(g));

  // A monotone operator with an exploding singleton can never be
  // partner-free, so this combination has no example at any size.
  auto impossible = minimal_example(StructurePredicate::parse("monotone,exploding-singleton,nf"));
  REQUIRE_FALSE(impossible.has_value());
}

TEST_CASE("the purely reflexive table is the first pruned witness at three elements") {
  EnumerationResult res =
      enumerate_structures(3, StructurePredicate::parse("reflexive,nf"), 1, true);
  REQUIRE(res.space == 4096);
  REQUIRE(res.matched > 0);
  REQUIRE(res.witnesses.size() == 1);
  for (std::size_t g = 0; g < res.witnesses[0].table().size(); ++g)
    REQUIRE(res.witnesses[0].table()[g] == static_cast<Mask>(g));
  ExplicitConsequence p(res.witnesses[0]);
  REQUIRE(check_nf_paraconsistency(p).holds());
}

TEST_CASE("structural statements hold across the whole two-element space") {
  TheoremSweep sweep = run_theorem_sweep(2);
  REQUIRE(sweep.elements == 2);
  REQUIRE(sweep.tables == 256);
  REQUIRE(sweep.suites == 16384);
  REQUIRE(sweep.rows == 114688);
  REQUIRE(sweep.gated_out == 62400);
  REQUIRE(sweep.vacuous == 11776);
  REQUIRE(sweep.violations.empty());
  REQUIRE_THROWS_AS(run_theorem_sweep(3), std::domain_error);
}
