#include <stdexcept>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"
#include "paracon/paracon.hpp"

#include "oracles.hpp"

using namespace paracon;
using nlohmann::json;

namespace {

std::string data_path(const char* file) {
  return std::string(PARACON_DATA_DIR) + "/" + file;
}

void reject(const char* doc) {
  REQUIRE_THROWS_AS(load_structure_json(json::parse(doc), "test"), std::invalid_argument);
}

}  // namespace

TEST_CASE("diamond poset file matches the order-theoretic oracle") {
  LoadedStructure s = load_structure_file(data_path("diamond.json"));
  REQUIRE(s.kind == "poset");
  REQUIRE(s.name == "diamond");
  REQUIRE_FALSE(s.is_matrix());

  const Carrier& c = s.provider->carrier();
  REQUIRE(c.size() == 4);
  std::size_t bot = c.require("bot"), x = c.require("x"), y = c.require("y"),
              top = c.require("top");

  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (std::size_t e : {bot, x, y, top}) leq[e][e] = true;
  leq[bot][x] = leq[bot][y] = leq[bot][top] = true;
  leq[x][top] = leq[y][top] = true;

  for (Mask g = 0; g < 16; ++g)
    REQUIRE(s.provider->consequences(g) == oracles::upper_bounds(leq, g));

  REQUIRE(s.provider->consequences((Mask{1} << x) | (Mask{1} << y)) == (Mask{1} << top));
  REQUIRE(s.provider->consequences(0) == c.full());
}

TEST_CASE("purely reflexive file defaults its name and carries a negation") {
  LoadedStructure s = load_structure_file(data_path("reflexive3.json"));
  REQUIRE(s.kind == "purely-reflexive");
  REQUIRE(s.name == "reflexive3");  // no name field, so the basename wins

  const Carrier& c = s.provider->carrier();
  REQUIRE(c.size() == 3);
  for (Mask g = 0; g < 8; ++g) REQUIRE(s.provider->consequences(g) == g);

  REQUIRE(s.negation.has_value());
  REQUIRE(s.negation->apply(c.require("a")) == c.require("b"));
  REQUIRE(s.negation->apply(c.require("b")) == c.require("a"));
  REQUIRE(s.negation->apply(c.require("c")) == c.require("c"));
  REQUIRE_FALSE(s.fusion.has_value());
  REQUIRE_FALSE(s.bottom.has_value());
}

TEST_CASE("q-consequence file agrees with the builtin sample") {
  LoadedStructure file = load_structure_file(data_path("qmap.json"));
  REQUIRE(file.kind == "q-consequence");
  REQUIRE(file.name == "qmap");

  LoadedStructure builtin = builtin_structure("qsample");
  REQUIRE(file.provider->carrier().size() == builtin.provider->carrier().size());
  for (Mask g = 0; g < 4; ++g)
    REQUIRE(file.provider->consequences(g) == builtin.provider->consequences(g));
}

TEST_CASE("valuation order file mirrors the builtin") {
  LoadedStructure file = load_structure_file(data_path("valorder.json"));
  REQUIRE(file.kind == "valuation-order");
  REQUIRE(file.name == "valorder-sample");  // explicit name beats the basename

  LoadedStructure builtin = builtin_structure("valorder");
  REQUIRE(file.provider->carrier().size() == 2);
  for (Mask g = 0; g < 4; ++g)
    REQUIRE(file.provider->consequences(g) == builtin.provider->consequences(g));
}

TEST_CASE("one-element explicit map separates transitivity from cut") {
  LoadedStructure s = load_structure_file(data_path("cutfail.json"));
  REQUIRE(s.kind == "explicit");
  REQUIRE(s.name == "cutfail");
  REQUIRE(s.provider->consequences(0b0) == 0b1);
  REQUIRE(s.provider->consequences(0b1) == 0b0);

  REQUIRE(check_reflexivity(*s.provider).fails());
  REQUIRE(check_monotonicity(*s.provider).fails());
  REQUIRE(check_transitivity(*s.provider).holds());

  Verdict cut = check_cut_for_sets(*s.provider);
  REQUIRE(cut.fails());
  const auto& w = std::get<CutWitness>(cut.certificate);
  REQUIRE(w.gamma == 0b1);
  REQUIRE(w.delta == 0b0);
  REQUIRE(w.element == 0);
  // Replay: delta sits inside C(gamma) yet its closure escapes.
  REQUIRE((s.provider->consequences(w.gamma) & w.delta) == w.delta);
  REQUIRE(s.provider->entails(w.delta, w.element));
  REQUIRE_FALSE(s.provider->entails(w.gamma, w.element));
}

TEST_CASE("matrix file reproduces the builtin tolerant weak Kleene matrix") {
  LoadedStructure s = load_structure_file(data_path("pwk_matrix.json"));
  REQUIRE(s.is_matrix());
  REQUIRE(s.kind == "matrix");
  const Matrix& loaded = *s.matrix;
  REQUIRE(loaded.name() == "pwk-file");

  Matrix builtin = paraconsistent_weak_kleene();
  REQUIRE(loaded.carrier().size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    REQUIRE(loaded.carrier().name(i) == builtin.carrier().name(i));
  REQUIRE(loaded.signature().size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    REQUIRE(loaded.algebra().table(k) == builtin.algebra().table(k));
  REQUIRE(loaded.designated() == builtin.designated());
  REQUIRE(loaded.roles().negation == builtin.roles().negation);
  REQUIRE(loaded.roles().fusion == builtin.roles().fusion);
  REQUIRE(loaded.roles().disjunction == builtin.roles().disjunction);
  REQUIRE_FALSE(loaded.roles().bottom.has_value());
  REQUIRE_FALSE(loaded.roles().implication.has_value());
}

TEST_CASE("loader rejects malformed documents") {
  SECTION("top level must be an object with a kind") {
    reject("[]");
    reject(R"({"elements": ["a"]})");
    reject(R"({"kind": "frobnicate", "elements": ["a"]})");
  }
  SECTION("unknown fields are flagged, not ignored") {
    reject(R"({"kind": "purely-reflexive", "elements": ["a"], "size": 1})");
  }
  SECTION("explicit tables must cover every subset exactly once") {
    reject(R"({"kind": "explicit", "elements": ["a"],
               "table": [{"premises": [], "yields": []}]})");
    reject(R"({"kind": "explicit", "elements": ["a"],
               "table": [{"premises": [], "yields": []},
                         {"premises": [], "yields": ["a"]}]})");
  }
  SECTION("unknown element names are carrier errors") {
    REQUIRE_THROWS_AS(load_structure_json(json::parse(
                          R"({"kind": "explicit", "elements": ["a"],
                              "table": [{"premises": [], "yields": ["z"]},
                                        {"premises": ["a"], "yields": []}]})"),
                                          "test"),
                      std::domain_error);
  }
  SECTION("poset order relations must list every reflexive pair") {
    reject(R"({"kind": "poset", "elements": ["a", "b"], "leq": [["a", "b"]]})");
  }
  SECTION("q-consequence tables must be monotone") {
    reject(R"({"kind": "q-consequence", "elements": ["a", "b"],
               "table": [{"premises": [], "yields": []},
                         {"premises": ["a"], "yields": ["a"]},
                         {"premises": ["b"], "yields": []},
                         {"premises": ["a", "b"], "yields": []}]})");
  }
  SECTION("matrix roles must match the connective arity") {
    reject(R"({"kind": "matrix",
               "connectives": [{"name": "&", "arity": 2}],
               "algebra": {"elements": ["0", "1"],
                           "tables": {"&": [["0", "0"], ["0", "1"]]}},
               "designated": ["1"], "negation": "&"})");
  }
  SECTION("matrix tables must cover every connective") {
    reject(R"({"kind": "matrix",
               "connectives": [{"name": "~", "arity": 1}, {"name": "&", "arity": 2}],
               "algebra": {"elements": ["0", "1"], "tables": {"~": ["1", "0"]}},
               "designated": ["1"]})");
  }
  SECTION("matrix tables must have carrier-sized rows") {
    reject(R"({"kind": "matrix",
               "connectives": [{"name": "~", "arity": 1}],
               "algebra": {"elements": ["0", "1"], "tables": {"~": ["1"]}},
               "designated": ["1"]})");
  }
  SECTION("valuations must cover the whole domain") {
    reject(R"({"kind": "valuation-order", "domain": ["x", "y"],
               "codomain": {"elements": ["0"], "leq": [["0", "0"]]},
               "valuations": [{"x": "0"}]})");
  }
  SECTION("element connective extras must be total") {
    reject(R"({"kind": "purely-reflexive", "elements": ["a", "b"],
               "negation": {"a": "b"}})");
    reject(R"({"kind": "purely-reflexive", "elements": ["a", "b"],
               "fusion": {"a": {"a": "a", "b": "a"}}})");
  }
}

TEST_CASE("builtin registry resolves every advertised name") {
  auto names = builtin_names();
  REQUIRE(names.size() == 14);
  for (const auto& n : names) {
    LoadedStructure s = resolve_structure(n);
    REQUIRE(s.name == n);
    REQUIRE((s.is_matrix() || s.provider != nullptr));
  }
}

TEST_CASE("structure references fall back to file paths") {
  LoadedStructure s = resolve_structure(data_path("qmap.json"));
  REQUIRE(s.name == "qmap");
  REQUIRE_THROWS_AS(resolve_structure("no-such-structure"), std::invalid_argument);
}

TEST_CASE("reported documents feed back through the loader") {
  SECTION("consequence map round-trip") {
    LoadedStructure s = builtin_structure("poset-a");
    ConsequenceMap map = s.provider->materialize();
    OrderedJson doc = consequence_map_json(map);
    LoadedStructure back = load_structure_json(json::parse(doc.dump()), "round-trip");
    REQUIRE(back.kind == "explicit");
    REQUIRE(back.name == "round-trip");
    for (Mask g = 0; g < 8; ++g) REQUIRE(back.provider->consequences(g) == map.consequences(g));
  }
  SECTION("matrix round-trip keeps tables, roles, and aliases") {
    Matrix m = paraconsistent_weak_kleene_bottom();
    OrderedJson doc = matrix_json(m);
    LoadedStructure back = load_structure_json(json::parse(doc.dump()), "ignored");
    REQUIRE(back.is_matrix());
    REQUIRE(back.matrix->name() == "pwk0");
    REQUIRE(back.matrix->signature().size() == m.signature().size());
    for (std::size_t k = 0; k < m.signature().size(); ++k) {
      REQUIRE(back.matrix->signature().at(k).name == m.signature().at(k).name);
      REQUIRE(back.matrix->algebra().table(k) == m.algebra().table(k));
    }
    REQUIRE(back.matrix->designated() == m.designated());
    REQUIRE(back.matrix->roles().bottom == m.roles().bottom);
    REQUIRE(back.matrix->roles().negation == m.roles().negation);
    // The falsum's 'bot' alias survives the trip.
    std::size_t falsum = *back.matrix->roles().bottom;
    REQUIRE(back.matrix->signature().at(falsum).alias == "bot");
  }
}

TEST_CASE("fnv1a64 matches the published test vectors") {
  REQUIRE(fnv1a64("") == 0xcbf29ce484222325ull);
  REQUIRE(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  REQUIRE(fnv1a64("foobar") == 0x85944171f73967e8ull);
  REQUIRE(digest_hex(fnv1a64("")) == "cbf29ce484222325");
  REQUIRE(digest_hex(0) == "0000000000000000");
}

TEST_CASE("verdict rendering names elements through the carrier") {
  auto carrier = make_carrier({"0", "u", "1"});

  Verdict pair = make_fails(ElementPair{0, 1}, "left conjunct undesignated");
  REQUIRE(verdict_text(pair, carrier.get()) ==
          "fails [pair (0, u)] -- left conjunct undesignated");
  OrderedJson j = verdict_json(pair, carrier.get());
  REQUIRE(j["status"] == "fails");
  REQUIRE(j["certificate"]["type"] == "pair");
  REQUIRE(j["certificate"]["first"] == "0");
  REQUIRE(j["certificate"]["second"] == "u");

  Verdict bounded = make_unknown(SearchBound{2, 3, 302}, "window exhausted");
  std::string text = verdict_text(bounded, carrier.get());
  REQUIRE(text.find("unknown") == 0);
  REQUIRE(text.find("searched 302 formulas") != std::string::npos);
  OrderedJson jb = verdict_json(bounded, carrier.get());
  REQUIRE(jb["bound"]["variables"] == 2);
  REQUIRE(jb["bound"]["depth"] == 3);
  REQUIRE_FALSE(jb.contains("certificate"));

  Verdict plain = make_holds();
  REQUIRE(verdict_text(plain, nullptr) == "holds");
  REQUIRE_FALSE(verdict_json(plain, nullptr).contains("certificate"));
}

TEST_CASE("mask and consequence-map rendering") {
  auto carrier = make_carrier({"a", "b"});
  REQUIRE(mask_json(*carrier, 0b10) == OrderedJson::array({"b"}));
  REQUIRE(mask_json(*carrier, 0b00).empty());

  ConsequenceMap map(carrier, {0b00, 0b01, 0b00, 0b01});
  auto lines = consequence_map_lines(map);
  REQUIRE(lines.size() == 4);
  REQUIRE(lines[0] == "C({}) = {}");
  REQUIRE(lines[3] == "C({a, b}) = {a}");
}
