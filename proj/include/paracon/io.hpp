#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "paracon/classify.hpp"
#include "paracon/consequence.hpp"
#include "paracon/matrix.hpp"
#include "paracon/poset.hpp"

namespace paracon {

// Everything a structure file or builtin can describe: an abstract
// consequence (provider set) or a matrix (matrix set), plus optional
// element-level connectives for the abstract case.
struct LoadedStructure {
  std::string name;
  std::string kind;
  ProviderPtr provider;
  std::optional<Matrix> matrix;
  std::optional<NegationMap> negation;
  std::optional<FusionMap> fusion;
  std::optional<std::size_t> bottom;

  bool is_matrix() const { return matrix.has_value(); }
};

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

namespace detail {

using nlohmann::json;

[[noreturn]] inline void bad(const std::string& msg) {
  throw std::invalid_argument("structure: " + msg);
}

inline void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) bad("unknown field '" + it.key() + "' in " + where);
  }
}

inline std::vector<std::string> name_list(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) bad(std::string(what) + " must be a nonempty array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must contain only names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Mask mask_from_names(const Carrier& carrier, const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of element names");
  Mask m = 0;
  for (const auto& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must contain only element names");
    m |= Mask{1} << carrier.require(e.get<std::string>());
  }
  return m;
}

// Rows {premises, yields}, one per subset of the carrier, any order.
inline ConsequenceMap map_from_rows(CarrierPtr carrier, const json& rows, const char* what) {
  if (!rows.is_array()) bad(std::string(what) + " must be an array of rows");
  const std::size_t subsets = std::size_t{1} << carrier->size();
  std::vector<Mask> table(subsets, 0);
  std::vector<bool> seen(subsets, false);
  for (const auto& row : rows) {
    if (!row.is_object()) bad(std::string(what) + " rows must be objects");
    require_keys(row, {"premises", "yields"}, what);
    if (!row.contains("premises") || !row.contains("yields"))
      bad(std::string(what) + " rows need 'premises' and 'yields'");
    Mask g = mask_from_names(*carrier, row["premises"], "premises");
    if (seen[g]) bad(std::string(what) + " lists " + format_mask(*carrier, g) + " twice");
    seen[g] = true;
    table[g] = mask_from_names(*carrier, row["yields"], "yields");
  }
  for (std::size_t s = 0; s < subsets; ++s)
    if (!seen[s])
      bad(std::string(what) + " is missing the row for " +
          format_mask(*carrier, static_cast<Mask>(s)));
  return ConsequenceMap(std::move(carrier), std::move(table));
}

inline Poset poset_from(const json& elements, const json& leq) {
  auto carrier = make_carrier(name_list(elements, "'elements'"));
  if (!leq.is_array()) bad("'leq' must be an array of [below, above] pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      bad("'leq' entries must be [below, above] name pairs");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return Poset::from_names(carrier, pairs);
}

inline NegationMap negation_from(CarrierPtr carrier, const json& j) {
  if (!j.is_object()) bad("'negation' must map element names to element names");
  std::vector<std::size_t> map(carrier->size());
  std::vector<bool> seen(carrier->size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) bad("'negation' values must be element names");
    std::size_t a = carrier->require(it.key());
    seen[a] = true;
    map[a] = carrier->require(it.value().get<std::string>());
  }
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (!seen[a]) bad("'negation' is missing '" + carrier->name(a) + "'");
  return NegationMap(std::move(carrier), std::move(map));
}

inline FusionMap fusion_from(CarrierPtr carrier, const json& j) {
  if (!j.is_object()) bad("'fusion' must be a nested map of element names");
  const std::size_t n = carrier->size();
  std::vector<std::size_t> map(n * n);
  std::vector<bool> seen(n * n, false);
  for (auto left = j.begin(); left != j.end(); ++left) {
    std::size_t a = carrier->require(left.key());
    if (!left.value().is_object()) bad("'fusion' rows must map element names to element names");
    for (auto right = left.value().begin(); right != left.value().end(); ++right) {
      std::size_t b = carrier->require(right.key());
      if (!right.value().is_string()) bad("'fusion' values must be element names");
      seen[a + n * b] = true;
      map[a + n * b] = carrier->require(right.value().get<std::string>());
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!seen[a + n * b])
        bad("'fusion' is missing the pair ('" + carrier->name(a) + "', '" + carrier->name(b) +
            "')");
  return FusionMap(std::move(carrier), std::move(map));
}

inline void attach_extras(LoadedStructure& out, CarrierPtr carrier, const json& j) {
  if (j.contains("negation")) out.negation = negation_from(carrier, j["negation"]);
  if (j.contains("fusion")) out.fusion = fusion_from(carrier, j["fusion"]);
  if (j.contains("bottom")) {
    if (!j["bottom"].is_string()) bad("'bottom' must be an element name");
    out.bottom = carrier->require(j["bottom"].get<std::string>());
  }
}

inline void flatten_table(const json& node, std::size_t arity, std::size_t n,
                          const Carrier& carrier, const std::string& conn,
                          std::vector<std::size_t>& out) {
  std::size_t entries = 1;
  for (std::size_t i = 0; i < arity; ++i) entries *= n;
  out.resize(entries);
  if (arity == 0) {
    if (!node.is_string()) bad("table for '" + conn + "' must be a single element name");
    out[0] = carrier.require(node.get<std::string>());
    return;
  }
  for (std::size_t idx = 0; idx < entries; ++idx) {
    const json* nav = &node;
    std::size_t rest = idx;
    for (std::size_t m = 0; m < arity; ++m) {
      if (!nav->is_array() || nav->size() != n)
        bad("table for '" + conn + "' must nest arrays of " + std::to_string(n) + " entries");
      nav = &(*nav)[rest % n];
      rest /= n;
    }
    if (!nav->is_string()) bad("table for '" + conn + "' must bottom out in element names");
    out[idx] = carrier.require(nav->get<std::string>());
  }
}

inline Matrix matrix_from(const json& j, const std::string& name) {
  require_keys(j,
               {"kind", "name", "connectives", "algebra", "designated", "negation", "fusion",
                "disjunction", "bottom", "implication"},
               "matrix");
  for (const char* req : {"connectives", "algebra", "designated"})
    if (!j.contains(req)) bad(std::string("matrix needs '") + req + "'");

  std::vector<Connective> conns;
  if (!j["connectives"].is_array() || j["connectives"].empty())
    bad("'connectives' must be a nonempty array");
  for (const auto& c : j["connectives"]) {
    if (!c.is_object()) bad("'connectives' entries must be objects");
    require_keys(c, {"name", "arity", "alias"}, "connective");
    if (!c.contains("name") || !c["name"].is_string() || !c.contains("arity") ||
        !c["arity"].is_number_unsigned())
      bad("connectives need a 'name' and an unsigned 'arity'");
    Connective conn;
    conn.name = c["name"].get<std::string>();
    conn.arity = c["arity"].get<std::size_t>();
    if (c.contains("alias")) {
      if (!c["alias"].is_string()) bad("'alias' must be a string");
      conn.alias = c["alias"].get<std::string>();
    }
    conns.push_back(std::move(conn));
  }
  Signature sig(std::move(conns));

  const json& alg = j["algebra"];
  if (!alg.is_object()) bad("'algebra' must be an object");
  require_keys(alg, {"elements", "tables"}, "algebra");
  if (!alg.contains("elements") || !alg.contains("tables"))
    bad("'algebra' needs 'elements' and 'tables'");
  auto carrier = make_carrier(name_list(alg["elements"], "'elements'"));
  const std::size_t n = carrier->size();

  if (!alg["tables"].is_object()) bad("'tables' must map connective names to tables");
  std::vector<std::vector<std::size_t>> tables(sig.size());
  std::vector<bool> have(sig.size(), false);
  for (auto it = alg["tables"].begin(); it != alg["tables"].end(); ++it) {
    std::size_t k = sig.require(it.key());
    if (have[k]) bad("two tables for '" + sig.at(k).name + "'");
    have[k] = true;
    flatten_table(it.value(), sig.at(k).arity, n, *carrier, sig.at(k).name, tables[k]);
  }
  for (std::size_t k = 0; k < sig.size(); ++k)
    if (!have[k]) bad("missing table for '" + sig.at(k).name + "'");

  Mask designated = mask_from_names(*carrier, j["designated"], "'designated'");

  MatrixRoles roles;
  auto role = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) bad(std::string("'") + key + "' must name a connective");
    return sig.require(j[key].get<std::string>());
  };
  roles.negation = role("negation");
  roles.fusion = role("fusion");
  roles.disjunction = role("disjunction");
  roles.bottom = role("bottom");
  roles.implication = role("implication");

  return Matrix(name, FiniteAlgebra(std::move(carrier), std::move(sig), std::move(tables)),
                designated, roles);
}

}  // namespace detail

inline LoadedStructure load_structure_json(const nlohmann::json& j,
                                           const std::string& fallback_name) {
  using detail::bad;
  if (!j.is_object()) bad("top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) bad("top level needs a 'kind' string");
  const std::string kind = j["kind"].get<std::string>();

  LoadedStructure out;
  out.kind = kind;
  out.name = fallback_name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("'name' must be a string");
    out.name = j["name"].get<std::string>();
  }

  if (kind == "matrix") {
    out.matrix = detail::matrix_from(j, out.name);
    return out;
  }

  if (kind == "explicit" || kind == "q-consequence") {
    detail::require_keys(
        j, {"kind", "name", "elements", "table", "negation", "fusion", "bottom"}, kind.c_str());
    if (!j.contains("elements") || !j.contains("table"))
      bad(kind + " needs 'elements' and 'table'");
    auto carrier = make_carrier(detail::name_list(j["elements"], "'elements'"));
    ConsequenceMap map = detail::map_from_rows(carrier, j["table"], "'table'");
    out.provider =
        kind == "explicit" ? explicit_consequence(std::move(map)) : q_consequence_provider(map);
    detail::attach_extras(out, carrier, j);
    return out;
  }

  if (kind == "purely-reflexive") {
    detail::require_keys(j, {"kind", "name", "elements", "negation", "fusion", "bottom"},
                         kind.c_str());
    if (!j.contains("elements")) bad(kind + " needs 'elements'");
    auto carrier = make_carrier(detail::name_list(j["elements"], "'elements'"));
    out.provider = purely_reflexive(carrier);
    detail::attach_extras(out, carrier, j);
    return out;
  }

  if (kind == "poset" || kind == "poset-dual") {
    detail::require_keys(j, {"kind", "name", "elements", "leq", "negation", "fusion", "bottom"},
                         kind.c_str());
    if (!j.contains("elements") || !j.contains("leq")) bad(kind + " needs 'elements' and 'leq'");
    Poset poset = detail::poset_from(j["elements"], j["leq"]);
    CarrierPtr carrier = poset.carrier_ptr();
    out.provider = poset_consequence(std::move(poset),
                                     kind == "poset" ? PosetRule::up : PosetRule::down);
    detail::attach_extras(out, carrier, j);
    return out;
  }

  if (kind == "valuation-order") {
    detail::require_keys(
        j, {"kind", "name", "domain", "codomain", "valuations", "negation", "fusion", "bottom"},
        kind.c_str());
    for (const char* req : {"domain", "codomain", "valuations"})
      if (!j.contains(req)) bad(std::string(kind) + " needs '" + req + "'");
    auto domain = make_carrier(detail::name_list(j["domain"], "'domain'"));
    if (!j["codomain"].is_object()) bad("'codomain' must be an object");
    detail::require_keys(j["codomain"], {"elements", "leq"}, "codomain");
    if (!j["codomain"].contains("elements") || !j["codomain"].contains("leq"))
      bad("'codomain' needs 'elements' and 'leq'");
    Poset codomain = detail::poset_from(j["codomain"]["elements"], j["codomain"]["leq"]);
    if (!j["valuations"].is_array() || j["valuations"].empty())
      bad("'valuations' must be a nonempty array");
    std::vector<std::vector<std::size_t>> valuations;
    for (const auto& v : j["valuations"]) {
      if (!v.is_object()) bad("'valuations' entries must map domain names to codomain names");
      std::vector<std::size_t> img(domain->size());
      std::vector<bool> seen(domain->size(), false);
      for (auto it = v.begin(); it != v.end(); ++it) {
        std::size_t d = domain->require(it.key());
        if (!it.value().is_string()) bad("valuation values must be codomain names");
        img[d] = codomain.carrier().require(it.value().get<std::string>());
        seen[d] = true;
      }
      for (std::size_t d = 0; d < seen.size(); ++d)
        if (!seen[d]) bad("a valuation is missing '" + domain->name(d) + "'");
      valuations.push_back(std::move(img));
    }
    out.provider = valuation_order_consequence(domain, std::move(codomain), std::move(valuations));
    detail::attach_extras(out, domain, j);
    return out;
  }

  bad("unknown kind '" + kind + "'");
}

inline LoadedStructure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("structure: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("structure: '" + path + "' is not valid JSON: " + e.what());
  }
  std::string base = path;
  if (auto slash = base.find_last_of('/'); slash != std::string::npos) base = base.substr(slash + 1);
  if (auto dot = base.find_last_of('.'); dot != std::string::npos) base = base.substr(0, dot);
  return load_structure_json(j, base);
}

// --- builtins ---------------------------------------------------------------

inline std::vector<std::string> builtin_names() {
  return {"poset-a", "poset-a-dual", "poset-b",  "poset-b-dual", "reflexive2",
          "reflexive3", "qsample",   "valorder", "boolean2",     "wk",
          "pwk",        "pwk0",      "godel3",   "godel4"};
}

inline LoadedStructure builtin_structure(const std::string& name) {
  LoadedStructure out;
  out.name = name;

  auto as_matrix = [&](Matrix m) {
    out.kind = "matrix";
    out.matrix = std::move(m);
    return out;
  };

  if (name == "boolean2") return as_matrix(boolean2());
  if (name == "wk") return as_matrix(weak_kleene());
  if (name == "pwk") return as_matrix(paraconsistent_weak_kleene());
  if (name == "pwk0") return as_matrix(paraconsistent_weak_kleene_bottom());
  if (name == "godel3") return as_matrix(godel3());
  if (name == "godel4") return as_matrix(godel4());

  auto chain_poset = [](std::vector<std::string> names,
                        std::vector<std::pair<std::string, std::string>> strict) {
    auto carrier = make_carrier(names);
    for (const auto& e : names) strict.emplace_back(e, e);
    return Poset::from_names(carrier, strict);
  };

  if (name == "poset-a" || name == "poset-a-dual") {
    Poset p = chain_poset({"0", "1", "2"}, {{"0", "1"}});
    out.kind = name == "poset-a" ? "poset" : "poset-dual";
    out.provider =
        poset_consequence(std::move(p), name == "poset-a" ? PosetRule::up : PosetRule::down);
    return out;
  }
  if (name == "poset-b") {
    Poset p = chain_poset({"0", "1", "2"}, {{"0", "2"}, {"1", "2"}});
    out.kind = "poset";
    out.provider = poset_consequence(std::move(p), PosetRule::up);
    return out;
  }
  if (name == "poset-b-dual") {
    Poset p = chain_poset({"0", "1", "2"}, {{"2", "0"}, {"2", "1"}});
    out.kind = "poset-dual";
    out.provider = poset_consequence(std::move(p), PosetRule::down);
    return out;
  }
  if (name == "reflexive2" || name == "reflexive3") {
    out.kind = "purely-reflexive";
    out.provider = purely_reflexive(
        name == "reflexive2" ? make_carrier({"a", "b"}) : make_carrier({"a", "b", "c"}));
    return out;
  }
  if (name == "qsample") {
    // W keeps only 'a': monotone, weakly idempotent, and full of gaps.
    auto carrier = make_carrier({"a", "b"});
    std::vector<Mask> w = {0b00, 0b01, 0b00, 0b01};
    out.kind = "q-consequence";
    out.provider = q_consequence_provider(ConsequenceMap(carrier, std::move(w)));
    return out;
  }
  if (name == "valorder") {
    auto domain = make_carrier({"x", "y"});
    auto codomain_carrier = make_carrier({"0", "1", "2"});
    Poset codomain = Poset::from_names(
        codomain_carrier, {{"0", "0"}, {"1", "1"}, {"2", "2"}, {"0", "1"}});
    out.kind = "valuation-order";
    out.provider = valuation_order_consequence(domain, std::move(codomain), {{0, 2}});
    return out;
  }
  throw std::invalid_argument("no builtin named '" + name + "'");
}

// A builtin name or a path to a JSON file.
inline LoadedStructure resolve_structure(const std::string& ref) {
  for (const std::string& b : builtin_names())
    if (b == ref) return builtin_structure(ref);
  return load_structure_file(ref);
}

}  // namespace paracon
