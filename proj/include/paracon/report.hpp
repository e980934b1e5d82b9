#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "paracon/classify.hpp"
#include "paracon/consequence.hpp"
#include "paracon/quasineg.hpp"
#include "paracon/search.hpp"
#include "paracon/verdict.hpp"

namespace paracon {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson mask_json(const Carrier& carrier, Mask m) {
  OrderedJson arr = OrderedJson::array();
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if ((m >> i) & 1) arr.push_back(carrier.name(i));
  return arr;
}

inline OrderedJson certificate_json(const Certificate& cert, const Carrier* carrier) {
  auto name = [&](std::size_t e) -> std::string {
    return carrier ? carrier->name(e) : std::to_string(e);
  };
  OrderedJson j;
  if (std::holds_alternative<NoCertificate>(cert)) {
    j["type"] = "none";
  } else if (const auto* w = std::get_if<ElementWitness>(&cert)) {
    j["type"] = "element";
    j["element"] = name(w->element);
  } else if (const auto* p = std::get_if<ElementPair>(&cert)) {
    j["type"] = "pair";
    j["first"] = name(p->first);
    j["second"] = name(p->second);
  } else if (const auto* s = std::get_if<SubsetWitness>(&cert)) {
    j["type"] = "premises";
    j["premises"] = carrier ? mask_json(*carrier, s->gamma) : OrderedJson(s->gamma);
    if (s->element) j["missing"] = name(*s->element);
  } else if (const auto* sp = std::get_if<SubsetPair>(&cert)) {
    j["type"] = "premise-pair";
    j["gamma"] = carrier ? mask_json(*carrier, sp->gamma) : OrderedJson(sp->gamma);
    j["sigma"] = carrier ? mask_json(*carrier, sp->sigma) : OrderedJson(sp->sigma);
    j["element"] = name(sp->element);
  } else if (const auto* c = std::get_if<CutWitness>(&cert)) {
    j["type"] = "cut";
    j["gamma"] = carrier ? mask_json(*carrier, c->gamma) : OrderedJson(c->gamma);
    j["delta"] = carrier ? mask_json(*carrier, c->delta) : OrderedJson(c->delta);
    j["element"] = name(c->element);
  } else if (const auto* t = std::get_if<PerElementTable>(&cert)) {
    j["type"] = "partner-table";
    OrderedJson partners;
    for (std::size_t a = 0; a < t->partner.size(); ++a) partners[name(a)] = name(t->partner[a]);
    j["partners"] = std::move(partners);
  } else if (const auto* fx = std::get_if<FixpointCertificate>(&cert)) {
    j["type"] = "fixpoint";
    j["element"] = name(fx->element);
  } else if (const auto* in = std::get_if<InfectiousCertificate>(&cert)) {
    j["type"] = "infectious";
    j["element"] = name(in->element);
  } else if (const auto* fw = std::get_if<FormulaWitness>(&cert)) {
    j["type"] = "formula";
    j["subject"] = fw->subject;
    if (!fw->partner.empty()) j["partner"] = fw->partner;
    if (!fw->assignment.empty()) {
      OrderedJson assign;
      for (std::size_t i = 0; i < fw->assignment.size(); ++i)
        assign[variable_name(i)] = name(fw->assignment[i]);
      j["assignment"] = std::move(assign);
    }
  }
  return j;
}

inline std::string certificate_text(const Certificate& cert, const Carrier* carrier) {
  auto name = [&](std::size_t e) -> std::string {
    return carrier ? carrier->name(e) : std::to_string(e);
  };
  auto set_text = [&](Mask m) -> std::string {
    if (!carrier) return "0x" + std::to_string(m);
    return format_mask(*carrier, m);
  };
  if (std::holds_alternative<NoCertificate>(cert)) return "";
  if (const auto* w = std::get_if<ElementWitness>(&cert)) return "witness " + name(w->element);
  if (const auto* p = std::get_if<ElementPair>(&cert))
    return "pair (" + name(p->first) + ", " + name(p->second) + ")";
  if (const auto* s = std::get_if<SubsetWitness>(&cert)) {
    std::string out = "premises " + set_text(s->gamma);
    if (s->element) out += ", missing " + name(*s->element);
    return out;
  }
  if (const auto* sp = std::get_if<SubsetPair>(&cert))
    return "gamma " + set_text(sp->gamma) + " inside " + set_text(sp->sigma) + ", loses " +
           name(sp->element);
  if (const auto* c = std::get_if<CutWitness>(&cert))
    return "gamma " + set_text(c->gamma) + ", delta " + set_text(c->delta) + ", escapes at " +
           name(c->element);
  if (const auto* t = std::get_if<PerElementTable>(&cert)) {
    std::string out = "partners";
    for (std::size_t a = 0; a < t->partner.size(); ++a)
      out += (a ? ", " : " ") + name(a) + "->" + name(t->partner[a]);
    return out;
  }
  if (const auto* fx = std::get_if<FixpointCertificate>(&cert))
    return "fixpoint " + name(fx->element);
  if (const auto* in = std::get_if<InfectiousCertificate>(&cert))
    return "infectious " + name(in->element);
  if (const auto* fw = std::get_if<FormulaWitness>(&cert)) {
    std::string out = fw->subject;
    if (!fw->partner.empty()) out += " with " + fw->partner;
    if (!fw->assignment.empty()) {
      out += " at";
      for (std::size_t i = 0; i < fw->assignment.size(); ++i)
        out += (i ? ", " : " ") + variable_name(i) + "=" + name(fw->assignment[i]);
    }
    return out;
  }
  return "";
}

inline OrderedJson verdict_json(const Verdict& v, const Carrier* carrier) {
  OrderedJson j;
  j["status"] = to_string(v.status);
  OrderedJson cert = certificate_json(v.certificate, carrier);
  if (!cert.empty() && cert["type"] != "none") j["certificate"] = std::move(cert);
  if (v.bound)
    j["bound"] = OrderedJson{{"variables", v.bound->variables},
                             {"depth", v.bound->depth},
                             {"formulas", v.bound->formulas}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline std::string verdict_text(const Verdict& v, const Carrier* carrier) {
  std::string out = to_string(v.status);
  std::string cert = certificate_text(v.certificate, carrier);
  if (!cert.empty()) out += " [" + cert + "]";
  if (!v.note.empty()) out += " -- " + v.note;
  if (v.bound)
    out += " (searched " + std::to_string(v.bound->formulas) + " formulas, " +
           std::to_string(v.bound->variables) + " vars, depth " +
           std::to_string(v.bound->depth) + ")";
  return out;
}

inline OrderedJson consequence_map_json(const ConsequenceMap& map) {
  const Carrier& carrier = map.carrier();
  OrderedJson j;
  j["kind"] = "explicit";
  OrderedJson elems = OrderedJson::array();
  for (std::size_t i = 0; i < carrier.size(); ++i) elems.push_back(carrier.name(i));
  j["elements"] = std::move(elems);
  OrderedJson rows = OrderedJson::array();
  for (std::size_t s = 0; s < map.table().size(); ++s) {
    OrderedJson row;
    row["premises"] = mask_json(carrier, static_cast<Mask>(s));
    row["yields"] = mask_json(carrier, map.table()[s]);
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

inline std::vector<std::string> consequence_map_lines(const ConsequenceMap& map) {
  const Carrier& carrier = map.carrier();
  std::vector<std::string> out;
  for (std::size_t s = 0; s < map.table().size(); ++s)
    out.push_back("C(" + format_mask(carrier, static_cast<Mask>(s)) + ") = " +
                  format_mask(carrier, map.table()[s]));
  return out;
}

// Emits the same shape the structure loader accepts, so any reported matrix
// can be fed straight back in.
inline OrderedJson matrix_json(const Matrix& m) {
  const Carrier& carrier = m.carrier();
  const Signature& sig = m.signature();
  const std::size_t n = carrier.size();
  OrderedJson j;
  j["kind"] = "matrix";
  j["name"] = m.name();
  OrderedJson conns = OrderedJson::array();
  for (const auto& c : sig.connectives()) {
    OrderedJson cj;
    cj["name"] = c.name;
    cj["arity"] = c.arity;
    if (c.alias != c.name) cj["alias"] = c.alias;
    conns.push_back(std::move(cj));
  }
  j["connectives"] = std::move(conns);
  OrderedJson elems = OrderedJson::array();
  for (std::size_t i = 0; i < n; ++i) elems.push_back(carrier.name(i));
  OrderedJson tables;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    const auto& flat = m.algebra().table(k);
    const std::size_t arity = sig.at(k).arity;
    if (arity == 0) {
      tables[sig.at(k).name] = carrier.name(flat[0]);
      continue;
    }
    // Rebuild the nested rows, outermost index = first argument.
    std::function<OrderedJson(std::size_t, std::size_t, std::size_t)> build =
        [&](std::size_t level, std::size_t offset, std::size_t stride) -> OrderedJson {
      OrderedJson arr = OrderedJson::array();
      for (std::size_t i = 0; i < n; ++i) {
        if (level + 1 == arity)
          arr.push_back(carrier.name(flat[offset + i * stride]));
        else
          arr.push_back(build(level + 1, offset + i * stride, stride * n));
      }
      return arr;
    };
    // The first argument varies fastest in the flat table, so it is the
    // outermost JSON level with stride 1.
    tables[sig.at(k).name] = build(0, 0, 1);
  }
  j["algebra"] = OrderedJson{{"elements", std::move(elems)}, {"tables", std::move(tables)}};
  j["designated"] = mask_json(carrier, m.designated());
  if (m.roles().negation) j["negation"] = sig.at(*m.roles().negation).name;
  if (m.roles().fusion) j["fusion"] = sig.at(*m.roles().fusion).name;
  if (m.roles().disjunction) j["disjunction"] = sig.at(*m.roles().disjunction).name;
  if (m.roles().bottom) j["bottom"] = sig.at(*m.roles().bottom).name;
  if (m.roles().implication) j["implication"] = sig.at(*m.roles().implication).name;
  return j;
}

inline std::vector<std::string> matrix_table_lines(const Matrix& m) {
  const Carrier& carrier = m.carrier();
  const Signature& sig = m.signature();
  const std::size_t n = carrier.size();
  std::vector<std::string> out;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    const auto& c = sig.at(k);
    if (c.arity == 0) {
      out.push_back(c.name + " = " + carrier.name(m.algebra().table(k)[0]));
    } else if (c.arity == 1) {
      std::string line = c.name + ":";
      for (std::size_t a = 0; a < n; ++a)
        line += " " + carrier.name(a) + "->" + carrier.name(m.algebra().apply1(k, a));
      out.push_back(line);
    } else if (c.arity == 2) {
      std::string head = c.name + " |";
      for (std::size_t b = 0; b < n; ++b) head += " " + carrier.name(b);
      out.push_back(head);
      for (std::size_t a = 0; a < n; ++a) {
        std::string line = carrier.name(a) + " |";
        for (std::size_t b = 0; b < n; ++b) line += " " + carrier.name(m.algebra().apply2(k, a, b));
        out.push_back(line);
      }
    } else {
      out.push_back(c.name + ": arity " + std::to_string(c.arity) + " table elided");
    }
  }
  return out;
}

inline OrderedJson theorem_check_json(const TheoremCheck& row) {
  OrderedJson j;
  j["name"] = row.name;
  if (!row.gates.empty()) j["gates"] = row.gates;
  if (!row.unmet.empty()) j["unmet"] = row.unmet;
  j["antecedent"] = to_string(row.antecedent);
  j["consequent"] = to_string(row.consequent);
  j["outcome"] = to_string(row.outcome);
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

inline std::string theorem_check_text(const TheoremCheck& row) {
  std::string out = row.name + ": " + to_string(row.outcome);
  if (!row.unmet.empty()) {
    out += " (unmet:";
    for (const auto& g : row.unmet) out += " " + g;
    out += ")";
  }
  if (!row.note.empty()) out += " -- " + row.note;
  return out;
}

inline OrderedJson kite_report_json(const KiteReport& report, const Carrier& carrier) {
  OrderedJson j;
  OrderedJson props = OrderedJson::array();
  for (const auto& p : report.properties) {
    OrderedJson row;
    row["name"] = p.name;
    row["verdict"] = verdict_json(p.verdict, &carrier);
    props.push_back(std::move(row));
  }
  j["properties"] = std::move(props);
  j["vacuous-formulas"] = report.vacuous_formulas;
  j["all-vacuous"] = report.all_vacuous;
  j["bound"] = OrderedJson{{"variables", report.bound.variables},
                           {"depth", report.bound.depth},
                           {"formulas", report.bound.formulas}};
  return j;
}

}  // namespace paracon
