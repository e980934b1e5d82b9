#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paracon/carrier.hpp"

namespace paracon {

enum class Status { holds, fails, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    default: return "unknown";
  }
}

// ---- certificate payloads ----------------------------------------------
// Every decisive verdict carries data sufficient to re-check it against raw
// consequence queries; the replay helpers live next to each classifier.

struct NoCertificate {};

// Single element of the carrier (NF witness, ECQ non-exploding element, ...).
struct ElementWitness {
  std::size_t element;
};

// Ordered element pair (schema countermodels like fusion-elim).
struct ElementPair {
  std::size_t first, second;
};

// Premise set plus an optional offending element (reflexivity failure etc.).
struct SubsetWitness {
  Mask gamma;
  std::optional<std::size_t> element;
};

// Γ ⊆ Σ with an element in C(Γ) \ C(Σ) (monotonicity failure).
struct SubsetPair {
  Mask gamma, sigma;
  std::size_t element;
};

// Cut failure: Δ ⊆ C(Γ) but the conclusion set escapes C(Γ) at `element`.
struct CutWitness {
  Mask gamma, delta;
  std::size_t element;
};

// For each carrier element α an explosion partner β (NF failure table).
struct PerElementTable {
  std::vector<std::size_t> partner;
};

// Designated algebra element fixed by every connective (matrix NF "holds").
struct FixpointCertificate {
  std::size_t element;
};

// Designated element that every table propagates (matrix NFF "holds").
struct InfectiousCertificate {
  std::size_t element;
};

// Printed formula(s) plus an optional variable assignment (element indices
// per variable, little-endian variable order).
struct FormulaWitness {
  std::string subject;
  std::string partner;                  // empty when unused
  std::vector<std::size_t> assignment;  // empty when unused
};

using Certificate =
    std::variant<NoCertificate, ElementWitness, ElementPair, SubsetWitness, SubsetPair, CutWitness,
                 PerElementTable, FixpointCertificate, InfectiousCertificate, FormulaWitness>;

// Fragment window that bounded a non-exhaustive answer.
struct SearchBound {
  std::size_t variables = 0;
  std::size_t depth = 0;
  std::size_t formulas = 0;
};

struct Verdict {
  Status status = Status::unknown;
  Certificate certificate = NoCertificate{};
  std::optional<SearchBound> bound;
  std::string note;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
  bool unknown() const { return status == Status::unknown; }
};

inline Verdict make_holds(Certificate c = NoCertificate{}, std::string note = {}) {
  return Verdict{Status::holds, std::move(c), std::nullopt, std::move(note)};
}
inline Verdict make_fails(Certificate c = NoCertificate{}, std::string note = {}) {
  return Verdict{Status::fails, std::move(c), std::nullopt, std::move(note)};
}
inline Verdict make_unknown(SearchBound b, std::string note = {}) {
  return Verdict{Status::unknown, NoCertificate{}, b, std::move(note)};
}

// Raised when an operation's stated precondition does not apply to the input
// (distinct from malformed input, which raises std::invalid_argument).
class inapplicable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paracon
