#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "paracon/classify.hpp"
#include "paracon/consequence.hpp"

namespace paracon {

inline constexpr std::size_t kMaxExhaustiveElements = 3;
inline constexpr const char* kRngName = "splitmix64";

inline unsigned worker_count() {
  if (const char* env = std::getenv("PARACON_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

// Deterministic 64-bit generator; doubles take the top 53 bits.
class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// --- the table spaces -------------------------------------------------------
// A consequence table on n elements assigns one of 2^n result sets to each
// of the 2^n premise sets. Tables are indexed little-endian: the digit of
// premise set s, in radix 2^n, is its result mask. Under the reflexivity
// restriction each premise set instead picks one of its supersets, again
// ascending, so table index order and restricted index order agree on the
// shared candidates.

inline std::uint64_t unconstrained_space(std::size_t n) {
  if (n == 0 || n > kMaxExhaustiveElements)
    throw std::domain_error("search: exhaustive spaces are capped at " +
                            std::to_string(kMaxExhaustiveElements) + " elements");
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t space = 1;
  for (std::uint64_t s = 0; s < subsets; ++s) space *= subsets;
  return space;
}

inline std::uint64_t reflexive_space(std::size_t n) {
  if (n == 0 || n > kMaxExhaustiveElements)
    throw std::domain_error("search: exhaustive spaces are capped at " +
                            std::to_string(kMaxExhaustiveElements) + " elements");
  const std::size_t subsets = std::size_t{1} << n;
  std::uint64_t space = 1;
  for (std::size_t s = 0; s < subsets; ++s)
    space <<= (n - mask_count(static_cast<Mask>(s)));
  return space;
}

inline std::vector<Mask> table_from_index(std::size_t n, std::uint64_t index) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Mask> table(subsets);
  for (std::size_t s = 0; s < subsets; ++s) {
    table[s] = static_cast<Mask>(index & (subsets - 1));
    index >>= n;
  }
  return table;
}

// Supersets of s in ascending mask order; choice 0 is s itself, so the
// identity table sits at restricted index 0.
inline std::vector<Mask> reflexive_table_from_index(std::size_t n, std::uint64_t index) {
  const std::size_t subsets = std::size_t{1} << n;
  const Mask full = static_cast<Mask>(subsets - 1);
  std::vector<Mask> table(subsets);
  for (std::size_t s = 0; s < subsets; ++s) {
    const Mask anti = full & ~static_cast<Mask>(s);
    const std::size_t free_bits = mask_count(anti);
    const std::uint64_t radix = std::uint64_t{1} << free_bits;
    std::uint64_t choice = index & (radix - 1);
    index >>= free_bits;
    // Deposit the choice bits into the positions outside s.
    Mask extra = 0;
    Mask rest = anti;
    while (rest) {
      const std::size_t bit = mask_first(rest);
      if (choice & 1) extra |= Mask{1} << bit;
      choice >>= 1;
      rest &= rest - 1;
    }
    table[s] = static_cast<Mask>(s) | extra;
  }
  return table;
}

// --- predicates over raw tables ---------------------------------------------
// These run inside enumeration loops, so they work on the flat table and
// avoid certificates; the certificate-producing checks verify them in tests.

enum class Atom {
  reflexive,
  monotone,
  transitive,
  cut_for_sets,
  tarskian,
  nf,
  not_nf,
  exploding_singleton,
  some_pair_safe,
};

inline const char* to_string(Atom a) {
  switch (a) {
    case Atom::reflexive: return "reflexive";
    case Atom::monotone: return "monotone";
    case Atom::transitive: return "transitive";
    case Atom::cut_for_sets: return "cut-for-sets";
    case Atom::tarskian: return "tarskian";
    case Atom::nf: return "nf";
    case Atom::not_nf: return "not-nf";
    case Atom::exploding_singleton: return "exploding-singleton";
    case Atom::some_pair_safe: return "some-pair-safe";
  }
  return "?";
}

namespace detail {

inline bool table_reflexive(const std::vector<Mask>& t) {
  for (std::size_t s = 0; s < t.size(); ++s)
    if ((static_cast<Mask>(s) & ~t[s]) != 0) return false;
  return true;
}

inline bool table_monotone(const std::vector<Mask>& t) {
  for (std::size_t g = 0; g < t.size(); ++g) {
    const Mask cg = t[g];
    for (Mask s = static_cast<Mask>(g);; s = (s + 1) | static_cast<Mask>(g)) {
      if ((cg & ~t[s]) != 0) return false;
      if (s + 1 >= t.size()) break;
    }
  }
  return true;
}

// Premise set plus any part of its consequences yields nothing new.
inline bool table_transitive(const std::vector<Mask>& t) {
  for (std::size_t g = 0; g < t.size(); ++g) {
    const Mask cg = t[g];
    for (Mask d = cg;; d = (d - 1) & cg) {
      if ((t[static_cast<std::size_t>(static_cast<Mask>(g) | d)] & ~cg) != 0) return false;
      if (d == 0) break;
    }
  }
  return true;
}

// Whole result sets may replace premises: if Δ ⊆ C(Γ) then C(Δ) ⊆ C(Γ).
inline bool table_cut_for_sets(const std::vector<Mask>& t) {
  for (std::size_t g = 0; g < t.size(); ++g) {
    const Mask cg = t[g];
    for (Mask d = cg;; d = (d - 1) & cg) {
      if ((t[static_cast<std::size_t>(d)] & ~cg) != 0) return false;
      if (d == 0) break;
    }
  }
  return true;
}

inline bool table_nf(const std::vector<Mask>& t, std::size_t n) {
  const Mask full = static_cast<Mask>(t.size() - 1);
  for (std::size_t a = 0; a < n; ++a) {
    bool safe = true;
    for (std::size_t b = 0; b < n && safe; ++b)
      if (t[(std::size_t{1} << a) | (std::size_t{1} << b)] == full) safe = false;
    if (safe) return true;
  }
  return false;
}

inline bool table_exploding_singleton(const std::vector<Mask>& t, std::size_t n) {
  const Mask full = static_cast<Mask>(t.size() - 1);
  for (std::size_t a = 0; a < n; ++a)
    if (t[std::size_t{1} << a] == full) return true;
  return false;
}

inline bool table_some_pair_safe(const std::vector<Mask>& t, std::size_t n) {
  const Mask full = static_cast<Mask>(t.size() - 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t[(std::size_t{1} << a) | (std::size_t{1} << b)] != full) return true;
  return false;
}

}  // namespace detail

struct StructurePredicate {
  std::vector<Atom> atoms;

  static StructurePredicate parse(const std::string& text) {
    StructurePredicate pred;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string word = text.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!word.empty()) {
        if (word == "reflexive") pred.atoms.push_back(Atom::reflexive);
        else if (word == "monotone") pred.atoms.push_back(Atom::monotone);
        else if (word == "transitive") pred.atoms.push_back(Atom::transitive);
        else if (word == "cut-for-sets") pred.atoms.push_back(Atom::cut_for_sets);
        else if (word == "tarskian") pred.atoms.push_back(Atom::tarskian);
        else if (word == "nf") pred.atoms.push_back(Atom::nf);
        else if (word == "not-nf") pred.atoms.push_back(Atom::not_nf);
        else if (word == "exploding-singleton") pred.atoms.push_back(Atom::exploding_singleton);
        else if (word == "some-pair-safe") pred.atoms.push_back(Atom::some_pair_safe);
        else throw std::invalid_argument("unknown predicate atom '" + word + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (pred.atoms.empty()) throw std::invalid_argument("empty predicate");
    return pred;
  }

  std::string render() const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) out += ",";
      out += to_string(atoms[i]);
    }
    return out;
  }

  bool wants(Atom a) const {
    for (Atom x : atoms)
      if (x == a) return true;
    return false;
  }

  bool evaluate(const std::vector<Mask>& t, std::size_t n) const {
    for (Atom a : atoms) {
      switch (a) {
        case Atom::reflexive:
          if (!detail::table_reflexive(t)) return false;
          break;
        case Atom::monotone:
          if (!detail::table_monotone(t)) return false;
          break;
        case Atom::transitive:
          if (!detail::table_transitive(t)) return false;
          break;
        case Atom::cut_for_sets:
          if (!detail::table_cut_for_sets(t)) return false;
          break;
        case Atom::tarskian:
          if (!detail::table_reflexive(t) || !detail::table_monotone(t) ||
              !detail::table_transitive(t))
            return false;
          break;
        case Atom::nf:
          if (!detail::table_nf(t, n)) return false;
          break;
        case Atom::not_nf:
          if (detail::table_nf(t, n)) return false;
          break;
        case Atom::exploding_singleton:
          if (!detail::table_exploding_singleton(t, n)) return false;
          break;
        case Atom::some_pair_safe:
          if (!detail::table_some_pair_safe(t, n)) return false;
          break;
      }
    }
    return true;
  }
};

// --- exhaustive enumeration ---------------------------------------------------

struct EnumerationResult {
  std::size_t elements = 0;
  bool reflexive_pruned = false;
  std::uint64_t space = 0;
  std::uint64_t matched = 0;
  std::vector<std::uint64_t> witness_indices;
  std::vector<ConsequenceMap> witnesses;
  unsigned threads = 1;
};

inline CarrierPtr default_carrier(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return make_carrier(names);
}

// Scans every table (or every reflexive table) on n elements and keeps the
// first `witness_cap` matches by index. The scan is split into contiguous
// index ranges, one per worker, and stitched back in range order, so the
// outcome does not depend on the worker count.
inline EnumerationResult enumerate_structures(std::size_t n, const StructurePredicate& pred,
                                              std::size_t witness_cap = 5,
                                              bool reflexive_pruned = false) {
  EnumerationResult result;
  result.elements = n;
  result.reflexive_pruned = reflexive_pruned;
  result.space = reflexive_pruned ? reflexive_space(n) : unconstrained_space(n);
  result.threads = worker_count();
  if (static_cast<std::uint64_t>(result.threads) > result.space)
    result.threads = static_cast<unsigned>(result.space);

  struct Shard {
    std::uint64_t matched = 0;
    std::vector<std::uint64_t> indices;
  };
  std::vector<Shard> shards(result.threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = result.space / result.threads;
  for (unsigned w = 0; w < result.threads; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = (w + 1 == result.threads) ? result.space : lo + chunk;
    workers.emplace_back([&, w, lo, hi] {
      Shard& shard = shards[w];
      for (std::uint64_t i = lo; i < hi; ++i) {
        std::vector<Mask> t =
            reflexive_pruned ? reflexive_table_from_index(n, i) : table_from_index(n, i);
        if (!pred.evaluate(t, n)) continue;
        ++shard.matched;
        if (shard.indices.size() < witness_cap) shard.indices.push_back(i);
      }
    });
  }
  for (auto& t : workers) t.join();

  CarrierPtr carrier = default_carrier(n);
  for (const Shard& shard : shards) {
    result.matched += shard.matched;
    for (std::uint64_t i : shard.indices) {
      if (result.witness_indices.size() >= witness_cap) break;
      result.witness_indices.push_back(i);
      result.witnesses.emplace_back(
          carrier, reflexive_pruned ? reflexive_table_from_index(n, i) : table_from_index(n, i));
    }
  }
  return result;
}

// --- random sampling ------------------------------------------------------------

// One random table: premise sets ascending, then elements ascending, one
// draw each; the element joins the result set when the draw falls below
// `bias`.
inline ConsequenceMap random_structure(std::size_t n, std::uint64_t seed, double bias) {
  if (n == 0 || n > kDefaultEnumerationLimit)
    throw std::domain_error("random structure: unsupported element count");
  if (!(bias >= 0.0 && bias <= 1.0))
    throw std::invalid_argument("random structure: bias must lie in [0, 1]");
  Splitmix64 rng(seed);
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Mask> table(subsets, 0);
  for (std::size_t s = 0; s < subsets; ++s)
    for (std::size_t e = 0; e < n; ++e)
      if (rng.next_double() < bias) table[s] |= Mask{1} << e;
  return ConsequenceMap(default_carrier(n), std::move(table));
}

struct SampleResult {
  std::string rng = kRngName;
  std::uint64_t seed = 0;
  std::size_t elements = 0;
  double bias = 0.5;
  std::size_t samples = 0;
  std::size_t matched = 0;
  std::vector<std::size_t> witness_draws;  // which draws matched, first few
  std::vector<ConsequenceMap> witnesses;
};

// Draw `samples` tables from consecutive seeds seed, seed+1, ... so any
// single witness can be regenerated from its own seed.
inline SampleResult sample_structures(std::size_t n, const StructurePredicate& pred,
                                      std::size_t samples, std::uint64_t seed, double bias,
                                      std::size_t witness_cap = 5) {
  SampleResult result;
  result.seed = seed;
  result.elements = n;
  result.bias = bias;
  result.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    ConsequenceMap map = random_structure(n, seed + i, bias);
    if (!pred.evaluate(map.table(), n)) continue;
    ++result.matched;
    if (result.witnesses.size() < witness_cap) {
      result.witness_draws.push_back(i);
      result.witnesses.push_back(std::move(map));
    }
  }
  return result;
}

// --- smallest example ---------------------------------------------------------

struct MinimalExample {
  std::size_t elements = 0;
  std::uint64_t index = 0;  // within the scanned order
  bool reflexive_pruned = false;
  ConsequenceMap map;
};

// First table, by element count then index, satisfying the predicate. When
// the predicate contains the reflexivity atom the restricted space is
// scanned instead; index order agrees with the unrestricted scan on the
// shared candidates, so the answer is the same table.
inline std::optional<MinimalExample> minimal_example(const StructurePredicate& pred,
                                                     std::size_t max_elements =
                                                         kMaxExhaustiveElements) {
  const bool pruned = pred.wants(Atom::reflexive) || pred.wants(Atom::tarskian);
  for (std::size_t n = 1; n <= max_elements; ++n) {
    const std::uint64_t space = pruned ? reflexive_space(n) : unconstrained_space(n);
    for (std::uint64_t i = 0; i < space; ++i) {
      std::vector<Mask> t = pruned ? reflexive_table_from_index(n, i) : table_from_index(n, i);
      if (!pred.evaluate(t, n)) continue;
      return MinimalExample{n, i, pruned, ConsequenceMap(default_carrier(n), std::move(t))};
    }
  }
  return std::nullopt;
}

// --- structural statements across a whole space ---------------------------------

struct SweepViolation {
  std::uint64_t table_index = 0;
  std::uint64_t negation_index = 0;
  std::uint64_t fusion_index = 0;
  std::string row;
};

struct TheoremSweep {
  std::size_t elements = 0;
  std::uint64_t tables = 0;
  std::uint64_t suites = 0;
  std::uint64_t rows = 0;
  std::uint64_t gated_out = 0;  // rows skipped because hypotheses were unmet
  std::uint64_t vacuous = 0;
  std::vector<SweepViolation> violations;
};

namespace detail {

inline std::vector<std::size_t> unary_from_index(std::size_t n, std::uint64_t index) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = static_cast<std::size_t>(index % n);
    index /= n;
  }
  return map;
}

inline std::vector<std::size_t> binary_from_index(std::size_t n, std::uint64_t index) {
  std::vector<std::size_t> map(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    map[i] = static_cast<std::size_t>(index % n);
    index /= n;
  }
  return map;
}

}  // namespace detail

// Runs the structural statements over every table on n elements combined
// with every unary negation and every binary fusion, and records each row
// that reports a counterexample. A clean sweep returns no violations.
inline TheoremSweep run_theorem_sweep(std::size_t n) {
  if (n > 2)
    throw std::domain_error("theorem sweep: capped at 2 elements, the table-map product grows "
                            "too fast beyond that");
  TheoremSweep sweep;
  sweep.elements = n;
  sweep.tables = unconstrained_space(n);
  std::uint64_t negations = 1, fusions = 1;
  for (std::size_t i = 0; i < n; ++i) negations *= n;
  for (std::size_t i = 0; i < n * n; ++i) fusions *= n;

  CarrierPtr carrier = default_carrier(n);
  for (std::uint64_t ti = 0; ti < sweep.tables; ++ti) {
    ExplicitConsequence provider(ConsequenceMap(carrier, table_from_index(n, ti)));
    for (std::uint64_t ni = 0; ni < negations; ++ni) {
      NegationMap neg(carrier, detail::unary_from_index(n, ni));
      for (std::uint64_t fi = 0; fi < fusions; ++fi) {
        FusionMap fus(carrier, detail::binary_from_index(n, fi));
        ++sweep.suites;
        for (const TheoremCheck& row : theorem_suite(provider, neg, fus)) {
          ++sweep.rows;
          if (!row.unmet.empty()) ++sweep.gated_out;
          if (row.outcome == Status::fails)
            sweep.violations.push_back(SweepViolation{ti, ni, fi, row.name});
          if (row.antecedent == Status::fails && row.outcome == Status::holds) ++sweep.vacuous;
        }
      }
    }
  }
  return sweep;
}

}  // namespace paracon
