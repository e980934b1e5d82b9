// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written from first principles -- plain
// loops and recursion over the definitions -- and shares no logic with the
// code under test beyond the public data types.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "paracon/consequence.hpp"
#include "paracon/formula.hpp"

namespace oracles {

// Formula count of the level-wise fragment: level 0 holds the variables and
// the 0-ary connectives; a formula sits at level d+1 when all children are at
// levels <= d and at least one child is at level d.
inline std::uint64_t fragment_count(const std::vector<std::size_t>& arities, std::size_t vars,
                                    std::size_t depth) {
  std::uint64_t level = vars;
  for (std::size_t a : arities)
    if (a == 0) ++level;
  std::uint64_t below = 0, total = level;
  for (std::size_t d = 0; d < depth; ++d) {
    std::uint64_t upto = below + level;
    std::uint64_t next = 0;
    for (std::size_t a : arities) {
      if (a == 0) continue;
      std::uint64_t all = 1, old = 1;
      for (std::size_t i = 0; i < a; ++i) {
        all *= upto;
        old *= below;
      }
      next += all - old;
    }
    below = upto;
    level = next;
    total += next;
  }
  return total;
}

// Two-valued evaluation for the {~, &, |} signature, keyed on connective
// spelling only.
inline bool bool_eval(const paracon::Signature& sig, const paracon::Formula& f,
                      const std::vector<bool>& assignment) {
  if (f->var >= 0) return assignment.at(static_cast<std::size_t>(f->var));
  const std::string& name = sig.connectives()[static_cast<std::size_t>(f->conn)].name;
  if (name == "~") return !bool_eval(sig, f->children[0], assignment);
  if (name == "&")
    return bool_eval(sig, f->children[0], assignment) &&
           bool_eval(sig, f->children[1], assignment);
  if (name == "|")
    return bool_eval(sig, f->children[0], assignment) ||
           bool_eval(sig, f->children[1], assignment);
  throw std::runtime_error("bool_eval: unexpected connective " + name);
}

// No assignment over `vars` variables makes both formulas true.
inline bool jointly_unsat(const paracon::Signature& sig, const paracon::Formula& f,
                          const paracon::Formula& g, std::size_t vars) {
  for (std::size_t bits = 0; bits < (std::size_t{1} << vars); ++bits) {
    std::vector<bool> assignment(vars);
    for (std::size_t i = 0; i < vars; ++i) assignment[i] = (bits >> i) & 1;
    if (bool_eval(sig, f, assignment) && bool_eval(sig, g, assignment)) return false;
  }
  return true;
}

// Common upper bounds computed straight from a <= relation given as a dense
// boolean matrix (leq[x][y] meaning x <= y).
inline paracon::Mask upper_bounds(const std::vector<std::vector<bool>>& leq, paracon::Mask gamma) {
  const std::size_t n = leq.size();
  paracon::Mask out = 0;
  for (std::size_t u = 0; u < n; ++u) {
    bool above_all = true;
    for (std::size_t g = 0; g < n; ++g)
      if ((gamma >> g) & 1)
        if (!leq[g][u]) above_all = false;
    if (above_all) out |= paracon::Mask{1} << u;
  }
  return out;
}

// Both laws a gappy operator must satisfy, checked by definition.
inline bool q_laws_hold(const std::vector<paracon::Mask>& table, std::size_t n) {
  const paracon::Mask full = (paracon::Mask{1} << n) - 1;
  for (paracon::Mask g = 0; g <= full; ++g)
    for (paracon::Mask s = 0; s <= full; ++s)
      if ((g & ~s) == 0 && (table[g] & ~table[s]) != 0) return false;
  for (paracon::Mask g = 0; g <= full; ++g)
    if (table[g | table[g]] != table[g]) return false;
  return true;
}

// Reflexive operator tables leave n - |S| free bits per premise set S, so the
// space has size 2^(n * 2^(n-1)).
inline std::uint64_t reflexive_count(std::size_t n) {
  return std::uint64_t{1} << (n * (std::uint64_t{1} << (n - 1)));
}

// Frozen three-valued tables for the infectious algebra, first argument
// selecting the row: 0, u, 1 in that order.
inline const std::size_t kWkNeg[3] = {2, 1, 0};
inline const std::size_t kWkConj[3][3] = {{0, 1, 0}, {1, 1, 1}, {0, 1, 2}};
inline const std::size_t kWkDisj[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};

// Reference splitmix64 step, written out separately from the library's.
inline std::uint64_t splitmix64_step(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Monotonicity of a raw operator table, by definition.
inline bool table_monotone_ref(const std::vector<paracon::Mask>& table, std::size_t n) {
  const paracon::Mask full = (paracon::Mask{1} << n) - 1;
  for (paracon::Mask g = 0; g <= full; ++g)
    for (paracon::Mask s = 0; s <= full; ++s)
      if ((g & ~s) == 0 && (table[g] & ~table[s]) != 0) return false;
  return true;
}

// Transitivity: anything provable from C(gamma) together with gamma was
// already provable from gamma.
inline bool table_transitive_ref(const std::vector<paracon::Mask>& table, std::size_t n) {
  const paracon::Mask full = (paracon::Mask{1} << n) - 1;
  for (paracon::Mask g = 0; g <= full; ++g)
    for (paracon::Mask d = 0; d <= full; ++d)
      if ((d & ~table[g]) == 0 && (table[g | d] & ~table[g]) != 0) return false;
  return true;
}

// Cut for sets: if every member of delta follows from gamma, everything delta
// proves follows from gamma as well.
inline bool table_cut_ref(const std::vector<paracon::Mask>& table, std::size_t n) {
  const paracon::Mask full = (paracon::Mask{1} << n) - 1;
  for (paracon::Mask g = 0; g <= full; ++g)
    for (paracon::Mask d = 0; d <= full; ++d)
      if ((d & ~table[g]) == 0 && (table[d] & ~table[g]) != 0) return false;
  return true;
}

}  // namespace oracles
