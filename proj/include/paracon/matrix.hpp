#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paracon/bitvec.hpp"
#include "paracon/carrier.hpp"
#include "paracon/formula.hpp"

namespace paracon {

inline constexpr std::size_t kDefaultValuationLimit = 16777216;

inline std::size_t valuation_limit() {
  if (const char* env = std::getenv("PARACON_MAX_VALUATIONS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultValuationLimit;
}

// Finite algebra over a named carrier: one total operation table per
// signature connective, flattened little-endian (first argument varies
// fastest).
class FiniteAlgebra {
 public:
  FiniteAlgebra(CarrierPtr carrier, Signature sig,
                std::vector<std::vector<std::size_t>> tables)
      : carrier_(std::move(carrier)), sig_(std::move(sig)), tables_(std::move(tables)) {
    if (!carrier_) throw std::invalid_argument("algebra: null carrier");
    if (tables_.size() != sig_.size())
      throw std::invalid_argument("algebra: one table per connective required");
    const std::size_t n = carrier_->size();
    for (std::size_t k = 0; k < sig_.size(); ++k) {
      std::size_t expect = 1;
      for (std::size_t i = 0; i < sig_.at(k).arity; ++i) expect *= n;
      if (tables_[k].size() != expect)
        throw std::invalid_argument("algebra: table for '" + sig_.at(k).name + "' must have " +
                                    std::to_string(expect) + " entries");
      for (std::size_t v : tables_[k])
        if (v >= n)
          throw std::invalid_argument("algebra: table for '" + sig_.at(k).name +
                                      "' maps outside the carrier");
    }
  }

  const Carrier& carrier() const { return *carrier_; }
  CarrierPtr carrier_ptr() const { return carrier_; }
  const Signature& signature() const { return sig_; }
  const std::vector<std::size_t>& table(std::size_t conn) const { return tables_.at(conn); }

  std::size_t apply(std::size_t conn, const std::vector<std::size_t>& args) const {
    const auto& c = sig_.at(conn);
    if (args.size() != c.arity)
      throw std::invalid_argument("algebra: '" + c.name + "' expects " +
                                  std::to_string(c.arity) + " arguments");
    const std::size_t n = carrier_->size();
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] >= n) throw std::out_of_range("algebra: argument outside the carrier");
      idx += args[i] * stride;
      stride *= n;
    }
    return tables_[conn][idx];
  }

  std::size_t apply1(std::size_t conn, std::size_t a) const { return tables_.at(conn).at(a); }
  std::size_t apply2(std::size_t conn, std::size_t a, std::size_t b) const {
    return tables_.at(conn).at(a + b * carrier_->size());
  }

 private:
  CarrierPtr carrier_;
  Signature sig_;
  std::vector<std::vector<std::size_t>> tables_;
};

// Distinguished connective roles a matrix may expose by index.
struct MatrixRoles {
  std::optional<std::size_t> negation;     // unary
  std::optional<std::size_t> fusion;       // binary
  std::optional<std::size_t> disjunction;  // binary
  std::optional<std::size_t> bottom;       // nullary
  std::optional<std::size_t> implication;  // binary
};

// Logical matrix: algebra plus a nonempty designated subset.
class Matrix {
 public:
  Matrix(std::string name, FiniteAlgebra algebra, Mask designated, MatrixRoles roles = {})
      : name_(std::move(name)),
        algebra_(std::move(algebra)),
        designated_(designated),
        roles_(roles) {
    if (designated_ == 0) throw std::invalid_argument("matrix: designated set must be nonempty");
    if ((designated_ & ~algebra_.carrier().full()) != 0)
      throw std::invalid_argument("matrix: designated set outside the carrier");
    check_role(roles_.negation, 1, "negation");
    check_role(roles_.fusion, 2, "fusion");
    check_role(roles_.disjunction, 2, "disjunction");
    check_role(roles_.bottom, 0, "bottom");
    check_role(roles_.implication, 2, "implication");
  }

  const std::string& name() const { return name_; }
  const FiniteAlgebra& algebra() const { return algebra_; }
  const Signature& signature() const { return algebra_.signature(); }
  const Carrier& carrier() const { return algebra_.carrier(); }
  Mask designated() const { return designated_; }
  bool is_designated(std::size_t e) const { return (designated_ >> e) & 1u; }
  bool designated_proper() const { return designated_ != carrier().full(); }
  const MatrixRoles& roles() const { return roles_; }

 private:
  void check_role(const std::optional<std::size_t>& role, std::size_t arity, const char* what) {
    if (!role) return;
    if (*role >= signature().size())
      throw std::invalid_argument(std::string("matrix: ") + what + " role out of range");
    if (signature().at(*role).arity != arity)
      throw std::invalid_argument(std::string("matrix: ") + what + " role must have arity " +
                                  std::to_string(arity));
  }

  std::string name_;
  FiniteAlgebra algebra_;
  Mask designated_;
  MatrixRoles roles_;
};

inline std::size_t evaluate(const FiniteAlgebra& alg, const Formula& f,
                            const std::vector<std::size_t>& assignment) {
  if (!f) throw std::invalid_argument("evaluate: null formula");
  if (f->var >= 0) {
    if (static_cast<std::size_t>(f->var) >= assignment.size())
      throw std::out_of_range("evaluate: variable " + variable_name(f->var) + " unassigned");
    return assignment[f->var];
  }
  std::vector<std::size_t> args;
  args.reserve(f->children.size());
  for (const auto& ch : f->children) args.push_back(evaluate(alg, ch, assignment));
  return alg.apply(static_cast<std::size_t>(f->conn), args);
}

// Elements that absorb every operation of arity >= 1 from any argument slot.
inline std::vector<std::size_t> infectious_elements(const FiniteAlgebra& alg) {
  const std::size_t n = alg.carrier().size();
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < n; ++e) {
    bool infectious = true;
    for (std::size_t k = 0; k < alg.signature().size() && infectious; ++k) {
      const std::size_t arity = alg.signature().at(k).arity;
      if (arity == 0) continue;
      std::size_t count = 1;
      for (std::size_t i = 0; i < arity; ++i) count *= n;
      for (std::size_t idx = 0; idx < count && infectious; ++idx) {
        std::size_t rest = idx;
        bool touches = false;
        for (std::size_t i = 0; i < arity; ++i) {
          if (rest % n == e) touches = true;
          rest /= n;
        }
        if (touches && alg.table(k)[idx] != e) infectious = false;
      }
    }
    if (infectious) out.push_back(e);
  }
  return out;
}

// Elements fixed by every operation of arity >= 1 on the constant tuple
// (e, ..., e).
inline std::vector<std::size_t> diagonal_fixpoints(const FiniteAlgebra& alg) {
  const std::size_t n = alg.carrier().size();
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < n; ++e) {
    bool fixed = true;
    for (std::size_t k = 0; k < alg.signature().size() && fixed; ++k) {
      const std::size_t arity = alg.signature().at(k).arity;
      if (arity == 0) continue;
      if (alg.apply(k, std::vector<std::size_t>(arity, e)) != e) fixed = false;
    }
    if (fixed) out.push_back(e);
  }
  return out;
}

// Values reachable by variable-free formulas: the closure of the nullary
// constants under every operation.
inline Mask ground_closure(const FiniteAlgebra& alg) {
  const std::size_t n = alg.carrier().size();
  Mask reach = 0;
  for (std::size_t k = 0; k < alg.signature().size(); ++k)
    if (alg.signature().at(k).arity == 0) reach |= Mask{1} << alg.table(k)[0];
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < alg.signature().size(); ++k) {
      const std::size_t arity = alg.signature().at(k).arity;
      if (arity == 0) continue;
      std::size_t count = 1;
      for (std::size_t i = 0; i < arity; ++i) count *= n;
      for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        bool inside = true;
        for (std::size_t i = 0; i < arity; ++i) {
          if (((reach >> (rest % n)) & 1u) == 0) inside = false;
          rest /= n;
        }
        if (inside && ((reach >> alg.table(k)[idx]) & 1u) == 0) {
          reach |= Mask{1} << alg.table(k)[idx];
          grew = true;
        }
      }
    }
  }
  return reach;
}

// --- builtin matrices ---------------------------------------------------

namespace detail {

inline Signature kleene_signature(bool with_bottom) {
  std::vector<Connective> cs = {{"~", 1, ""}, {"&", 2, ""}, {"|", 2, ""}};
  if (with_bottom) cs.push_back({"0", 0, "bot"});
  return Signature(std::move(cs));
}

// Three elements in index order 0, u, 1; u is the infectious value.
inline FiniteAlgebra weak_kleene_algebra(bool with_bottom) {
  auto carrier = make_carrier({"0", "u", "1"});
  // Flattened little-endian: entry (a, b) sits at index a + 3*b.
  std::vector<std::size_t> neg = {2, 1, 0};
  std::vector<std::size_t> conj = {0, 1, 0,   // b = 0
                                   1, 1, 1,   // b = u
                                   0, 1, 2};  // b = 1
  std::vector<std::size_t> disj = {0, 1, 2,   // b = 0
                                   1, 1, 1,   // b = u
                                   2, 1, 2};  // b = 1
  std::vector<std::vector<std::size_t>> tables = {neg, conj, disj};
  if (with_bottom) tables.push_back({0});
  return FiniteAlgebra(carrier, kleene_signature(with_bottom), std::move(tables));
}

inline FiniteAlgebra godel_algebra(std::size_t n) {
  std::vector<std::string> names;
  if (n == 3)
    names = {"0", "h", "1"};
  else if (n == 4)
    names = {"0", "a", "b", "1"};
  else
    throw std::invalid_argument("godel chain: only 3 or 4 elements are built in");
  auto carrier = make_carrier(names);
  Signature sig({{"~", 1, ""}, {"&", 2, ""}, {"|", 2, ""}, {"->", 2, ""}});
  std::vector<std::size_t> impl(n * n), conj(n * n), disj(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      impl[a + n * b] = a <= b ? n - 1 : b;
      conj[a + n * b] = std::min(a, b);
      disj[a + n * b] = std::max(a, b);
    }
  for (std::size_t a = 0; a < n; ++a) neg[a] = impl[a + n * 0];
  return FiniteAlgebra(carrier, std::move(sig),
                       {std::move(neg), std::move(conj), std::move(disj), std::move(impl)});
}

}  // namespace detail

// Two-valued boolean matrix over {~, &, |}, designated {1}.
inline Matrix boolean2() {
  auto carrier = make_carrier({"0", "1"});
  std::vector<std::size_t> neg = {1, 0};
  std::vector<std::size_t> conj = {0, 0, 0, 1};
  std::vector<std::size_t> disj = {0, 1, 1, 1};
  FiniteAlgebra alg(carrier, detail::kleene_signature(false), {neg, conj, disj});
  MatrixRoles roles;
  roles.negation = 0;
  roles.fusion = 1;
  roles.disjunction = 2;
  return Matrix("boolean2", std::move(alg), 0b10, roles);
}

// Weak Kleene with only 1 designated.
inline Matrix weak_kleene() {
  MatrixRoles roles;
  roles.negation = 0;
  roles.fusion = 1;
  roles.disjunction = 2;
  return Matrix("wk", detail::weak_kleene_algebra(false), 0b100, roles);
}

// Weak Kleene with both u and 1 designated.
inline Matrix paraconsistent_weak_kleene() {
  MatrixRoles roles;
  roles.negation = 0;
  roles.fusion = 1;
  roles.disjunction = 2;
  return Matrix("pwk", detail::weak_kleene_algebra(false), 0b110, roles);
}

// Same designation as pwk, plus a falsum constant naming element 0.
inline Matrix paraconsistent_weak_kleene_bottom() {
  MatrixRoles roles;
  roles.negation = 0;
  roles.fusion = 1;
  roles.disjunction = 2;
  roles.bottom = 3;
  return Matrix("pwk0", detail::weak_kleene_algebra(true), 0b110, roles);
}

// Goedel chain on 3 elements; negation is the residual to 0.
inline Matrix godel3() {
  MatrixRoles roles;
  roles.negation = 0;
  roles.fusion = 1;
  roles.disjunction = 2;
  roles.implication = 3;
  return Matrix("godel3", detail::godel_algebra(3), 0b100, roles);
}

inline Matrix godel4() {
  MatrixRoles roles;
  roles.negation = 0;
  roles.fusion = 1;
  roles.disjunction = 2;
  roles.implication = 3;
  return Matrix("godel4", detail::godel_algebra(4), 0b1000, roles);
}

// --- evaluation context ---------------------------------------------------

// A matrix paired with an enumerated fragment: one value row per formula
// across every valuation of the fragment's variables, plus the designation
// bitset of each row. Valuation index is little-endian base |A|: the digit
// of variable i is (index / |A|^i) mod |A|.
class MatrixContext {
 public:
  MatrixContext(Matrix matrix, Fragment fragment)
      : matrix_(std::move(matrix)), fragment_(std::move(fragment)) {
    const std::size_t n = matrix_.carrier().size();
    if (n > 255) throw std::invalid_argument("context: carrier too large for value rows");
    valuations_ = 1;
    const std::size_t limit = valuation_limit();
    for (std::size_t i = 0; i < fragment_.variables(); ++i) {
      if (valuations_ > limit / n)
        throw std::length_error("context: valuation budget exhausted; raise "
                                "PARACON_MAX_VALUATIONS");
      valuations_ *= n;
    }
    values_.resize(fragment_.size());
    designated_.assign(fragment_.size(), Bitvec(valuations_));
    for (std::size_t fi = 0; fi < fragment_.size(); ++fi) {
      const Formula& f = fragment_.at(fi);
      auto& row = values_[fi];
      row.resize(valuations_);
      if (f->var >= 0) {
        std::size_t stride = 1;
        for (int i = 0; i < f->var; ++i) stride *= n;
        for (std::size_t v = 0; v < valuations_; ++v)
          row[v] = static_cast<std::uint8_t>((v / stride) % n);
      } else if (f->children.empty()) {
        const std::uint8_t c =
            static_cast<std::uint8_t>(matrix_.algebra().table(f->conn)[0]);
        for (std::size_t v = 0; v < valuations_; ++v) row[v] = c;
      } else {
        std::vector<const std::vector<std::uint8_t>*> kid;
        for (const auto& ch : f->children) {
          auto ci = fragment_.index_of(ch);
          if (!ci || *ci >= fi) throw std::logic_error("context: fragment not in build order");
          kid.push_back(&values_[*ci]);
        }
        const auto& table = matrix_.algebra().table(f->conn);
        if (kid.size() == 1) {
          for (std::size_t v = 0; v < valuations_; ++v)
            row[v] = static_cast<std::uint8_t>(table[(*kid[0])[v]]);
        } else if (kid.size() == 2) {
          for (std::size_t v = 0; v < valuations_; ++v)
            row[v] = static_cast<std::uint8_t>(table[(*kid[0])[v] + n * (*kid[1])[v]]);
        } else {
          for (std::size_t v = 0; v < valuations_; ++v) {
            std::size_t idx = 0, stride = 1;
            for (const auto* kv : kid) {
              idx += (*kv)[v] * stride;
              stride *= n;
            }
            row[v] = static_cast<std::uint8_t>(table[idx]);
          }
        }
      }
      for (std::size_t v = 0; v < valuations_; ++v)
        if (matrix_.is_designated(row[v])) designated_[fi].set(v);
    }
  }

  const Matrix& matrix() const { return matrix_; }
  const Fragment& fragment() const { return fragment_; }
  std::size_t valuation_count() const { return valuations_; }
  const std::vector<std::uint8_t>& values(std::size_t formula) const {
    return values_.at(formula);
  }
  const Bitvec& designated_rows(std::size_t formula) const { return designated_.at(formula); }

  std::size_t variable_value(std::size_t var, std::size_t valuation) const {
    const std::size_t n = matrix_.carrier().size();
    std::size_t stride = 1;
    for (std::size_t i = 0; i < var; ++i) stride *= n;
    return (valuation / stride) % n;
  }

  // Valuations designating every member of gamma.
  Bitvec designating(const std::vector<std::size_t>& gamma) const {
    Bitvec acc(valuations_, true);
    for (std::size_t g : gamma) acc &= designated_.at(g);
    return acc;
  }

  bool entails(const std::vector<std::size_t>& gamma, std::size_t alpha) const {
    return designating(gamma).subset_of(designated_.at(alpha));
  }

  // Under a proper designated set, a premise set yields every formula
  // whatsoever exactly when no valuation designates all of it: a never
  // excluded fresh variable would otherwise break the entailment.
  bool trivializes(const std::vector<std::size_t>& gamma) const {
    if (!matrix_.designated_proper())
      throw std::domain_error("context: trivialization needs a non-designated element");
    return designating(gamma).none();
  }

  // Value row for a formula that may live outside the fragment (any
  // variable index below the fragment's variable count is allowed).
  std::vector<std::uint8_t> value_row(const Formula& f) const {
    if (auto fi = fragment_.index_of(f)) return values_[*fi];
    std::vector<std::uint8_t> row(valuations_);
    std::vector<std::size_t> assignment(fragment_.variables());
    const std::size_t n = matrix_.carrier().size();
    for (std::size_t v = 0; v < valuations_; ++v) {
      std::size_t rest = v;
      for (std::size_t i = 0; i < assignment.size(); ++i) {
        assignment[i] = rest % n;
        rest /= n;
      }
      row[v] = static_cast<std::uint8_t>(evaluate(matrix_.algebra(), f, assignment));
    }
    return row;
  }

  Bitvec designated_row_of(const Formula& f) const {
    if (auto fi = fragment_.index_of(f)) return designated_[*fi];
    auto row = value_row(f);
    Bitvec out(valuations_);
    for (std::size_t v = 0; v < valuations_; ++v)
      if (matrix_.is_designated(row[v])) out.set(v);
    return out;
  }

 private:
  Matrix matrix_;
  Fragment fragment_;
  std::size_t valuations_ = 1;
  std::vector<std::vector<std::uint8_t>> values_;
  std::vector<Bitvec> designated_;
};

}  // namespace paracon
