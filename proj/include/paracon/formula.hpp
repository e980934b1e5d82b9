#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace paracon {

inline constexpr std::size_t kMaxArity = 3;
inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::size_t kDefaultFragmentLimit = 1000000;

inline std::size_t fragment_formula_limit() {
  if (const char* env = std::getenv("PARACON_MAX_FRAGMENT_FORMULAS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultFragmentLimit;
}

struct Connective {
  std::string name;
  std::size_t arity = 0;
  std::string alias;  // alternate spelling accepted by the parser; may equal name
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Connective> conns) : conns_(std::move(conns)) {
    for (auto& c : conns_) {
      if (c.alias.empty()) c.alias = c.name;
      if (c.name.empty()) throw std::invalid_argument("signature: empty connective name");
      if (c.arity > kMaxArity)
        throw std::invalid_argument("signature: arity of '" + c.name + "' exceeds " +
                                    std::to_string(kMaxArity));
      for (char ch : c.name + c.alias)
        if (ch == '(' || ch == ')' || ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("signature: illegal character in spelling of '" + c.name +
                                      "'");
    }
    for (std::size_t i = 0; i < conns_.size(); ++i)
      for (std::size_t j = i + 1; j < conns_.size(); ++j)
        if (conns_[i].name == conns_[j].name || conns_[i].alias == conns_[j].alias ||
            conns_[i].name == conns_[j].alias || conns_[i].alias == conns_[j].name)
          throw std::invalid_argument("signature: duplicate spelling '" + conns_[j].name + "'");
  }

  std::size_t size() const { return conns_.size(); }
  const Connective& at(std::size_t i) const { return conns_.at(i); }
  const std::vector<Connective>& connectives() const { return conns_; }

  std::optional<std::size_t> index_of(std::string_view spelling) const {
    for (std::size_t i = 0; i < conns_.size(); ++i)
      if (conns_[i].name == spelling || conns_[i].alias == spelling) return i;
    return std::nullopt;
  }

  std::size_t require(std::string_view spelling) const {
    auto i = index_of(spelling);
    if (!i)
      throw std::domain_error("signature: unknown connective '" + std::string(spelling) + "'");
    return *i;
  }

  bool has_constant() const {
    for (const auto& c : conns_)
      if (c.arity == 0) return true;
    return false;
  }

  bool operator==(const Signature& o) const {
    if (conns_.size() != o.conns_.size()) return false;
    for (std::size_t i = 0; i < conns_.size(); ++i)
      if (conns_[i].name != o.conns_[i].name || conns_[i].arity != o.conns_[i].arity) return false;
    return true;
  }

 private:
  std::vector<Connective> conns_;
};

// Immutable term tree. Shared children keep fragment enumeration cheap.
struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  int var = -1;   // >= 0: variable index, node is a leaf
  int conn = -1;  // >= 0: connective index into the signature
  std::vector<Formula> children;
};

inline Formula make_var(std::size_t index) {
  if (index >= kMaxVariables) throw std::domain_error("formula: variable index out of range");
  auto n = std::make_shared<FormulaNode>();
  n->var = static_cast<int>(index);
  return n;
}

inline Formula make_app(const Signature& sig, std::size_t conn, std::vector<Formula> children) {
  const auto& c = sig.at(conn);
  if (children.size() != c.arity)
    throw std::invalid_argument("formula: '" + c.name + "' expects " + std::to_string(c.arity) +
                                " arguments");
  for (const auto& ch : children)
    if (!ch) throw std::invalid_argument("formula: null child");
  auto n = std::make_shared<FormulaNode>();
  n->conn = static_cast<int>(conn);
  n->children = std::move(children);
  return n;
}

inline std::size_t depth(const Formula& f) {
  if (!f) throw std::invalid_argument("depth: null formula");
  if (f->var >= 0) return 0;
  std::size_t d = 0;
  for (const auto& ch : f->children) d = std::max(d, depth(ch));
  return f->children.empty() ? 0 : d + 1;
}

inline std::string variable_name(std::size_t index) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u"};
  if (index < 6) return kNames[index];
  return "x" + std::to_string(index + 1);
}

inline std::optional<std::size_t> variable_index(std::string_view name) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u"};
  for (std::size_t i = 0; i < 6; ++i)
    if (name == kNames[i]) return i;
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    if (v >= 1 && v - 1 < kMaxVariables) return v - 1;
  }
  return std::nullopt;
}

// Canonical rendering: variables and constants bare, unary prefix, binary
// infix inside mandatory parentheses, ternary in functional form.
inline std::string print_formula(const Signature& sig, const Formula& f) {
  if (!f) throw std::invalid_argument("print: null formula");
  if (f->var >= 0) return variable_name(static_cast<std::size_t>(f->var));
  const auto& c = sig.at(static_cast<std::size_t>(f->conn));
  switch (c.arity) {
    case 0: return c.name;
    case 1: {
      std::string child = print_formula(sig, f->children[0]);
      bool word_seam = !c.name.empty() && (std::isalnum(static_cast<unsigned char>(c.name.back())) ||
                                           c.name.back() == '_') &&
                       !child.empty() && (std::isalnum(static_cast<unsigned char>(child.front())) ||
                                          child.front() == '_');
      return word_seam ? c.name + " " + child : c.name + child;
    }
    case 2:
      return "(" + print_formula(sig, f->children[0]) + " " + c.name + " " +
             print_formula(sig, f->children[1]) + ")";
    default: {
      std::string out = c.name + "(";
      for (std::size_t i = 0; i < f->children.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(sig, f->children[i]);
      }
      return out + ")";
    }
  }
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

struct Token {
  enum Kind { lparen, rparen, comma, conn, ident, end } kind;
  std::string text;
  std::size_t conn_index = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  Lexer(const Signature& sig, std::string_view src) : sig_(sig), src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= src_.size()) {
      tok_ = {Token::end, "", 0, i_};
      return;
    }
    char c = src_[i_];
    if (c == '(' || c == ')' || c == ',') {
      tok_ = {c == '(' ? Token::lparen : (c == ')' ? Token::rparen : Token::comma),
              std::string(1, c), 0, i_};
      ++i_;
      return;
    }
    // Longest connective spelling starting here wins; otherwise an
    // identifier run (letters, digits, underscore).
    std::size_t best_len = 0, best_conn = 0;
    for (std::size_t k = 0; k < sig_.size(); ++k) {
      for (const std::string* sp : {&sig_.at(k).name, &sig_.at(k).alias}) {
        if (sp->size() > best_len && src_.substr(i_).starts_with(*sp)) {
          // An alphanumeric spelling must end at a word boundary so that a
          // connective named "o" does not split the variable "or1".
          bool word = std::isalnum(static_cast<unsigned char>((*sp)[0])) || (*sp)[0] == '_';
          std::size_t after = i_ + sp->size();
          if (word && after < src_.size() &&
              (std::isalnum(static_cast<unsigned char>(src_[after])) || src_[after] == '_'))
            continue;
          best_len = sp->size();
          best_conn = k;
        }
      }
    }
    if (best_len > 0) {
      tok_ = {Token::conn, std::string(src_.substr(i_, best_len)), best_conn, i_};
      i_ += best_len;
      return;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      tok_ = {Token::ident, std::string(src_.substr(i_, j - i_)), 0, i_};
      i_ = j;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
  }

  const Signature& sig_;
  std::string_view src_;
  std::size_t i_ = 0;
  Token tok_;
};

inline Formula parse_expr(const Signature& sig, Lexer& lex) {
  Token t = lex.next();
  switch (t.kind) {
    case Token::lparen: {
      Formula left = parse_expr(sig, lex);
      Token op = lex.next();
      if (op.kind != Token::conn || sig.at(op.conn_index).arity != 2)
        throw ParseError("expected a binary connective", op.pos);
      Formula right = parse_expr(sig, lex);
      Token close = lex.next();
      if (close.kind != Token::rparen) throw ParseError("expected ')'", close.pos);
      return make_app(sig, op.conn_index, {left, right});
    }
    case Token::conn: {
      const auto& c = sig.at(t.conn_index);
      if (c.arity == 0) return make_app(sig, t.conn_index, {});
      if (c.arity == 1) return make_app(sig, t.conn_index, {parse_expr(sig, lex)});
      if (c.arity == 2)
        throw ParseError("binary connective '" + c.name + "' requires the form (a " + c.name +
                             " b)",
                         t.pos);
      Token open = lex.next();
      if (open.kind != Token::lparen)
        throw ParseError("expected '(' after '" + c.name + "'", open.pos);
      std::vector<Formula> args;
      for (std::size_t i = 0; i < c.arity; ++i) {
        if (i) {
          Token comma = lex.next();
          if (comma.kind != Token::comma) throw ParseError("expected ','", comma.pos);
        }
        args.push_back(parse_expr(sig, lex));
      }
      Token close = lex.next();
      if (close.kind != Token::rparen) throw ParseError("expected ')'", close.pos);
      return make_app(sig, t.conn_index, std::move(args));
    }
    case Token::ident: {
      auto v = variable_index(t.text);
      if (!v) throw ParseError("unknown name '" + t.text + "'", t.pos);
      return make_var(*v);
    }
    default: throw ParseError("unexpected token", t.pos);
  }
}

}  // namespace detail

inline Formula parse_formula(const Signature& sig, std::string_view src) {
  detail::Lexer lex(sig, src);
  Formula f = detail::parse_expr(sig, lex);
  const auto& rest = lex.peek();
  if (rest.kind != detail::Token::end)
    throw ParseError("trailing input '" + rest.text + "'", rest.pos);
  return f;
}

inline bool formula_equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->var != b->var || a->conn != b->conn || a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!formula_equal(a->children[i], b->children[i])) return false;
  return true;
}

// Distinct subformulas in first-seen post-order (children before parents).
inline std::vector<Formula> subformulas(const Signature& sig, const Formula& f) {
  std::vector<Formula> out;
  std::unordered_map<std::string, bool> seen;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    for (const auto& ch : g->children) self(self, ch);
    std::string key = print_formula(sig, g);
    if (!seen.count(key)) {
      seen.emplace(key, true);
      out.push_back(g);
    }
  };
  walk(walk, f);
  return out;
}

inline void collect_variables(const Formula& f, std::vector<bool>& used) {
  if (f->var >= 0) {
    if (static_cast<std::size_t>(f->var) >= used.size()) used.resize(f->var + 1, false);
    used[f->var] = true;
    return;
  }
  for (const auto& ch : f->children) collect_variables(ch, used);
}

// All formulas over `variables` variables with nesting depth ≤ `depth`,
// enumerated depth level by level, connectives in signature order, child
// tuples in lexicographic index order. Duplicates cannot arise: every
// application is built from a unique (connective, children) choice.
class Fragment {
 public:
  Fragment(Signature sig, std::size_t variables, std::size_t depth,
           std::size_t max_formulas = fragment_formula_limit())
      : sig_(std::move(sig)), variables_(variables), depth_(depth) {
    if (variables_ == 0 && !sig_.has_constant())
      throw std::invalid_argument("fragment: need a variable or a constant to seed enumeration");
    if (variables_ > kMaxVariables)
      throw std::invalid_argument("fragment: more than " + std::to_string(kMaxVariables) +
                                  " variables");

    auto push = [&](Formula f, std::size_t d) {
      if (formulas_.size() >= max_formulas)
        throw std::length_error("fragment: formula budget of " + std::to_string(max_formulas) +
                                " exhausted; raise PARACON_MAX_FRAGMENT_FORMULAS");
      index_.emplace(print_formula(sig_, f), formulas_.size());
      formulas_.push_back(std::move(f));
      depths_.push_back(d);
    };

    for (std::size_t v = 0; v < variables_; ++v) push(make_var(v), 0);
    for (std::size_t k = 0; k < sig_.size(); ++k)
      if (sig_.at(k).arity == 0) push(make_app(sig_, k, {}), 0);

    std::size_t level_start = 0;  // first index of the previous depth level
    for (std::size_t d = 1; d <= depth_; ++d) {
      std::size_t level_end = formulas_.size();
      for (std::size_t k = 0; k < sig_.size(); ++k) {
        std::size_t arity = sig_.at(k).arity;
        if (arity == 0) continue;
        std::vector<std::size_t> pick(arity, 0);
        while (true) {
          bool fresh = false;  // at least one child from the previous level
          for (std::size_t i = 0; i < arity; ++i)
            if (pick[i] >= level_start) fresh = true;
          if (fresh) {
            std::vector<Formula> children;
            children.reserve(arity);
            for (std::size_t i = 0; i < arity; ++i) children.push_back(formulas_[pick[i]]);
            push(make_app(sig_, k, std::move(children)), d);
          }
          std::size_t i = arity;
          while (i > 0) {
            if (++pick[i - 1] < level_end) break;
            pick[i - 1] = 0;
            --i;
          }
          if (i == 0) break;
        }
      }
      level_start = level_end;
      if (level_start == formulas_.size()) break;  // nothing new can appear
    }
  }

  const Signature& signature() const { return sig_; }
  std::size_t variables() const { return variables_; }
  std::size_t depth() const { return depth_; }
  std::size_t size() const { return formulas_.size(); }
  const std::vector<Formula>& formulas() const { return formulas_; }
  const Formula& at(std::size_t i) const { return formulas_.at(i); }
  std::size_t depth_of(std::size_t i) const { return depths_.at(i); }

  std::optional<std::size_t> index_of(const std::string& printed) const {
    auto it = index_.find(printed);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> index_of(const Formula& f) const {
    return index_of(print_formula(sig_, f));
  }

 private:
  Signature sig_;
  std::size_t variables_, depth_;
  std::vector<Formula> formulas_;
  std::vector<std::size_t> depths_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline Fragment enumerate_fragment(Signature sig, std::size_t variables, std::size_t depth,
                                   std::size_t max_formulas = fragment_formula_limit()) {
  return Fragment(std::move(sig), variables, depth, max_formulas);
}

}  // namespace paracon
