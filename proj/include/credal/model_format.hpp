/**
 * Text format for credal network models and probability tables.
 *
 * Networks:
 *
 *     # Comments run to end of line.
 *     variable W { values = [w, wc] }
 *     edge W -> X
 *     cpt W | {
 *       : w in [1/5, 3/10], wc in [7/10, 4/5]
 *     }
 *     cpt X | W {
 *       w: x in [1/10, 1/5]
 *       wc: x in [4/5, 9/10]
 *     }
 *
 * Rationals are "a/b" or exact decimals. `value = r` abbreviates the point
 * interval [r, r]. For binary nodes a row may give one value; the other
 * gets the complementary interval. Non-binary nodes list every value.
 * Parent configurations are value labels in the cpt header's parent order;
 * every configuration must appear exactly once.
 *
 * Densities (read against an existing network's variables):
 *
 *     density over [Z, Y, X, W] {
 *       z y x w : 7/1250
 *       ...one row per full configuration...
 *     }
 *
 * Serialization emits the canonical form: every value's interval explicit,
 * parents in network variable order, rationals in lowest terms.
 * parse(serialize(net)) reproduces the network exactly.
 */
#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "credal/density.hpp"
#include "credal/errors.hpp"
#include "credal/interval.hpp"
#include "credal/network.hpp"
#include "credal/rational.hpp"
#include "credal/variable.hpp"

namespace credal {

namespace format_detail {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  int line = 0;
  int col = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) {
      current_ = Token{Token::End, "", line_, col_};
      return;
    }

    int line = line_, col = col_;
    char c = text_[pos_];
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      consume();
      consume();
      current_ = Token{Token::Punct, "->", line, col};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        consume();
      current_ = Token{Token::Ident, std::string(text_.substr(start, pos_ - start)), line, col};
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.') {
      std::size_t start = pos_;
      consume();
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
              text_[pos_] == '.'))
        consume();
      current_ = Token{Token::Number, std::string(text_.substr(start, pos_ - start)), line, col};
    } else if (std::ispunct(static_cast<unsigned char>(c))) {
      consume();
      current_ = Token{Token::Punct, std::string(1, c), line, col};
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

  void consume() {
    ++pos_;
    ++col_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

inline Token expect_ident(Lexer& lx, const char* what) {
  Token t = lx.take();
  if (t.kind != Token::Ident) throw SyntaxError(t.line, t.col, std::string("expected ") + what);
  return t;
}

inline Token expect_punct(Lexer& lx, const std::string& p) {
  Token t = lx.take();
  if (t.kind != Token::Punct || t.text != p)
    throw SyntaxError(t.line, t.col, "expected '" + p + "'");
  return t;
}

inline bool at_punct(const Lexer& lx, const std::string& p) {
  return lx.peek().kind == Token::Punct && lx.peek().text == p;
}

inline Rat expect_rat(Lexer& lx) {
  Token t = lx.take();
  if (t.kind != Token::Number) throw SyntaxError(t.line, t.col, "expected a rational");
  try {
    return parse_rat(t.text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(t.line, t.col, e.what());
  }
}

struct RawCptRow {
  std::vector<std::string> config;
  std::vector<std::pair<std::string, Interval>> items;
  int line = 0;
  int col = 0;
};

struct RawCpt {
  std::string node;
  std::vector<std::string> parents;
  std::vector<RawCptRow> rows;
  int line = 0;
  int col = 0;
};

}  // namespace format_detail

/// Parse a credal network from model text. Diagnostics carry line/column.
inline CredalNetwork parse_network(const std::string& text) {
  using namespace format_detail;
  Lexer lx(text);

  std::vector<Variable> variables;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<RawCpt> cpts;

  auto declared = [&variables](const std::string& name) {
    for (const auto& v : variables)
      if (v.name() == name) return true;
    return false;
  };

  while (lx.peek().kind != Token::End) {
    Token key = expect_ident(lx, "'variable', 'edge' or 'cpt'");
    if (key.text == "variable") {
      Token name = expect_ident(lx, "variable name");
      if (declared(name.text))
        throw SyntaxError(name.line, name.col, "variable '" + name.text + "' redeclared");
      expect_punct(lx, "{");
      Token values_kw = expect_ident(lx, "'values'");
      if (values_kw.text != "values")
        throw SyntaxError(values_kw.line, values_kw.col, "unknown key '" + values_kw.text + "'");
      expect_punct(lx, "=");
      expect_punct(lx, "[");
      std::vector<std::string> values;
      for (;;) {
        values.push_back(expect_ident(lx, "value label").text);
        if (at_punct(lx, ",")) {
          lx.take();
          continue;
        }
        break;
      }
      expect_punct(lx, "]");
      expect_punct(lx, "}");
      try {
        variables.emplace_back(name.text, std::move(values));
      } catch (const DomainError& e) {
        throw SyntaxError(name.line, name.col, e.what());
      }
    } else if (key.text == "edge") {
      Token from = expect_ident(lx, "parent node");
      expect_punct(lx, "->");
      Token to = expect_ident(lx, "child node");
      if (!declared(from.text))
        throw SyntaxError(from.line, from.col, "unknown node '" + from.text + "'");
      if (!declared(to.text))
        throw SyntaxError(to.line, to.col, "unknown node '" + to.text + "'");
      for (const auto& [a, b] : edges)
        if (a == from.text && b == to.text)
          throw SyntaxError(from.line, from.col, "duplicate edge " + a + " -> " + b);
      edges.emplace_back(from.text, to.text);
    } else if (key.text == "cpt") {
      RawCpt cpt;
      Token node = expect_ident(lx, "node name");
      cpt.node = node.text;
      cpt.line = node.line;
      cpt.col = node.col;
      if (!declared(cpt.node))
        throw SyntaxError(node.line, node.col, "unknown node '" + cpt.node + "'");
      for (const auto& c : cpts)
        if (c.node == cpt.node)
          throw SyntaxError(node.line, node.col, "duplicate cpt for '" + cpt.node + "'");
      expect_punct(lx, "|");
      while (lx.peek().kind == Token::Ident) cpt.parents.push_back(lx.take().text);
      expect_punct(lx, "{");
      while (!at_punct(lx, "}")) {
        RawCptRow row;
        row.line = lx.peek().line;
        row.col = lx.peek().col;
        while (lx.peek().kind == Token::Ident) row.config.push_back(lx.take().text);
        expect_punct(lx, ":");
        for (;;) {
          Token value = expect_ident(lx, "value label");
          Token op = lx.take();
          if (op.kind == Token::Ident && op.text == "in") {
            expect_punct(lx, "[");
            Rat lo = expect_rat(lx);
            expect_punct(lx, ",");
            Rat hi = expect_rat(lx);
            expect_punct(lx, "]");
            try {
              row.items.emplace_back(value.text, Interval(lo, hi));
            } catch (const DomainError& e) {
              throw InfeasibleLocal(std::string(e.what()) + " at line " + std::to_string(value.line));
            }
          } else if (op.kind == Token::Punct && op.text == "=") {
            Rat v = expect_rat(lx);
            try {
              row.items.emplace_back(value.text, Interval::point(v));
            } catch (const DomainError& e) {
              throw InfeasibleLocal(std::string(e.what()) + " at line " + std::to_string(value.line));
            }
          } else {
            throw SyntaxError(op.line, op.col, "expected 'in [lo, hi]' or '= value'");
          }
          if (at_punct(lx, ",")) {
            lx.take();
            continue;
          }
          break;
        }
        cpt.rows.push_back(std::move(row));
      }
      expect_punct(lx, "}");
    } else {
      throw SyntaxError(key.line, key.col, "unknown key '" + key.text + "'");
    }
  }

  std::vector<std::string> node_names;
  node_names.reserve(variables.size());
  for (const auto& v : variables) node_names.push_back(v.name());
  Dag dag(node_names, edges);

  // Assemble locals: rows are keyed by the header's parent order, stored by
  // the canonical (network-ordered) parent configuration index.
  Scope scope = variables;
  std::vector<LocalCredalSet> locals;
  for (const auto& cpt : cpts) {
    auto dag_parents = dag.parents(cpt.node);
    std::set<std::string> expected(dag_parents.begin(), dag_parents.end());
    std::set<std::string> given(cpt.parents.begin(), cpt.parents.end());
    if (given.size() != cpt.parents.size())
      throw SyntaxError(cpt.line, cpt.col, "cpt for '" + cpt.node + "' repeats a parent");
    if (expected != given) {
      std::string detail = "cpt parents for '" + cpt.node + "' do not match its edges (expected ";
      detail += dag_parents.empty() ? "none" : "";
      for (std::size_t i = 0; i < dag_parents.size(); ++i)
        detail += (i ? ", " : "") + dag_parents[i];
      throw SyntaxError(cpt.line, cpt.col, detail + ")");
    }

    Scope header_scope;
    for (const auto& p : cpt.parents) header_scope.push_back(scope[static_cast<std::size_t>(
        scope_index(scope, p))]);
    Scope canonical_scope = subscope(scope, dag_parents);
    const Variable& node_var = scope[static_cast<std::size_t>(scope_index(scope, cpt.node))];

    LocalCredalSet local;
    local.node = cpt.node;
    local.per_config.resize(config_count(canonical_scope));
    std::vector<bool> seen(local.per_config.size(), false);

    for (const auto& row : cpt.rows) {
      if (row.config.size() != cpt.parents.size())
        throw SyntaxError(row.line, row.col,
                          "row needs one value per parent of '" + cpt.node + "'");
      Config header_cfg(header_scope.size());
      for (std::size_t i = 0; i < header_scope.size(); ++i) {
        int vi = header_scope[i].value_index(row.config[i]);
        if (vi < 0)
          throw SyntaxError(row.line, row.col,
            "'" + row.config[i] + "' is not a value of " + header_scope[i].name());
        header_cfg[i] = vi;
      }
      Config canonical_cfg(canonical_scope.size());
      for (std::size_t i = 0; i < canonical_scope.size(); ++i) {
        for (std::size_t j = 0; j < header_scope.size(); ++j)
          if (header_scope[j].name() == canonical_scope[i].name()) canonical_cfg[i] = header_cfg[j];
      }
      std::size_t cfg_index = config_index(canonical_scope, canonical_cfg);
      if (seen[cfg_index])
        throw SyntaxError(row.line, row.col, "parent configuration given twice");
      seen[cfg_index] = true;

      std::vector<std::optional<Interval>> by_value(
          static_cast<std::size_t>(node_var.cardinality()));
      for (const auto& [label, interval] : row.items) {
        int vi = node_var.value_index(label);
        if (vi < 0)
          throw SyntaxError(row.line, row.col,
                            "'" + label + "' is not a value of " + cpt.node);
        if (by_value[static_cast<std::size_t>(vi)])
          throw SyntaxError(row.line, row.col, "value '" + label + "' bounded twice");
        by_value[static_cast<std::size_t>(vi)] = interval;
      }
      if (node_var.cardinality() == 2) {
        if (!by_value[0] && !by_value[1])
          throw SyntaxError(row.line, row.col, "row gives no value bounds");
        if (!by_value[0]) by_value[0] = by_value[1]->complement();
        if (!by_value[1]) by_value[1] = by_value[0]->complement();
      } else {
        for (std::size_t vi = 0; vi < by_value.size(); ++vi)
          if (!by_value[vi])
            throw SyntaxError(row.line, row.col,
                              "non-binary node '" + cpt.node + "' needs bounds for every value");
      }
      IntervalLocal iv;
      for (auto& b : by_value) iv.bounds.push_back(*b);
      local.per_config[cfg_index] = std::move(iv);
    }

    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) {
        Config cfg = config_at(canonical_scope, i);
        std::string desc;
        for (std::size_t j = 0; j < canonical_scope.size(); ++j)
          desc += (j ? " " : "") +
                  canonical_scope[j].values()[static_cast<std::size_t>(cfg[j])];
        throw SyntaxError(cpt.line, cpt.col,
                          "cpt for '" + cpt.node + "' misses configuration '" + desc + "'");
      }
    locals.push_back(std::move(local));
  }

  return CredalNetwork(std::move(scope), std::move(dag), std::move(locals));
}

/// Canonical text form of an interval-specified network.
inline std::string serialize_network(const CredalNetwork& net) {
  std::ostringstream out;
  for (const auto& v : net.variables()) {
    out << "variable " << v.name() << " { values = [";
    for (int i = 0; i < v.cardinality(); ++i)
      out << (i ? ", " : "") << v.values()[static_cast<std::size_t>(i)];
    out << "] }\n";
  }
  for (const auto& [a, b] : net.dag().edges())
    out << "edge " << net.dag().name_of(a) << " -> " << net.dag().name_of(b) << "\n";
  for (const auto& v : net.variables()) {
    Scope pa = net.parent_scope(v.name());
    out << "cpt " << v.name() << " |";
    for (const auto& p : pa) out << " " << p.name();
    out << " {\n";
    const auto& local = net.local(v.name());
    for (std::size_t cfg = 0; cfg < local.per_config.size(); ++cfg) {
      const auto* iv = std::get_if<IntervalLocal>(&local.per_config[cfg]);
      if (!iv) throw DomainError("text format carries interval locals only");
      out << "  ";
      Config c = config_at(pa, cfg);
      for (std::size_t j = 0; j < pa.size(); ++j)
        out << pa[j].values()[static_cast<std::size_t>(c[j])] << " ";
      out << ":";
      for (int val = 0; val < v.cardinality(); ++val) {
        const Interval& b = iv->bounds[static_cast<std::size_t>(val)];
        out << (val ? "," : "") << " " << v.values()[static_cast<std::size_t>(val)] << " in ["
            << credal::to_string(b.lo()) << ", " << credal::to_string(b.hi()) << "]";
      }
      out << "\n";
    }
    out << "}\n";
  }
  return out.str();
}

/**
 * Parse a density block against an existing variable environment. The
 * file's scope order may differ from the environment's; the result is
 * reordered to the environment scope. Every full configuration must appear
 * exactly once.
 */
inline JointDensity parse_density(const std::string& text, const Scope& env) {
  using namespace format_detail;
  Lexer lx(text);

  Token kw = expect_ident(lx, "'density'");
  if (kw.text != "density") throw SyntaxError(kw.line, kw.col, "expected 'density'");
  Token over = expect_ident(lx, "'over'");
  if (over.text != "over") throw SyntaxError(over.line, over.col, "expected 'over'");
  expect_punct(lx, "[");
  Scope file_scope;
  for (;;) {
    Token name = expect_ident(lx, "variable name");
    int idx = scope_index(env, name.text);
    if (idx < 0) throw SyntaxError(name.line, name.col, "unknown variable '" + name.text + "'");
    file_scope.push_back(env[static_cast<std::size_t>(idx)]);
    if (at_punct(lx, ",")) {
      lx.take();
      continue;
    }
    break;
  }
  expect_punct(lx, "]");
  if (file_scope.size() != env.size())
    throw SyntaxError(over.line, over.col, "density scope must cover every variable");
  expect_punct(lx, "{");

  std::vector<Rat> table(config_count(file_scope), Rat(0));
  std::vector<bool> seen(table.size(), false);
  while (!at_punct(lx, "}")) {
    Config cfg(file_scope.size());
    int row_line = lx.peek().line;
    for (std::size_t i = 0; i < file_scope.size(); ++i) {
      Token value = expect_ident(lx, "value label");
      int vi = file_scope[i].value_index(value.text);
      if (vi < 0)
        throw SyntaxError(value.line, value.col,
                          "'" + value.text + "' is not a value of " + file_scope[i].name());
      cfg[i] = vi;
    }
    expect_punct(lx, ":");
    Rat p = expect_rat(lx);
    std::size_t idx = config_index(file_scope, cfg);
    if (seen[idx]) throw SyntaxError(row_line, 1, "configuration given twice");
    seen[idx] = true;
    table[idx] = p;
  }
  lx.take();  // '}'
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw SyntaxError("density misses a configuration");

  JointDensity in_file_order(file_scope, std::move(table));
  return in_file_order.reordered(env);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CredalNetwork parse_network_file(const std::string& path) {
  return parse_network(read_text_file(path));
}

inline JointDensity parse_density_file(const std::string& path, const Scope& env) {
  return parse_density(read_text_file(path), env);
}

}  // namespace credal
