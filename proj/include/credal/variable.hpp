/**
 * Discrete variables, ordered variable scopes, configurations, and partial
 * assignments (events).
 *
 * A Scope is an ordered variable list; a Config holds one value index per
 * scope position. Tables are laid out row-major with the LAST scope variable
 * fastest, so config index arithmetic is the usual mixed-radix encoding.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

class Variable {
 public:
  Variable(std::string name, std::vector<std::string> values)
      : name_(std::move(name)), values_(std::move(values)) {
    if (name_.empty()) throw DomainError("variable with empty name");
    if (values_.size() < 2)
      throw DomainError("variable '" + name_ + "' needs at least two values");
    for (std::size_t i = 0; i < values_.size(); ++i)
      for (std::size_t j = i + 1; j < values_.size(); ++j)
        if (values_[i] == values_[j])
          throw DomainError("variable '" + name_ + "' has duplicate value label '" + values_[i] + "'");
  }

  /// A binary variable with values [name, name + "c"] (e.g. x / xc).
  static Variable binary(const std::string& name, const std::string& pos, const std::string& neg) {
    return Variable(name, {pos, neg});
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& values() const { return values_; }
  int cardinality() const { return static_cast<int>(values_.size()); }

  int value_index(const std::string& label) const {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == label) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Variable& other) const = default;

 private:
  std::string name_;
  std::vector<std::string> values_;
};

using Scope = std::vector<Variable>;
using Config = std::vector<int>;

inline std::size_t config_count(const Scope& scope) {
  std::size_t n = 1;
  for (const auto& v : scope) n *= static_cast<std::size_t>(v.cardinality());
  return n;
}

inline std::size_t config_index(const Scope& scope, const Config& config) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < scope.size(); ++i)
    idx = idx * static_cast<std::size_t>(scope[i].cardinality()) + static_cast<std::size_t>(config[i]);
  return idx;
}

inline Config config_at(const Scope& scope, std::size_t index) {
  Config config(scope.size(), 0);
  for (std::size_t i = scope.size(); i-- > 0;) {
    auto card = static_cast<std::size_t>(scope[i].cardinality());
    config[i] = static_cast<int>(index % card);
    index /= card;
  }
  return config;
}

inline int scope_index(const Scope& scope, const std::string& name) {
  for (std::size_t i = 0; i < scope.size(); ++i)
    if (scope[i].name() == name) return static_cast<int>(i);
  return -1;
}

/// Subscope in the original scope order, restricted to the given names.
inline Scope subscope(const Scope& scope, const std::vector<std::string>& names) {
  Scope out;
  for (const auto& v : scope)
    if (std::find(names.begin(), names.end(), v.name()) != names.end()) out.push_back(v);
  if (out.size() != names.size())
    throw DomainError("subscope: some requested variables are not in scope");
  return out;
}

/**
 * A partial assignment of values to variables (the event notation {Y = y}).
 * Bindings keep insertion order; each variable may be bound once.
 */
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::string, std::string>> bindings) {
    for (const auto& [var, value] : bindings) bind(var, value);
  }

  Assignment& bind(const std::string& var, const std::string& value) {
    if (binds(var)) throw DomainError("assignment binds variable '" + var + "' twice");
    bindings_.emplace_back(var, value);
    return *this;
  }

  bool binds(const std::string& var) const {
    for (const auto& [v, _] : bindings_)
      if (v == var) return true;
    return false;
  }

  const std::string& value_of(const std::string& var) const {
    for (const auto& [v, val] : bindings_)
      if (v == var) return val;
    throw DomainError("assignment does not bind variable '" + var + "'");
  }

  /// Union of two assignments; variables may not be bound twice.
  Assignment merged_with(const Assignment& other) const {
    Assignment out = *this;
    for (const auto& [v, val] : other.bindings_) out.bind(v, val);
    return out;
  }

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < bindings_.size(); ++i) {
      if (i) out += ", ";
      out += bindings_[i].first + "=" + bindings_[i].second;
    }
    return out + "}";
  }

 private:
  std::vector<std::pair<std::string, std::string>> bindings_;
};

/// Resolve an assignment against a scope as (position, value index) pairs.
/// Every bound variable must be in scope with a valid value label.
inline std::vector<std::pair<int, int>> resolve(const Scope& scope, const Assignment& a) {
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size());
  for (const auto& [var, value] : a) {
    int pos = scope_index(scope, var);
    if (pos < 0) throw DomainError("variable '" + var + "' is not in scope");
    int val = scope[static_cast<std::size_t>(pos)].value_index(value);
    if (val < 0)
      throw DomainError("variable '" + var + "' has no value labelled '" + value + "'");
    out.emplace_back(pos, val);
  }
  return out;
}

inline bool matches(const Config& config, const std::vector<std::pair<int, int>>& resolved) {
  for (const auto& [pos, val] : resolved)
    if (config[static_cast<std::size_t>(pos)] != val) return false;
  return true;
}

/// Full-configuration assignment over a scope.
inline Assignment assignment_of(const Scope& scope, const Config& config) {
  Assignment a;
  for (std::size_t i = 0; i < scope.size(); ++i)
    a.bind(scope[i].name(), scope[i].values()[static_cast<std::size_t>(config[i])]);
  return a;
}

}  // namespace credal
