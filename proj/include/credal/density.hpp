/**
 * Full probability tables over an ordered variable scope, with the exact
 * per-measure operations the credal layer builds on: expectation, event
 * probability, marginalization, Bayes conditioning, axis reordering, and
 * marginal-factor replacement.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"
#include "credal/variable.hpp"

namespace credal {

/// A function on full configurations of some scope.
using ConfigFn = std::function<Rat(const Config&)>;

class JointDensity {
 public:
  JointDensity(Scope scope, std::vector<Rat> table)
      : scope_(std::move(scope)), table_(std::move(table)) {
    if (table_.size() != config_count(scope_))
      throw DomainError("density table length does not match scope");
    Rat sum(0);
    for (const auto& p : table_) {
      if (p < 0) throw DomainError("density has a negative entry");
      sum += p;
    }
    if (sum != 1) throw DomainError("density entries sum to " + credal::to_string(sum) + ", not 1");
  }

  static JointDensity uniform(Scope scope) {
    auto n = config_count(scope);
    return JointDensity(std::move(scope), std::vector<Rat>(n, Rat(1) / Rat(BigInt(n))));
  }

  const Scope& scope() const { return scope_; }
  const std::vector<Rat>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  const Rat& at(std::size_t index) const { return table_[index]; }
  const Rat& at(const Config& config) const { return table_[config_index(scope_, config)]; }

  bool operator==(const JointDensity& other) const = default;

  /// Exact expectation of f over all full configurations.
  Rat expectation(const ConfigFn& f) const {
    Rat sum(0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == 0) continue;
      sum += f(config_at(scope_, i)) * table_[i];
    }
    return sum;
  }

  /// P(A) for a partial assignment A over this scope.
  Rat prob(const Assignment& event) const {
    auto resolved = resolve(scope_, event);
    Rat sum(0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == 0) continue;
      if (matches(config_at(scope_, i), resolved)) sum += table_[i];
    }
    return sum;
  }

  /// Marginal onto the named variables, keeping the original scope order.
  JointDensity marginal(const std::vector<std::string>& keep) const {
    if (keep.empty()) throw DomainError("marginal onto an empty variable set");
    Scope out_scope = subscope(scope_, keep);
    std::vector<int> positions;
    positions.reserve(out_scope.size());
    for (const auto& v : out_scope) positions.push_back(scope_index(scope_, v.name()));

    std::vector<Rat> out(config_count(out_scope), Rat(0));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == 0) continue;
      Config full = config_at(scope_, i);
      Config sub(out_scope.size());
      for (std::size_t k = 0; k < positions.size(); ++k)
        sub[k] = full[static_cast<std::size_t>(positions[k])];
      out[config_index(out_scope, sub)] += table_[i];
    }
    return JointDensity(std::move(out_scope), std::move(out));
  }

  /**
   * Bayes conditioning on an event. Keeps the full scope with the evidence
   * variables fixed (off-event entries become zero). Returns nullopt when
   * the event has probability zero under this measure.
   */
  std::optional<JointDensity> conditional(const Assignment& evidence) const {
    auto resolved = resolve(scope_, evidence);
    Rat pe(0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == 0) continue;
      if (matches(config_at(scope_, i), resolved)) pe += table_[i];
    }
    if (pe == 0) return std::nullopt;
    std::vector<Rat> out(table_.size(), Rat(0));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == 0) continue;
      if (matches(config_at(scope_, i), resolved)) out[i] = table_[i] / pe;
    }
    return JointDensity(scope_, std::move(out));
  }

  /// The same measure with its axes permuted into the target scope order.
  JointDensity reordered(const Scope& target) const {
    if (target.size() != scope_.size())
      throw DomainError("reordered: scope size mismatch");
    std::vector<int> positions(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) {
      int pos = scope_index(scope_, target[k].name());
      if (pos < 0 || !(scope_[static_cast<std::size_t>(pos)] == target[k]))
        throw DomainError("reordered: scopes hold different variables");
      positions[k] = pos;
    }
    std::vector<Rat> out(table_.size(), Rat(0));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      Config full = config_at(scope_, i);
      Config perm(target.size());
      for (std::size_t k = 0; k < target.size(); ++k)
        perm[k] = full[static_cast<std::size_t>(positions[k])];
      out[config_index(target, perm)] = table_[i];
    }
    return JointDensity(target, std::move(out));
  }

  /**
   * Factor this measure as p(rest | Y) p(Y) and replace p(Y) by q.
   * Throws ZeroMarginal when q is positive on a Y-configuration where this
   * measure's Y-marginal is zero (the factorization is undefined there).
   */
  JointDensity replace_marginal(const std::vector<std::string>& y_vars,
                                const JointDensity& q) const {
    if (y_vars.empty() || y_vars.size() >= scope_.size())
      throw DomainError("replace_marginal: Y must be a nonempty strict subset of scope");
    Scope y_scope = subscope(scope_, y_vars);
    JointDensity p_y = marginal(y_vars);
    JointDensity q_aligned = q.reordered(y_scope);

    std::vector<int> positions;
    positions.reserve(y_scope.size());
    for (const auto& v : y_scope) positions.push_back(scope_index(scope_, v.name()));

    for (std::size_t j = 0; j < q_aligned.size(); ++j)
      if (q_aligned.at(j) > 0 && p_y.at(j) == 0)
        throw ZeroMarginal("replacement density is positive on a configuration with zero marginal");

    std::vector<Rat> out(table_.size(), Rat(0));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      Config full = config_at(scope_, i);
      Config sub(y_scope.size());
      for (std::size_t k = 0; k < positions.size(); ++k)
        sub[k] = full[static_cast<std::size_t>(positions[k])];
      std::size_t j = config_index(y_scope, sub);
      if (p_y.at(j) == 0) continue;  // q is zero there too; the block vanishes
      out[i] = table_[i] / p_y.at(j) * q_aligned.at(j);
    }
    return JointDensity(scope_, std::move(out));
  }

 private:
  Scope scope_;
  std::vector<Rat> table_;
};

/// Indicator of an event as a function on full configurations of `scope`.
inline ConfigFn indicator(const Scope& scope, const Assignment& event) {
  auto resolved = resolve(scope, event);
  return [resolved](const Config& c) { return matches(c, resolved) ? Rat(1) : Rat(0); };
}

}  // namespace credal
