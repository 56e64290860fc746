#pragma once

#include <cstddef>

namespace premon {

/// Caps that turn semi-decidable questions into certified bounded answers.
///
/// `relation_budget` is consumed by the family-specific `leq`/`equal`
/// implementations: it is the exponent cap for Puiseux monoids and the rewrite
/// radius for presented monoids. Exceeding any cap yields `Tri::Unknown`.
struct SearchBudget {
  std::size_t chain_depth = 30;
  std::size_t factor_length_cap = 6;
  std::size_t node_cap = 1'000'000;
  std::size_t relation_budget = 8;

  /// Throws ValidationError if any field is zero.
  void validate() const;

  [[nodiscard]] SearchBudget scaled(std::size_t factor) const {
    return {chain_depth * factor, factor_length_cap * factor, node_cap * factor,
            relation_budget * factor};
  }

  [[nodiscard]] SearchBudget with_relation_budget(std::size_t r) const {
    SearchBudget b = *this;
    b.relation_budget = r;
    return b;
  }

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

/// Degree of irreducibility: an integer >= 2, or infinity.
struct Degree {
  std::size_t value = 2;
  bool infinite = false;

  static Degree finite(std::size_t s);
  static Degree infinity() { return {0, true}; }

  /// Largest factor count to try, honouring the factor-length cap for infinity.
  [[nodiscard]] std::size_t max_factors(const SearchBudget& b) const {
    return infinite ? b.factor_length_cap : value;
  }

  friend bool operator==(const Degree&, const Degree&) = default;
};

}  // namespace premon
