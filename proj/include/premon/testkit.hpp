#pragma once

// Instance generators and executable verification suites for the factorization
// results on premons.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "premon/finite_monoid.hpp"
#include "premon/premon.hpp"
#include "premon/rational.hpp"

namespace premon::testkit {

using finite::Element;

struct Provenance {
  std::string construction;  // "divisibility", "random", "discrete"
  std::size_t order = 0;
  std::size_t monoid_index = 0;
  std::optional<std::uint64_t> seed;  // replays the random relation on its own
  double density = 0.0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct PremonInstance {
  finite::FiniteMonoid monoid;
  finite::Relation preorder;
  Provenance provenance;

  [[nodiscard]] Premon<Element> premon() const;
};

nlohmann::json to_json(const Provenance& p);
nlohmann::json to_json(const PremonInstance& inst);
PremonInstance instance_from_json(const nlohmann::json& j);

enum class PreorderMode : std::uint8_t { Divisibility, Random, Discrete };

struct GenOptions {
  PreorderMode mode = PreorderMode::Divisibility;
  std::uint64_t seed = 1;
  /// Edge probability of the random digraph, before closure.
  double density = 0.5;
  /// Random preorders per monoid.
  std::size_t count = 1;
};

/// Random digraph on n vertices closed reflexively and transitively.
finite::Relation random_preorder(std::size_t n, std::uint64_t seed, double density);

/// Seed of the i-th random preorder drawn for monoid `monoid_index`.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t monoid_index, std::size_t i);

/// Every monoid of order n crossed with the requested preorders.
std::vector<PremonInstance> gen_finite_premons(std::size_t n, const GenOptions& opts);

enum class Verdict : std::uint8_t { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct ClaimResult {
  std::string claim;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  nlohmann::json witness;  // replayable evidence for failures
};

struct VerificationReport {
  std::string suite;
  nlohmann::json provenance;
  std::string conclusion;
  std::vector<ClaimResult> claims;

  [[nodiscard]] std::size_t count(Verdict v) const;
  [[nodiscard]] bool ok() const { return count(Verdict::Fail) == 0; }
  void add(std::string claim, bool pass, std::string detail = {}, nlohmann::json witness = {});
  void skip(std::string claim, std::string detail);
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Every preorder non-unit factors into degree-s irreducibles, for each s.
VerificationReport verify_lemma(const PremonInstance& inst, const std::vector<Degree>& degrees,
                                const SearchBudget& b);

/// Factorable iff locally artinian, under the finite-height hypothesis on
/// irreducibles.
VerificationReport verify_corollary_factorable(const PremonInstance& inst, const SearchBudget& b);

/// Bounded version for the Puiseux monoid generated by the powers of a/b.
VerificationReport verify_corollary_factorable_puiseux(const Integer& a, const Integer& b,
                                                       const SearchBudget& budget);

/// Atomic iff generated by elements satisfying the ACCP (acyclic monoids).
VerificationReport verify_corollary_acyclic_accp_puiseux(const Integer& a, const Integer& b,
                                                         const SearchBudget& budget);
/// The polynomial domain, where the hypothesis fails.
VerificationReport verify_corollary_acyclic_accp_poly(const SearchBudget& budget);

/// Height 0 iff unit, height 1 iff quark.
VerificationReport verify_heights(const PremonInstance& inst, const SearchBudget& b);

/// h-locally artinian implies k-locally artinian for h <= k.
VerificationReport verify_local_ladder(const PremonInstance& inst, const SearchBudget& b);

struct NonQuarkWitness {
  PremonInstance instance;
  Element element = 0;
  Element below = 0;  // non-unit strictly below `element`
};

/// Degree-2 irreducible non-quark among divisibility premons of order <=
/// max_order, then among `seeds` random preorders per monoid.
std::optional<NonQuarkWitness> find_irreducible_non_quark(std::size_t max_order, std::size_t seeds,
                                                          std::uint64_t seed, const SearchBudget& b);

}  // namespace premon::testkit
