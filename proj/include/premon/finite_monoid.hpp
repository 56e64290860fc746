#pragma once

// Cayley-table monoids: exhaustive decision of the classical monoid predicates
// and materialization of the divisibility premon.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "premon/errors.hpp"
#include "premon/premon.hpp"

namespace premon::finite {

using Element = std::size_t;
using Table = std::vector<std::vector<Element>>;

class NotAssociative : public ValidationError {
 public:
  NotAssociative(std::array<Element, 3> witness, const std::string& what)
      : ValidationError(what), witness_(witness) {}
  [[nodiscard]] const std::array<Element, 3>& witness() const { return witness_; }

 private:
  std::array<Element, 3> witness_;
};

class NoIdentity : public ValidationError {
 public:
  NoIdentity(Element witness, const std::string& what) : ValidationError(what), witness_(witness) {}
  [[nodiscard]] Element witness() const { return witness_; }

 private:
  Element witness_;
};

/// A monoid given by its multiplication table. Indices are 0-based and the
/// identity index is stored explicitly. Immutable after validation.
class FiniteMonoid {
 public:
  /// Throws ValidationError (NoIdentity / NotAssociative for the two axioms).
  static FiniteMonoid validate(const Table& table, Element identity);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] Element identity() const { return e_; }
  [[nodiscard]] Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  [[nodiscard]] Table table() const;
  /// Row-major table.
  [[nodiscard]] const std::vector<Element>& cells() const { return cells_; }
  [[nodiscard]] std::vector<Element> elements() const;

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  FiniteMonoid(std::size_t n, Element e, std::vector<Element> cells)
      : n_(n), e_(e), cells_(std::move(cells)) {}

  std::size_t n_ = 0;
  Element e_ = 0;
  std::vector<Element> cells_;

  friend FiniteMonoid relabel(const FiniteMonoid&, const std::vector<Element>&);
};

/// Square boolean matrix; `rel(x, y)` reads row x, column y.
class Relation {
 public:
  explicit Relation(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool operator()(Element x, Element y) const { return bits_[x * n_ + y] != 0; }
  void set(Element x, Element y, bool v = true) { bits_[x * n_ + y] = v ? 1 : 0; }
  [[nodiscard]] std::vector<Element> row(Element x) const;
  [[nodiscard]] bool is_reflexive() const;
  [[nodiscard]] bool is_transitive() const;
  /// Reflexive-transitive closure (Warshall).
  [[nodiscard]] Relation closure() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<unsigned char> bits_;
};

/// D(x, y) iff y lies in the two-sided ideal HxH.
using DivisibilityMatrix = Relation;

std::vector<Element> units(const FiniteMonoid& m);
DivisibilityMatrix divisibility(const FiniteMonoid& m);
bool is_cancellative(const FiniteMonoid& m);
bool is_unit_cancellative(const FiniteMonoid& m);
bool is_acyclic(const FiniteMonoid& m);
bool is_group(const FiniteMonoid& m);
std::vector<Element> atoms(const FiniteMonoid& m);
bool is_atomic(const FiniteMonoid& m);

/// The two-sided ideal {u x v}.
std::vector<Element> two_sided_ideal(const FiniteMonoid& m, Element x);

struct AccpCertificate {
  bool satisfies = true;
  /// Longest strictly ascending chain of principal ideals starting at HxH,
  /// listed by generator.
  std::vector<Element> longest_chain;
};

/// On a finite carrier every ascending chain of principal ideals terminates;
/// the certificate records the longest one.
AccpCertificate element_satisfies_accp(const FiniteMonoid& m, Element x);

/// Applies the bijection `perm` (old index -> new index).
FiniteMonoid relabel(const FiniteMonoid& m, const std::vector<Element>& perm);

/// Lexicographically least (identity, table) over all relabelings.
FiniteMonoid canonical_form(const FiniteMonoid& m);

/// All monoids of order n (1 <= n <= 4) up to isomorphism, in canonical form.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t n);

// Fixtures used throughout the tests and the CLI.
FiniteMonoid boolean_and();         // index 0 = 1, index 1 = 0
FiniteMonoid zmod_mult(std::size_t n);
FiniteMonoid zmod_add(std::size_t n);

Premon<Element> divisibility_premon(const FiniteMonoid& m);
/// Premon with an explicit preorder matrix; throws ValidationError unless the
/// matrix is a reflexive and transitive relation of matching size.
Premon<Element> matrix_premon(const FiniteMonoid& m, const Relation& preorder,
                              std::string tag = "materialized-matrix");
Premon<Element> discrete_premon(const FiniteMonoid& m);
Premon<Element> flat_premon(const FiniteMonoid& m);

// Cayley-table file format: {"size": n, "identity": e, "table": [[...], ...]}.
nlohmann::json to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const nlohmann::json& j);

}  // namespace premon::finite
