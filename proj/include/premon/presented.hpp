#pragma once

// Monoids presented by generators X = {x_i}, Y = {y_j} (j >= 1) and, for every
// r >= 0, the relations
//   x_{rh} = x_{rh+1} ... x_{rh+h}
//   x_{rh} = y_{s(rk)+1} ... y_{s(rk+k)}
// for a strictly increasing map s on the naturals. Congruence classes are
// explored by bounded breadth-first rewriting in both directions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "premon/premon.hpp"

namespace premon::presented {

struct Letter {
  enum class Kind : std::uint8_t { X, Y };
  Kind kind = Kind::X;
  std::size_t index = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter x(std::size_t i) { return {Letter::Kind::X, i}; }
inline Letter y(std::size_t j) { return {Letter::Kind::Y, j}; }

/// Whitespace-separated tokens x<i> / y<j>; "e" (or nothing) is the empty word.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Strictly increasing map on the naturals: identity, n^2, or a finite table
/// followed by an optional affine tail c*n + d.
class Sigma {
 public:
  struct Tail {
    std::int64_t c = 1;
    std::int64_t d = 0;
    friend bool operator==(const Tail&, const Tail&) = default;
  };

  static Sigma identity();
  static Sigma square();
  /// Throws ValidationError unless the table and tail are strictly increasing.
  static Sigma table(std::vector<std::size_t> values, std::optional<Tail> tail = std::nullopt);

  /// Throws ValidationError beyond a table without tail.
  [[nodiscard]] std::size_t operator()(std::size_t n) const;
  [[nodiscard]] std::optional<std::size_t> try_at(std::size_t n) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static Sigma from_json(const nlohmann::json& j);

  friend bool operator==(const Sigma&, const Sigma&) = default;

 private:
  enum class Kind : std::uint8_t { Identity, Square, Table };
  Kind kind_ = Kind::Identity;
  std::vector<std::size_t> table_;
  std::optional<Tail> tail_;
};

struct Rule {
  Word lhs;
  Word rhs;
};

struct RulePair {
  Rule x_rule;
  Rule y_rule;
};

struct RewriteStep {
  enum class Which : std::uint8_t { XRule, YRule };
  std::size_t rule_index = 0;
  Which which = Which::XRule;
  /// lhs -> rhs when true, rhs -> lhs otherwise.
  bool expand = true;
  std::size_t position = 0;
  Word result;
};

using Trace = std::vector<RewriteStep>;

/// Words reached from a start word within a radius.
struct ClassExploration {
  std::vector<Word> words;          // breadth-first order, start word first
  std::vector<std::size_t> parent;  // index into words; parent[0] == 0
  std::vector<RewriteStep> via;     // step that produced words[i] (unused at 0)
  std::map<Word, std::size_t> index;
  /// Every word of the class is listed.
  bool exhausted = false;

  [[nodiscard]] Trace trace_to(std::size_t i) const;
};

template <class T>
struct Certified {
  Tri verdict = Tri::Unknown;
  T evidence{};
};

struct FactorWitness {
  Word class_word;  // = prefix * u * suffix, equivalent to the target
  std::size_t offset = 0;
  Trace trace;      // from the target to class_word
};

struct ChainStep {
  Word from;
  Word to;
  Tri forward = Tri::Unknown;  // `to` divides `from`
  Tri reverse = Tri::Unknown;  // `from` divides `to`
  FactorWitness witness;
};

struct ChainCertificate {
  std::vector<Word> words;
  std::vector<ChainStep> steps;
  [[nodiscard]] bool forward_certified() const;
  /// Every reverse divisibility is refuted, not just left open.
  [[nodiscard]] bool strictness_proved() const;
};

struct LocalArtinianWitness {
  Word target;
  std::vector<Word> factors;
  Tri equivalent = Tri::Unknown;  // target ~ product of factors
  Trace trace;
  std::vector<Tri> factor_quark;
  [[nodiscard]] bool valid() const;
};

class PresentedMonoid {
 public:
  /// Throws ValidationError unless h, k >= 2.
  PresentedMonoid(std::size_t h, std::size_t k, Sigma sigma = Sigma::identity());

  [[nodiscard]] std::size_t h() const { return h_; }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] const Sigma& sigma() const { return sigma_; }

  [[nodiscard]] RulePair rules(std::size_t r) const;

  /// Single rewrite steps from w in either direction. Sets `incomplete` when a
  /// rule could not be generated (a table-only sigma ran out).
  [[nodiscard]] std::vector<RewriteStep> neighbours(const Word& w, bool* incomplete = nullptr) const;

  /// Checks that every step of `trace` is a rule application; returns the end word.
  [[nodiscard]] std::optional<Word> replay(const Word& start, const Trace& trace) const;

  /// Breadth-first closure of w up to `radius` steps and `node_cap` words.
  /// Results are cached; the cache is shared between copies.
  [[nodiscard]] std::shared_ptr<const ClassExploration> explore(const Word& w, std::size_t radius,
                                                                std::size_t node_cap) const;

  /// Additive invariants of the congruence: A counts x_{mh} letters and the
  /// first letters of y-blocks; B tracks the rule index carried by them.
  [[nodiscard]] std::int64_t invariant_a(const Word& w) const;
  [[nodiscard]] std::int64_t invariant_b(const Word& w) const;
  /// True when the invariants prove that u is not a factor of anything
  /// equivalent to w.
  [[nodiscard]] bool invariants_forbid_division(const Word& u, const Word& w) const;

  [[nodiscard]] Certified<Trace> equivalent_bounded(const Word& u, const Word& w, std::size_t radius,
                                                    std::size_t node_cap = 1'000'000) const;
  [[nodiscard]] Certified<FactorWitness> divides_bounded(const Word& u, const Word& w,
                                                         std::size_t radius,
                                                         std::size_t node_cap = 1'000'000) const;

  [[nodiscard]] QuarkResult<Word> is_quark_bounded(const Word& w, std::size_t radius) const;

  /// x_{rh}, x_{(r+1)h}, ... of length len with per-step certificates.
  [[nodiscard]] ChainCertificate descending_chain_x(std::size_t r, std::size_t len,
                                                    std::size_t radius) const;

  /// x_{rh} as the product of its y-block, each letter quark-certified.
  [[nodiscard]] LocalArtinianWitness k_local_artinian_witness(std::size_t r, std::size_t radius) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static PresentedMonoid from_json(const nlohmann::json& j);

 private:
  // Rule index of the y-block starting at y_j, if any.
  [[nodiscard]] std::optional<std::size_t> block_starting_at(std::size_t j, bool* incomplete) const;
  [[nodiscard]] bool is_block_start(std::size_t j) const;

  std::size_t h_;
  std::size_t k_;
  Sigma sigma_;

  struct Cache {
    std::mutex mutex;
    std::map<std::tuple<Word, std::size_t, std::size_t>, std::shared_ptr<const ClassExploration>> entries;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Divisibility premon on words. Equality and divisibility are bounded by the
/// relation budget (rewrite radius).
Premon<Word> make_premon(const PresentedMonoid& m);

nlohmann::json to_json(const Trace& trace);

}  // namespace premon::presented
