#pragma once

// The additive monoid H generated by 1, r, r^2, ... for a rational 0 < r = a/b < 1.
//
// Membership is decided exactly. Every element q of H has a unique
// representation sum c_i r^i with 0 <= c_i < b for i >= 1, obtained by
// repeatedly trading b copies of r^(i+1) for a copies of r^i; its top exponent
// is the b-adic exponent of the denominator of q. All other representations
// arise from it by the inverse trade, which adds b - a to the length.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "premon/premon.hpp"
#include "premon/rational.hpp"

namespace premon::puiseux {

class PuiseuxMonoid;

/// sum c_i r^i with exponents 0..exponent_bound().
struct Representation {
  std::vector<Integer> coefficients;

  [[nodiscard]] std::size_t exponent_bound() const {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  [[nodiscard]] Integer length() const;
  [[nodiscard]] Rational value(const PuiseuxMonoid& h) const;
  /// Non-zero (exponent, coefficient) pairs.
  [[nodiscard]] std::vector<std::pair<std::size_t, Integer>> terms() const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct AccpVerdict {
  Tri verdict = Tri::Unknown;
  /// i with x - a r^i in H, when verdict is False.
  std::optional<std::size_t> witness_index;
  std::optional<Representation> remainder;
};

struct AtomCertificate {
  std::size_t exponent = 0;
  Rational value;
  Tri quark = Tri::Unknown;
  Tri irreducible = Tri::Unknown;
  Tri atom = Tri::Unknown;
  Tri accp = Tri::Unknown;
};

class PuiseuxMonoid {
 public:
  /// Requires 0 < a < b and gcd(a, b) = 1; throws ValidationError.
  PuiseuxMonoid(Integer a, Integer b);

  [[nodiscard]] const Integer& a() const { return a_; }
  [[nodiscard]] const Integer& b() const { return b_; }
  [[nodiscard]] const Rational& r() const { return r_; }
  /// a >= 2: the generators r^i are exactly the atoms.
  [[nodiscard]] bool atomic_regime() const { return a_ >= 2; }

  [[nodiscard]] Rational generator(std::size_t i) const { return pow(r_, i); }

  /// Least m with denominator(q) dividing b^m, if any.
  [[nodiscard]] std::optional<std::size_t> denominator_exponent(const Rational& q) const;

  /// The representation with coefficients below b in every positive exponent,
  /// or nullopt when q is not in H.
  [[nodiscard]] std::optional<Representation> canonical(const Rational& q) const;
  [[nodiscard]] bool contains(const Rational& q) const { return canonical(q).has_value(); }

  /// A representation using only exponents <= cap, if one exists.
  [[nodiscard]] std::optional<Representation> member_bounded(const Rational& q, std::size_t cap) const;

  /// Lengths of all representations with exponents <= cap (sorted).
  [[nodiscard]] std::vector<std::size_t> length_set_bounded(const Rational& q, std::size_t cap) const;

  /// A longest representation with exponents <= cap.
  [[nodiscard]] std::optional<Representation> longest_representation(const Rational& q,
                                                                     std::size_t cap) const;

  /// max L(q) when the length set of q is finite, nullopt when it is infinite.
  /// Requires q in H.
  [[nodiscard]] std::optional<std::size_t> finite_max_length(const Rational& q) const;

  /// a, ar, ..., a r^(len-1).
  [[nodiscard]] std::vector<Rational> decreasing_chain(std::size_t len) const;

  /// For x = a r^i + h with h in H and i <= cap: x, a r^(i+1) + h, ... of length len.
  [[nodiscard]] std::optional<std::vector<Rational>> chain_from(const Rational& x, std::size_t len,
                                                                std::size_t cap) const;

  /// x divides y, i.e. y - x in H, decided through member_bounded at `cap`.
  [[nodiscard]] Tri divides_bounded(const Rational& x, const Rational& y, std::size_t cap) const;
  /// Exact divisibility.
  [[nodiscard]] bool divides(const Rational& x, const Rational& y) const { return contains(y - x); }

  [[nodiscard]] AccpVerdict satisfies_accp_element(const Rational& x, std::size_t cap) const;

  /// Ordinary atom: non-zero and not a sum of two non-zero elements.
  [[nodiscard]] bool is_atom(const Rational& x) const;

  /// Elements of H in [0, x], in decreasing order, a superset of the divisors
  /// of x. When the length set of x is finite every divisor uses exponents up
  /// to the top exponent of x and the list is exhaustive; otherwise exponents
  /// run up to max(top, exponent_cap) and the list is marked truncated, as it
  /// is when the search space exceeds node_cap.
  [[nodiscard]] Enumeration<Rational> elements_below(const Rational& x, std::size_t exponent_cap,
                                                     std::size_t node_cap) const;

  [[nodiscard]] std::vector<AtomCertificate> atoms_up_to(std::size_t n, std::size_t cap) const;

  friend bool operator==(const PuiseuxMonoid&, const PuiseuxMonoid&) = default;

 private:
  // Greedy split counts of the longest representation at `cap`.
  [[nodiscard]] std::vector<Integer> greedy_splits(const Representation& canon, std::size_t cap) const;

  Integer a_;
  Integer b_;
  Rational r_;
};

/// The divisibility premon of H. Divisibility is decided exactly; the
/// relation budget is the exponent cap of the ACCP criterion.
Premon<Rational> make_premon(const PuiseuxMonoid& h);

nlohmann::json to_json(const Representation& rep);
PuiseuxMonoid monoid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PuiseuxMonoid& h);

}  // namespace premon::puiseux
