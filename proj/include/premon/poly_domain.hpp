#pragma once

// The domain R = Z + X Q[X] of rational polynomials with integer constant
// term, viewed through the multiplicative monoid of its non-zero elements.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "premon/premon.hpp"
#include "premon/rational.hpp"

namespace premon::poly {

/// Rational polynomial, constant term first, no trailing zero coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);
  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  /// q X
  static RatPoly linear0(const Rational& q) { return RatPoly({Rational(0), q}); }

  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  [[nodiscard]] Rational constant_term() const { return coefficient(0); }
  /// Integer constant term.
  [[nodiscard]] bool in_domain() const { return is_integer(constant_term()); }

  friend RatPoly operator*(const RatPoly& f, const RatPoly& g);
  friend RatPoly operator+(const RatPoly& f, const RatPoly& g);
  friend RatPoly operator-(const RatPoly& f, const RatPoly& g);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  /// Degree first, then coefficients from the constant term up.
  friend bool operator<(const RatPoly& f, const RatPoly& g) {
    if (f.c_.size() != g.c_.size()) return f.c_.size() < g.c_.size();
    return std::lexicographical_compare(f.c_.begin(), f.c_.end(), g.c_.begin(), g.c_.end());
  }

 private:
  std::vector<Rational> c_;
};

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

/// Division in Q[X]; throws ValidationError for a zero divisor.
DivMod divmod(const RatPoly& f, const RatPoly& g);

/// "c0,c1,..." with rationals written p or p/q.
RatPoly parse_poly(std::string_view text);
/// Human form such as "2 + (3/2)X^2"; "0" for the zero polynomial.
std::string to_string(const RatPoly& f);
nlohmann::json to_json(const RatPoly& f);
RatPoly poly_from_json(const nlohmann::json& j);

/// Units of R are +1 and -1.
bool is_unit(const RatPoly& f);

/// f | g in R: g = f h for some h in R. Throws ValidationError on zero input
/// or on polynomials outside R.
bool divides(const RatPoly& f, const RatPoly& g);

/// q1 X | q2 X in R, i.e. q2 / q1 is an integer.
bool divides_linear0(const Rational& q1, const Rational& q2);

struct ChainLink {
  RatPoly from;
  RatPoly to;
  bool forward = false;  // to | from
  bool reverse = true;   // from | to
};

struct PolyChain {
  std::vector<RatPoly> elements;
  std::vector<ChainLink> links;
  [[nodiscard]] bool strictly_decreasing() const;
};

/// qX, (q/2)X, ..., (q/2^(len-1))X with both divisibility directions checked.
PolyChain descending_chain_qX(const Rational& q, std::size_t len);

/// Every factor list with product X has exactly one factor of the form cX and
/// all other factors constant.
bool check_divisor_shape_of_X(const std::vector<RatPoly>& factors);

struct NonAtomCertificate {
  Rational q;
  RatPoly target;                // qX
  std::vector<RatPoly> factors;  // 2, (q/2)X
  bool product_matches = false;
  bool factors_non_units = false;
  bool factors_in_domain = false;
  /// Divisor-shape check on sampled factorizations of X.
  bool x_shape_checked = false;
  [[nodiscard]] bool valid() const {
    return product_matches && factors_non_units && factors_in_domain && x_shape_checked;
  }
};

/// Throws ValidationError for q = 0.
NonAtomCertificate qX_is_never_atom(const Rational& q);

/// Atom test for the shapes the demonstration needs: an integer constant is an
/// atom iff its absolute value is prime, and qX never is. Unknown otherwise.
Tri is_atom(const RatPoly& f);

/// Divisibility premon of R. Below-enumeration is unavailable; the descending
/// chain of a qX element is wired as a family certificate.
Premon<RatPoly> make_premon();

}  // namespace premon::poly
