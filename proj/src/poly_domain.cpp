#include "premon/poly_domain.hpp"

#include <algorithm>
#include <sstream>

#include "premon/errors.hpp"

namespace premon::poly {

using premon::to_string;

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool is_linear0(const RatPoly& f) { return f.degree() == 1 && f.constant_term() == 0; }

void require_domain(const RatPoly& f) {
  if (f.is_zero()) throw ValidationError("zero is not an element of the monoid");
  if (!f.in_domain()) throw ValidationError(to_string(f) + " has a non-integer constant term");
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& q : c_) q.canonicalize();
  trim(c_);
}

RatPoly operator*(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Rational> out(f.c_.size() + g.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.c_.size(); ++i)
    for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
  return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& f, const RatPoly& g) {
  std::vector<Rational> out(std::max(f.c_.size(), g.c_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coefficient(i) + g.coefficient(i);
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& f, const RatPoly& g) {
  std::vector<Rational> out(std::max(f.c_.size(), g.c_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coefficient(i) - g.coefficient(i);
  return RatPoly(std::move(out));
}

DivMod divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw ValidationError("division by the zero polynomial");
  std::vector<Rational> rem = f.coefficients();
  const auto& d = g.coefficients();
  const std::size_t dg = d.size() - 1;
  if (rem.size() < d.size()) return {RatPoly(), f};
  std::vector<Rational> quot(rem.size() - dg, Rational(0));
  for (std::size_t i = rem.size(); i-- > dg;) {
    const Rational c = rem[i] / d[dg];
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= c * d[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly parse_poly(std::string_view text) {
  std::vector<Rational> c;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw ParseError("empty coefficient list");
  return RatPoly(std::move(c));
}

std::string to_string(const RatPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Rational mag = abs(c[i]);
    const bool neg = c[i] < 0;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string term;
    if (i == 0) {
      term = to_string(mag);
    } else {
      if (mag != 1) term = is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
      term += "X";
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out;
}

nlohmann::json to_json(const RatPoly& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : f.coefficients()) out.push_back(to_string(q));
  return out;
}

RatPoly poly_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient list");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (v.is_number_integer()) c.emplace_back(v.get<long>());
    else if (v.is_string()) c.push_back(parse_rational(v.get<std::string>()));
    else throw ParseError("polynomial coefficients must be integers or \"p/q\" strings");
  }
  return RatPoly(std::move(c));
}

bool is_unit(const RatPoly& f) {
  return f.degree() == 0 && (f.constant_term() == 1 || f.constant_term() == -1);
}

bool divides(const RatPoly& f, const RatPoly& g) {
  require_domain(f);
  require_domain(g);
  const auto [q, r] = divmod(g, f);
  return r.is_zero() && q.in_domain();
}

bool divides_linear0(const Rational& q1, const Rational& q2) {
  if (q1 == 0 || q2 == 0) throw ValidationError("zero is not an element of the monoid");
  return is_integer(Rational(q2 / q1));
}

bool PolyChain::strictly_decreasing() const {
  return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.forward && !l.reverse; });
}

PolyChain descending_chain_qX(const Rational& q, std::size_t len) {
  if (q == 0) throw ValidationError("q must be non-zero");
  PolyChain chain;
  Rational c = q;
  for (std::size_t i = 0; i < len; ++i) {
    chain.elements.push_back(RatPoly::linear0(c));
    c /= 2;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const auto& from = chain.elements[i - 1];
    const auto& to = chain.elements[i];
    chain.links.push_back({from, to, divides(to, from), divides(from, to)});
  }
  return chain;
}

bool check_divisor_shape_of_X(const std::vector<RatPoly>& factors) {
  RatPoly prod = RatPoly::constant(1);
  for (const auto& f : factors) prod = prod * f;
  if (prod != RatPoly::linear0(1)) return false;
  // Degrees add to one and constant terms multiply to zero.
  std::size_t linear = 0;
  for (const auto& f : factors) {
    if (is_linear0(f)) ++linear;
    else if (f.degree() != 0) return false;
  }
  return linear == 1;
}

NonAtomCertificate qX_is_never_atom(const Rational& q) {
  if (q == 0) throw ValidationError("q must be non-zero");
  NonAtomCertificate cert;
  cert.q = q;
  cert.target = RatPoly::linear0(q);
  cert.factors = {RatPoly::constant(2), RatPoly::linear0(Rational(q / 2))};
  cert.product_matches = cert.factors[0] * cert.factors[1] == cert.target;
  cert.factors_non_units = std::none_of(cert.factors.begin(), cert.factors.end(),
                                        [](const RatPoly& f) { return is_unit(f); });
  cert.factors_in_domain = std::all_of(cert.factors.begin(), cert.factors.end(),
                                       [](const RatPoly& f) { return !f.is_zero() && f.in_domain(); });
  // Sample factorizations of X that include the one the certificate induces
  // for q = 1, plus sign and integer-scaling variants.
  const std::vector<std::vector<RatPoly>> samples = {
      {RatPoly::linear0(1)},
      {RatPoly::constant(2), RatPoly::linear0(Rational(1, 2))},
      {RatPoly::constant(-1), RatPoly::constant(3), RatPoly::linear0(Rational(-1, 3))},
      {RatPoly::constant(2), RatPoly::constant(2), RatPoly::linear0(Rational(1, 4))},
  };
  cert.x_shape_checked = std::all_of(samples.begin(), samples.end(), check_divisor_shape_of_X);
  return cert;
}

Tri is_atom(const RatPoly& f) {
  if (f.is_zero() || !f.in_domain()) throw ValidationError(to_string(f) + " is not an element of the monoid");
  if (is_unit(f)) return Tri::False;
  if (is_linear0(f)) return Tri::False;
  if (f.degree() == 0) {
    // Degrees add, so a constant only factors into constants of R, i.e. integers.
    const Rational mag = abs(f.constant_term());
    const Integer n = mag.get_num();
    return to_tri(mpz_probab_prime_p(n.get_mpz_t(), 50) > 0);
  }
  return Tri::Unknown;
}

Premon<RatPoly> make_premon() {
  Premon<RatPoly> p;
  p.monoid.identity = RatPoly::constant(1);
  p.monoid.multiply = [](const RatPoly& f, const RatPoly& g) { return f * g; };
  p.monoid.equal = [](const RatPoly& f, const RatPoly& g, const SearchBudget&) { return to_tri(f == g); };
  p.preorder.tag = "divisibility";
  p.preorder.leq = [](const RatPoly& f, const RatPoly& g, const SearchBudget&) {
    return to_tri(divides(f, g));
  };
  p.hooks.descending_chain = [](const RatPoly& f, const SearchBudget& b) -> std::optional<std::vector<RatPoly>> {
    if (!is_linear0(f)) return std::nullopt;
    return descending_chain_qX(f.coefficient(1), b.chain_depth).elements;
  };
  p.render = [](const RatPoly& f) { return to_string(f); };
  return p;
}

}  // namespace premon::poly
