#include "premon/puiseux.hpp"

#include <algorithm>
#include <memory>

#include "premon/errors.hpp"

namespace premon::puiseux {

using premon::to_string;

namespace {

Integer mod_inverse(const Integer& x, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw ValidationError("no modular inverse");
  }
  return inv;
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::size_t to_size(const Integer& z) {
  if (z < 0 || !z.fits_ulong_p()) throw ValidationError("length exceeds the native range");
  return z.get_ui();
}

}  // namespace

Integer Representation::length() const {
  Integer n = 0;
  for (const auto& c : coefficients) n += c;
  return n;
}

Rational Representation::value(const PuiseuxMonoid& h) const {
  Rational v = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) v += Rational(coefficients[i]) * h.generator(i);
  return v;
}

std::vector<std::pair<std::size_t, Integer>> Representation::terms() const {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) out.emplace_back(i, coefficients[i]);
  return out;
}

PuiseuxMonoid::PuiseuxMonoid(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ <= 0 || b_ <= a_) throw ValidationError("Puiseux generator needs 0 < a < b");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  if (g != 1) throw ValidationError("Puiseux generator needs gcd(a, b) = 1");
  r_ = Rational(a_, b_);
}

std::optional<std::size_t> PuiseuxMonoid::denominator_exponent(const Rational& q) const {
  Integer den = q.get_den();
  std::size_t m = 0;
  // least m with den | b^m
  while (den != 1) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), b_.get_mpz_t());
    if (g == 1) return std::nullopt;
    den /= g;
    ++m;
  }
  return m;
}

std::optional<Representation> PuiseuxMonoid::canonical(const Rational& q) const {
  if (q < 0) return std::nullopt;
  const auto m = denominator_exponent(q);
  if (!m) return std::nullopt;
  Representation rep{std::vector<Integer>(*m + 1, 0)};
  Rational rem = q;
  for (std::size_t i = *m; i >= 1; --i) {
    // rem * b^i is an integer; its residue mod b fixes the digit c_i.
    const Rational scaled = rem * Rational(pow(b_, i));
    const Integer p = scaled.get_num();
    Integer c = (p * mod_inverse(pow(a_, i) % b_, b_)) % b_;
    if (c < 0) c += b_;
    rep.coefficients[i] = c;
    rem -= Rational(c) * generator(i);
    if (rem < 0) return std::nullopt;
  }
  if (!is_integer(rem)) return std::nullopt;
  rep.coefficients[0] = rem.get_num();
  return rep;
}

std::optional<Representation> PuiseuxMonoid::member_bounded(const Rational& q, std::size_t cap) const {
  auto rep = canonical(q);
  if (!rep || rep->exponent_bound() > cap) return std::nullopt;
  rep->coefficients.resize(cap + 1, 0);
  return rep;
}

std::vector<Integer> PuiseuxMonoid::greedy_splits(const Representation& canon, std::size_t cap) const {
  // splits[i] trades a copies of r^i for b copies of r^(i+1). Taking the
  // largest feasible count level by level maximizes the total, and every
  // smaller total is reachable by undoing the deepest split.
  std::vector<Integer> splits(cap, 0);
  Integer carry = 0;
  for (std::size_t i = 0; i < cap; ++i) {
    const Integer have = (i < canon.coefficients.size() ? canon.coefficients[i] : Integer(0)) + carry;
    splits[i] = floor_div(have, a_);
    carry = splits[i] * b_;
  }
  return splits;
}

std::optional<Representation> PuiseuxMonoid::longest_representation(const Rational& q,
                                                                    std::size_t cap) const {
  auto rep = member_bounded(q, cap);
  if (!rep) return std::nullopt;
  const auto splits = greedy_splits(*rep, cap);
  for (std::size_t i = 0; i < cap; ++i) {
    rep->coefficients[i] -= a_ * splits[i];
    rep->coefficients[i + 1] += b_ * splits[i];
  }
  return rep;
}

std::vector<std::size_t> PuiseuxMonoid::length_set_bounded(const Rational& q, std::size_t cap) const {
  const auto rep = member_bounded(q, cap);
  if (!rep) return {};
  Integer total = 0;
  for (const auto& s : greedy_splits(*rep, cap)) total += s;
  const std::size_t base = to_size(rep->length());
  const std::size_t steps = to_size(total);
  const std::size_t stride = to_size(b_ - a_);
  if (steps > 10'000'000) throw ValidationError("length set too large to materialize");
  std::vector<std::size_t> out;
  out.reserve(steps + 1);
  for (std::size_t t = 0; t <= steps; ++t) out.push_back(base + t * stride);
  return out;
}

std::optional<std::size_t> PuiseuxMonoid::finite_max_length(const Rational& q) const {
  const auto canon = canonical(q);
  if (!canon) throw ValidationError(to_string(q) + " is not an element of H");
  // Past the top exponent m a level keeps splitting iff the previous one did,
  // so the length set is finite iff nothing splits at level m.
  const std::size_t m = canon->exponent_bound();
  const auto splits = greedy_splits(*canon, m + 1);
  if (splits[m] != 0) return std::nullopt;
  Integer total = 0;
  for (const auto& s : splits) total += s;
  return to_size(canon->length() + (b_ - a_) * total);
}

std::vector<Rational> PuiseuxMonoid::decreasing_chain(std::size_t len) const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(Rational(a_) * generator(i));
  return out;
}

std::optional<std::vector<Rational>> PuiseuxMonoid::chain_from(const Rational& x, std::size_t len,
                                                               std::size_t cap) const {
  for (std::size_t i = 0; i <= cap; ++i) {
    const Rational base = x - Rational(a_) * generator(i);
    if (!contains(base)) continue;
    std::vector<Rational> out;
    for (std::size_t j = 0; j < len; ++j) out.push_back(base + Rational(a_) * generator(i + j));
    return out;
  }
  return std::nullopt;
}

Tri PuiseuxMonoid::divides_bounded(const Rational& x, const Rational& y, std::size_t cap) const {
  const Rational diff = y - x;
  if (diff < 0) return Tri::False;
  const auto rep = canonical(diff);
  if (!rep) return Tri::False;
  return rep->exponent_bound() <= cap ? Tri::True : Tri::Unknown;
}

AccpVerdict PuiseuxMonoid::satisfies_accp_element(const Rational& x, std::size_t cap) const {
  const auto m = denominator_exponent(x);
  if (!m || !contains(x)) throw ValidationError(to_string(x) + " is not an element of H");
  for (std::size_t i = 0; i <= cap; ++i) {
    const Rational rest = x - Rational(a_) * generator(i);
    if (rest < 0) continue;
    if (auto rep = member_bounded(rest, cap)) return {Tri::False, i, std::move(rep)};
  }
  if (*m > cap) return {};
  // Non-membership for every i <= cap is certified once cap reaches the top
  // exponent of x; a finite length set then certifies finite height.
  if (finite_max_length(x)) return {Tri::True, {}, {}};
  return {};
}

bool PuiseuxMonoid::is_atom(const Rational& x) const {
  if (x == 0) return false;
  const auto longest = finite_max_length(x);
  return longest && *longest == 1;
}

Enumeration<Rational> PuiseuxMonoid::elements_below(const Rational& x, std::size_t exponent_cap,
                                                    std::size_t node_cap) const {
  Enumeration<Rational> out;
  const auto m0 = denominator_exponent(x);
  if (!m0 || x < 0 || !contains(x)) {
    out.truncated = true;
    return out;
  }
  const bool complete = finite_max_length(x).has_value();
  const std::size_t last = complete ? *m0 : std::max(*m0, exponent_cap);
  const Integer limit(static_cast<unsigned long>(node_cap));
  Integer spent = 0;
  // Level m lists the elements below x with denominator exponent exactly m
  // (everything up to m0 on the first level), each level in decreasing order.
  for (std::size_t m = *m0; m <= last; ++m) {
    const Rational scaled = x * Rational(pow(b_, m));
    const Integer top = scaled.get_num();
    spent += top;
    if (spent > limit) {
      out.truncated = true;
      return out;
    }
    const std::size_t n = top.get_ui();
    std::vector<unsigned char> reach(n + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i <= m; ++i) {
      const Integer w = pow(a_, i) * pow(b_, m - i);
      if (w > top) continue;
      const std::size_t step = w.get_ui();
      for (std::size_t v = step; v <= n; ++v)
        if (reach[v - step]) reach[v] = 1;
    }
    const Integer den = pow(b_, m);
    for (std::size_t v = n + 1; v-- > 0;) {
      if (!reach[v]) continue;
      Rational y(Integer(static_cast<unsigned long>(v)), den);
      y.canonicalize();
      if (m == *m0 || denominator_exponent(y) == m) out.items.push_back(std::move(y));
    }
  }
  out.exhaustive = complete;
  out.truncated = !complete;
  return out;
}

std::vector<AtomCertificate> PuiseuxMonoid::atoms_up_to(std::size_t n, std::size_t cap) const {
  const auto p = make_premon(*this);
  SearchBudget budget;
  budget.relation_budget = cap;
  std::vector<AtomCertificate> out;
  for (std::size_t i = 0; i <= n; ++i) {
    AtomCertificate c{i, generator(i)};
    c.quark = is_quark(p, c.value, budget).verdict;
    c.irreducible = is_irreducible(p, c.value, Degree::finite(2), budget).verdict;
    c.atom = to_tri(is_atom(c.value));
    c.accp = satisfies_accp_element(c.value, std::max(cap, i)).verdict;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

Premon<Rational> make_premon(const PuiseuxMonoid& monoid) {
  auto h = std::make_shared<const PuiseuxMonoid>(monoid);
  Premon<Rational> p;
  p.monoid.identity = Rational(0);
  p.monoid.multiply = [](const Rational& x, const Rational& y) { return Rational(x + y); };
  p.monoid.equal = [](const Rational& x, const Rational& y, const SearchBudget&) {
    return to_tri(x == y);
  };
  p.monoid.for_each_split = [h](const Rational& x, std::size_t k, const SearchBudget&,
                                const SplitVisitor<Rational>& visit) {
    // Any k non-zero summands lie strictly below x, so k parts exist iff
    // some representation has length >= k; an infinite length set reaches k
    // within k extra exponents.
    const auto m = h->denominator_exponent(x);
    if (!m) return false;
    std::optional<Representation> rep;
    for (std::size_t cap = *m; cap <= *m + k; ++cap) {
      rep = h->longest_representation(x, cap);
      if (rep && rep->length() >= static_cast<unsigned long>(k)) break;
    }
    if (!rep || rep->length() < static_cast<unsigned long>(k)) return true;
    std::vector<Rational> parts;
    Rational rest = x;
    for (const auto& [e, c] : rep->terms()) {
      for (Integer t = 0; t < c && parts.size() + 1 < k; ++t) {
        parts.push_back(h->generator(e));
        rest -= parts.back();
      }
    }
    parts.push_back(rest);
    visit(parts);
    return true;
  };
  p.preorder.tag = "divisibility";
  p.preorder.leq = [h](const Rational& x, const Rational& y, const SearchBudget&) {
    return to_tri(h->divides(x, y));
  };
  p.preorder.below = [h](const Rational& x, const SearchBudget& b) {
    return h->elements_below(x, b.relation_budget, b.node_cap);
  };
  p.hooks.exact_height = [h](const Rational& x, const SearchBudget&) -> std::optional<std::size_t> {
    if (!h->contains(x)) return std::nullopt;
    // A strict chain of length n peels off n non-zero summands, and a longest
    // factorization yields a chain of its length.
    return h->finite_max_length(x);
  };
  p.hooks.descending_chain = [h](const Rational& x, const SearchBudget& b) {
    return h->chain_from(x, b.chain_depth, b.relation_budget);
  };
  p.hooks.artinian_criterion = [h](const Rational& x, const SearchBudget& b) {
    if (!h->contains(x)) return Tri::Unknown;
    return h->satisfies_accp_element(x, b.relation_budget).verdict;
  };
  p.render = [](const Rational& x) { return to_string(x); };
  return p;
}

nlohmann::json to_json(const Representation& rep) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : rep.terms()) terms.push_back({e, c.get_str()});
  return terms;
}

nlohmann::json to_json(const PuiseuxMonoid& h) { return {{"a", h.a().get_str()}, {"b", h.b().get_str()}}; }

PuiseuxMonoid monoid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw ParseError("Puiseux spec must be an object with \"a\" and \"b\"");
  }
  auto as_int = [](const nlohmann::json& v) -> Integer {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
      const Rational q = parse_rational(v.get<std::string>());
      if (!is_integer(q)) throw ParseError("Puiseux parameters must be integers");
      return q.get_num();
    }
    throw ParseError("Puiseux parameters must be integers");
  };
  return PuiseuxMonoid(as_int(j.at("a")), as_int(j.at("b")));
}

}  // namespace premon::puiseux
