#pragma once

// Generic premon (monoid + preorder) calculus.
//
// A premon pairs a monoid with an arbitrary preorder on its carrier; no
// compatibility between the two is assumed. Everything here is written once
// against the capability records below and instantiated by each monoid family
// (Cayley tables, Puiseux monoids, presented monoids).
//
// Every predicate returns a bounded truth value: definite answers are
// certificates, budget exhaustion is reported as Tri::Unknown.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "premon/budget.hpp"
#include "premon/errors.hpp"
#include "premon/tri.hpp"

namespace premon {

/// Elements that may lie below some x.
template <class E>
struct Enumeration {
  std::vector<E> items;
  /// Every y with y <= x is equal to some listed item.
  bool exhaustive = false;
  /// A budget cut the listing short; absence of a witness proves nothing.
  bool truncated = false;
};

/// Visitor over k-tuples; returns true to stop the visit.
template <class E>
using SplitVisitor = std::function<bool(std::span<const E>)>;

template <class E>
struct MonoidCapability {
  E identity{};
  std::function<E(const E&, const E&)> multiply;
  std::function<Tri(const E&, const E&, const SearchBudget&)> equal;
  /// Present iff the carrier is finite and fully materialized.
  std::optional<std::vector<E>> carrier;
  /// Infinite carriers: visits k-tuples whose product equals x. The visited
  /// set must contain a qualifying tuple whenever a non-unit split exists.
  /// Returns false when the visit was truncated by budget.
  std::function<bool(const E&, std::size_t, const SearchBudget&, const SplitVisitor<E>&)>
      for_each_split;
};

template <class E>
struct PreorderCapability {
  std::string tag;
  std::function<Tri(const E&, const E&, const SearchBudget&)> leq;
  /// Infinite carriers: candidate elements below x.
  std::function<Enumeration<E>(const E&, const SearchBudget&)> below;
};

/// Family-specific certificates that the generic searches cannot produce.
template <class E>
struct FamilyHooks {
  /// Certified exact preorder height, when the family can prove finiteness.
  std::function<std::optional<std::size_t>(const E&, const SearchBudget&)> exact_height;
  /// A strictly decreasing chain from x of length chain_depth whose pattern
  /// the family knows continues forever.
  std::function<std::optional<std::vector<E>>(const E&, const SearchBudget&)> descending_chain;
  /// Direct artinianity criterion (True certifies artinian).
  std::function<Tri(const E&, const SearchBudget&)> artinian_criterion;
};

template <class E>
struct Premon {
  MonoidCapability<E> monoid;
  PreorderCapability<E> preorder;
  FamilyHooks<E> hooks;
  std::function<std::string(const E&)> render;

  [[nodiscard]] bool is_finite() const { return monoid.carrier.has_value(); }

  [[nodiscard]] std::string show(const E& x) const { return render ? render(x) : std::string("?"); }
};

/// Preorder height: exact, or a certified lower bound.
struct Height {
  enum class Kind : std::uint8_t { Exact, AtLeast };
  Kind kind = Kind::Exact;
  std::size_t value = 0;

  static Height exact(std::size_t n) { return {Kind::Exact, n}; }
  static Height at_least(std::size_t n) { return {Kind::AtLeast, n}; }
  [[nodiscard]] bool is_exact() const { return kind == Kind::Exact; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Height&, const Height&) = default;
};

template <class E>
struct QuarkResult {
  Tri verdict = Tri::Unknown;
  std::optional<E> witness;  // a non-unit strictly below x when verdict is False
};

template <class E>
struct IrreducibleResult {
  Tri verdict = Tri::Unknown;
  std::vector<E> witness;  // non-units strictly below x whose product is x
};

template <class E>
struct ArtinianResult {
  Tri verdict = Tri::Unknown;
  std::vector<E> chain;  // strictly decreasing chain when verdict is False
};

template <class E>
struct SplitStep {
  E parent;
  std::vector<E> parts;  // non-units, each strictly below parent
};

template <class E>
struct Factorization {
  E target;
  std::vector<E> factors;
  Degree degree;
  std::vector<SplitStep<E>> splits;
};

// ---------------------------------------------------------------------------

namespace detail {

template <class E>
Tri unit_tri(const Premon<E>& p, const E& x, const SearchBudget& b) {
  const E& one = p.monoid.identity;
  return p.preorder.leq(x, one, b) && p.preorder.leq(one, x, b);
}

template <class E>
Enumeration<E> candidates(const Premon<E>& p, const E& x, const SearchBudget& b) {
  if (p.monoid.carrier) return {*p.monoid.carrier, true, false};
  if (!p.preorder.below) return {{}, false, true};
  return p.preorder.below(x, b);
}

template <class E>
E product(const Premon<E>& p, std::span<const E> xs) {
  E acc = p.monoid.identity;
  for (const auto& x : xs) acc = p.monoid.multiply(acc, x);
  return acc;
}

}  // namespace detail

/// x is a preorder unit iff x <= 1 <= x. Throws BudgetExhausted if undecided.
template <class E>
bool is_preorder_unit(const Premon<E>& p, const E& x, const SearchBudget& b) {
  const Tri t = detail::unit_tri(p, x, b);
  if (t == Tri::Unknown) throw BudgetExhausted("preorder-unit test undecided for " + p.show(x));
  return t == Tri::True;
}

/// x < y: x <= y and not y <= x.
template <class E>
Tri strictly_below(const Premon<E>& p, const E& x, const E& y, const SearchBudget& b) {
  const Tri fwd = p.preorder.leq(x, y, b);
  if (fwd == Tri::False) return Tri::False;
  return fwd && !p.preorder.leq(y, x, b);
}

template <class E>
QuarkResult<E> is_quark(const Premon<E>& p, const E& x, const SearchBudget& b) {
  const Tri unit = detail::unit_tri(p, x, b);
  if (unit == Tri::True) throw NotANonUnit(p.show(x) + " is a preorder unit");
  if (unit == Tri::Unknown) return {};

  Enumeration<E> cands = detail::candidates(p, x, b);
  bool unsure = cands.truncated;
  std::size_t nodes = 0;
  for (const auto& y : cands.items) {
    if (++nodes > b.node_cap) {
      unsure = true;
      break;
    }
    const Tri below = strictly_below(p, y, x, b);
    if (below == Tri::False) continue;
    const Tri hit = below && !detail::unit_tri(p, y, b);
    if (hit == Tri::True) return {Tri::False, y};
    if (hit == Tri::Unknown) unsure = true;
  }
  return {unsure ? Tri::Unknown : Tri::True, std::nullopt};
}

/// Degree-s irreducibility: x is not a product of k in [2, s] non-units all
/// strictly below x. For s = infinity, k runs up to the factor-length cap.
template <class E>
IrreducibleResult<E> is_irreducible(const Premon<E>& p, const E& x, Degree s,
                                    const SearchBudget& b) {
  const Tri unit = detail::unit_tri(p, x, b);
  if (unit == Tri::True) throw NotANonUnit(p.show(x) + " is a preorder unit");
  if (unit == Tri::Unknown) return {};

  const std::size_t kmax = s.max_factors(b);
  bool unsure = false;
  std::size_t nodes = 0;

  if (p.is_finite()) {
    std::vector<E> parts;
    for (const auto& y : *p.monoid.carrier) {
      const Tri ok = strictly_below(p, y, x, b) && !detail::unit_tri(p, y, b);
      if (ok == Tri::True) parts.push_back(y);
      if (ok == Tri::Unknown) unsure = true;
    }
    if (parts.empty()) return {unsure ? Tri::Unknown : Tri::True, {}};
    // Layered reachability over products of k parts; carriers are canonical,
    // so elements double as keys. Each layer keeps one back-pointer per value.
    std::vector<std::map<E, std::pair<E, E>>> layers(1);
    for (const auto& y : parts) layers[0].emplace(y, std::pair<E, E>{p.monoid.identity, y});
    for (std::size_t k = 2; k <= kmax; ++k) {
      std::map<E, std::pair<E, E>> next;
      for (const auto& [prev, ignored] : layers.back()) {
        for (const auto& y : parts) {
          if (++nodes > b.node_cap) return {};
          next.emplace(p.monoid.multiply(prev, y), std::pair<E, E>{prev, y});
        }
      }
      layers.push_back(std::move(next));
      for (const auto& [val, ignored] : layers.back()) {
        if (p.monoid.equal(val, x, b) != Tri::True) continue;
        std::vector<E> tuple(k, x);
        E cur = val;
        for (std::size_t i = k; i-- > 0;) {
          const auto& [prev, last] = layers[i].at(cur);
          tuple[i] = last;
          cur = prev;
        }
        return {Tri::False, std::move(tuple)};
      }
    }
    return {unsure ? Tri::Unknown : Tri::True, {}};
  }

  if (!p.monoid.for_each_split) return {};
  for (std::size_t k = 2; k <= kmax; ++k) {
    std::vector<E> found;
    const bool complete = p.monoid.for_each_split(x, k, b, [&](std::span<const E> tuple) {
      if (++nodes > b.node_cap) {
        unsure = true;
        return true;
      }
      Tri all = Tri::True;
      for (const auto& y : tuple) {
        all = all && strictly_below(p, y, x, b);
        if (all == Tri::False) break;
        all = all && !detail::unit_tri(p, y, b);
        if (all == Tri::False) break;
      }
      if (all == Tri::True) {
        found.assign(tuple.begin(), tuple.end());
        return true;
      }
      if (all == Tri::Unknown) unsure = true;
      return false;
    });
    if (!found.empty()) return {Tri::False, std::move(found)};
    if (!complete) unsure = true;
  }
  return {unsure ? Tri::Unknown : Tri::True, {}};
}

/// Checks that `chain` is a strictly decreasing sequence of non-units.
template <class E>
Tri certify_chain(const Premon<E>& p, std::span<const E> chain, const SearchBudget& b) {
  Tri ok = Tri::True;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    ok = ok && !detail::unit_tri(p, chain[i], b);
    if (i > 0) ok = ok && strictly_below(p, chain[i], chain[i - 1], b);
    if (ok == Tri::False) return ok;
  }
  return ok;
}

namespace detail {

// Longest strictly decreasing chain of non-units starting at a non-unit.
template <class E>
class HeightSearch {
 public:
  HeightSearch(const Premon<E>& p, const SearchBudget& b) : p_(p), b_(b) {}

  struct Result {
    std::size_t length = 1;
    bool exact = true;
  };

  Result run(const E& x, std::size_t depth) {
    if (auto it = exact_.find(x); it != exact_.end()) return {it->second, true};
    if (p_.hooks.exact_height) {
      if (auto h = p_.hooks.exact_height(x, b_)) {
        exact_.emplace(x, *h);
        return {*h, true};
      }
    }
    if (depth + 1 >= b_.chain_depth) return {1, false};
    Enumeration<E> cands = candidates(p_, x, b_);
    Result best{1, cands.exhaustive && !cands.truncated};
    for (const auto& y : cands.items) {
      if (++nodes_ > b_.node_cap) {
        best.exact = false;
        break;
      }
      const Tri below = strictly_below(p_, y, x, b_);
      if (below == Tri::False) continue;
      const Tri ok = below && !unit_tri(p_, y, b_);
      if (ok == Tri::False) continue;
      if (ok == Tri::Unknown) {
        best.exact = false;
        continue;
      }
      const Result sub = run(y, depth + 1);
      best.length = std::max(best.length, sub.length + 1);
      best.exact = best.exact && sub.exact;
      if (depth + best.length >= b_.chain_depth) {
        best.exact = false;
        break;
      }
    }
    if (best.exact) exact_.emplace(x, best.length);
    return best;
  }

 private:
  const Premon<E>& p_;
  const SearchBudget& b_;
  std::size_t nodes_ = 0;
  std::map<E, std::size_t> exact_;
};

}  // namespace detail

/// Exact height when the strict-descent tree is exhausted (or a family
/// certificate applies); otherwise a certified lower bound.
template <class E>
Height height(const Premon<E>& p, const E& x, const SearchBudget& b) {
  const Tri unit = detail::unit_tri(p, x, b);
  if (unit == Tri::True) return Height::exact(0);
  if (unit == Tri::Unknown) return Height::at_least(0);
  if (!p.is_finite() && p.hooks.exact_height) {
    if (auto h = p.hooks.exact_height(x, b)) return Height::exact(*h);
  }
  // A certified chain of full depth already saturates the lower bound.
  std::optional<std::vector<E>> chain;
  if (p.hooks.descending_chain) chain = p.hooks.descending_chain(x, b);
  if (chain && chain->size() >= b.chain_depth && certify_chain<E>(p, *chain, b) == Tri::True) {
    return Height::at_least(b.chain_depth);
  }
  SearchBudget deep = b;
  if (p.is_finite()) deep.chain_depth = std::max(b.chain_depth, p.monoid.carrier->size() + 1);
  detail::HeightSearch<E> search(p, deep);
  auto r = search.run(x, 0);
  if (r.exact) return Height::exact(r.length);
  std::size_t lower = std::min(r.length, b.chain_depth);
  if (chain && certify_chain<E>(p, *chain, b) == Tri::True) lower = std::max(lower, chain->size());
  return Height::at_least(lower);
}


namespace detail {

template <class E>
ArtinianResult<E> artinian_given(const Premon<E>& p, const E& x, const SearchBudget& b,
                                 const std::function<Height()>& get_height) {
  // Strict descent shrinks the down-set, so a finite carrier admits no
  // infinite strictly decreasing sequence.
  if (p.is_finite()) return {Tri::True, {}};
  if (p.hooks.artinian_criterion && p.hooks.artinian_criterion(x, b) == Tri::True) {
    return {Tri::True, {}};
  }
  if (p.hooks.descending_chain) {
    if (auto chain = p.hooks.descending_chain(x, b)) {
      if (chain->size() >= b.chain_depth && certify_chain<E>(p, *chain, b) == Tri::True) {
        return {Tri::False, std::move(*chain)};
      }
    }
  }
  if (get_height().is_exact()) return {Tri::True, {}};
  return {};
}

}  // namespace detail

template <class E>
ArtinianResult<E> is_artinian_element(const Premon<E>& p, const E& x, const SearchBudget& b) {
  return detail::artinian_given<E>(p, x, b, [&] { return height(p, x, b); });
}

template <class E>
Tri is_strongly_artinian_element(const Premon<E>& p, const E& x, const SearchBudget& b) {
  const Height h = height(p, x, b);
  if (h.is_exact()) return Tri::True;
  if (detail::artinian_given<E>(p, x, b, [&] { return h; }).verdict == Tri::False) return Tri::False;
  return Tri::Unknown;
}

/// Constructive factorization into degree-s irreducibles: return [x] when x is
/// irreducible, otherwise split along the first witness found and recurse.
/// Throws NotANonUnit, or BudgetExhausted when some step stays undecided.
template <class E>
Factorization<E> factor_into_irreducibles(const Premon<E>& p, const E& x, Degree s,
                                          const SearchBudget& b) {
  if (is_preorder_unit(p, x, b)) throw NotANonUnit(p.show(x) + " is a preorder unit");
  Factorization<E> out{x, {}, s, {}};
  std::size_t nodes = 0;
  std::function<void(const E&)> go = [&](const E& y) {
    if (++nodes > b.node_cap) throw BudgetExhausted("factorization node cap reached");
    auto irr = is_irreducible(p, y, s, b);
    if (irr.verdict == Tri::True) {
      out.factors.push_back(y);
      return;
    }
    if (irr.verdict == Tri::Unknown) {
      throw BudgetExhausted("irreducibility of " + p.show(y) + " undecided");
    }
    out.splits.push_back({y, irr.witness});
    for (const auto& part : irr.witness) go(part);
  };
  go(x);
  return out;
}

/// Replays a factorization: ordered product equals the target, every split is
/// certified, and every factor is irreducible at the same budget.
template <class E>
Tri check_factorization(const Premon<E>& p, const Factorization<E>& f, const SearchBudget& b) {
  if (f.factors.empty()) return Tri::False;
  Tri ok = p.monoid.equal(detail::product<E>(p, f.factors), f.target, b);
  for (const auto& step : f.splits) {
    ok = ok && p.monoid.equal(detail::product<E>(p, step.parts), step.parent, b);
    for (const auto& part : step.parts) {
      ok = ok && strictly_below(p, part, step.parent, b) && !detail::unit_tri(p, part, b);
    }
  }
  for (const auto& y : f.factors) ok = ok && is_irreducible(p, y, f.degree, b).verdict;
  return ok;
}

/// Principal ideal {y : y <= x}.
template <class E>
std::vector<E> down_set(const Premon<E>& p, const E& x, const SearchBudget& b) {
  Enumeration<E> cands = detail::candidates(p, x, b);
  if (!cands.exhaustive || cands.truncated) {
    throw BudgetExhausted("down-set of " + p.show(x) + " not enumerable within budget");
  }
  std::vector<E> out;
  for (const auto& y : cands.items) {
    const Tri t = p.preorder.leq(y, x, b);
    if (t == Tri::Unknown) throw BudgetExhausted("leq undecided inside down-set");
    if (t == Tri::True) out.push_back(y);
  }
  return out;
}

/// Principal filter {y : x <= y}. Finite carriers only.
template <class E>
std::vector<E> up_set(const Premon<E>& p, const E& x, const SearchBudget& b) {
  if (!p.is_finite()) throw BudgetExhausted("up-set requires a finite carrier");
  std::vector<E> out;
  for (const auto& y : *p.monoid.carrier) {
    const Tri t = p.preorder.leq(x, y, b);
    if (t == Tri::Unknown) throw BudgetExhausted("leq undecided inside up-set");
    if (t == Tri::True) out.push_back(y);
  }
  return out;
}

/// The premon with the opposite preorder. Bounded below-enumeration does not
/// dualize, so on infinite carriers the wrapper only answers leq queries.
template <class E>
Premon<E> dual(const Premon<E>& p) {
  Premon<E> q = p;
  q.preorder.tag = p.preorder.tag + "^op";
  q.preorder.leq = [leq = p.preorder.leq](const E& x, const E& y, const SearchBudget& b) {
    return leq(y, x, b);
  };
  q.preorder.below = nullptr;
  q.hooks = {};
  return q;
}

/// k-local artinianity on a finite carrier: every non-unit is a product of at
/// most k artinian (strongly artinian, when `strong`) non-units. k = 0 stands
/// for infinity and is bounded by the factor-length cap.
template <class E>
Tri is_k_locally_artinian(const Premon<E>& p, std::size_t k, bool strong, const SearchBudget& b) {
  if (!p.is_finite()) throw BudgetExhausted("k-local artinianity requires a finite carrier");
  const std::size_t kmax = k == 0 ? b.factor_length_cap : k;
  const auto& carrier = *p.monoid.carrier;
  std::vector<E> good;
  std::vector<E> nonunits;
  for (const auto& y : carrier) {
    if (is_preorder_unit(p, y, b)) continue;
    nonunits.push_back(y);
    const Tri a = strong ? is_strongly_artinian_element(p, y, b) : is_artinian_element(p, y, b).verdict;
    if (a == Tri::True) good.push_back(y);
  }
  Tri all = Tri::True;
  for (const auto& x : nonunits) {
    bool found = false;
    for (std::size_t len = 1; len <= kmax && !found && !good.empty(); ++len) {
      std::vector<std::size_t> odo(len, 0);
      std::vector<E> tuple(len, good.front());
      for (;;) {
        for (std::size_t i = 0; i < len; ++i) tuple[i] = good[odo[i]];
        if (p.monoid.equal(detail::product<E>(p, tuple), x, b) == Tri::True) {
          found = true;
          break;
        }
        std::size_t i = len;
        while (i > 0 && ++odo[i - 1] == good.size()) odo[--i] = 0;
        if (i == 0) break;
      }
    }
    if (!found) all = Tri::False;
  }
  return all;
}

/// Every non-unit factors into degree-2 irreducibles (finite carriers).
template <class E>
Tri is_factorable(const Premon<E>& p, const SearchBudget& b) {
  if (!p.is_finite()) throw BudgetExhausted("factorability requires a finite carrier");
  for (const auto& x : *p.monoid.carrier) {
    if (is_preorder_unit(p, x, b)) continue;
    try {
      auto f = factor_into_irreducibles(p, x, Degree::finite(2), b);
      if (check_factorization(p, f, b) != Tri::True) return Tri::False;
    } catch (const BudgetExhausted&) {
      return Tri::Unknown;
    }
  }
  return Tri::True;
}

// ---------------------------------------------------------------------------

template <class E>
struct Classification {
  E element;
  bool is_unit = false;
  Tri is_quark = Tri::False;
  std::optional<E> quark_witness;
  std::vector<std::pair<Degree, Tri>> irreducible;
  Height height;
  Tri artinian = Tri::Unknown;
  Tri strongly_artinian = Tri::Unknown;
  std::vector<E> chain;  // descending-chain witness when artinian is False
};

inline std::vector<Degree> default_degrees() {
  return {Degree::finite(2), Degree::finite(3), Degree::infinity()};
}

template <class E>
Classification<E> classify(const Premon<E>& p, const E& x, const SearchBudget& b,
                           const std::vector<Degree>& degrees = default_degrees()) {
  Classification<E> c;
  c.element = x;
  c.is_unit = is_preorder_unit(p, x, b);
  if (!c.is_unit) {
    auto q = is_quark(p, x, b);
    c.is_quark = q.verdict;
    c.quark_witness = q.witness;
    for (const auto& s : degrees) c.irreducible.emplace_back(s, is_irreducible(p, x, s, b).verdict);
  }
  c.height = height(p, x, b);
  auto art = detail::artinian_given<E>(p, x, b, [&] { return c.height; });
  c.artinian = art.verdict;
  c.chain = std::move(art.chain);
  c.strongly_artinian = c.height.is_exact() ? Tri::True
                        : c.artinian == Tri::False ? Tri::False
                                                   : Tri::Unknown;
  return c;
}

}  // namespace premon
