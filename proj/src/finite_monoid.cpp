#include "premon/finite_monoid.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

namespace premon::finite {

FiniteMonoid FiniteMonoid::validate(const Table& table, Element identity) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("monoid table must have at least one row");
  if (identity >= n) {
    throw ValidationError("identity index " + std::to_string(identity) + " out of range");
  }
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw ValidationError("row " + std::to_string(x) + " has " + std::to_string(table[x].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n) {
        throw ValidationError("entry [" + std::to_string(x) + "][" + std::to_string(y) +
                              "] = " + std::to_string(table[x][y]) + " out of range");
      }
      cells.push_back(table[x][y]);
    }
  }
  FiniteMonoid m(n, identity, std::move(cells));
  for (Element x = 0; x < n; ++x) {
    if (m(identity, x) != x || m(x, identity) != x) {
      throw NoIdentity(x, "index " + std::to_string(identity) +
                              " is not a two-sided identity (fails at " + std::to_string(x) + ")");
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) {
          std::ostringstream os;
          os << "not associative at (" << x << ", " << y << ", " << z << ")";
          throw NotAssociative({x, y, z}, os.str());
        }
      }
    }
  }
  return m;
}

Table FiniteMonoid::table() const {
  Table t(n_, std::vector<Element>(n_));
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) t[x][y] = (*this)(x, y);
  return t;
}

std::vector<Element> FiniteMonoid::elements() const {
  std::vector<Element> v(n_);
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

// ---------------------------------------------------------------------------

std::vector<Element> Relation::row(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < n_; ++y)
    if ((*this)(x, y)) out.push_back(y);
  return out;
}

bool Relation::is_reflexive() const {
  for (Element x = 0; x < n_; ++x)
    if (!(*this)(x, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if ((*this)(x, y))
        for (Element z = 0; z < n_; ++z)
          if ((*this)(y, z) && !(*this)(x, z)) return false;
  return true;
}

Relation Relation::closure() const {
  Relation r = *this;
  for (Element x = 0; x < n_; ++x) r.set(x, x);
  for (Element k = 0; k < n_; ++k)
    for (Element i = 0; i < n_; ++i)
      if (r(i, k))
        for (Element j = 0; j < n_; ++j)
          if (r(k, j)) r.set(i, j);
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Element> units(const FiniteMonoid& m) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = 0; y < m.size(); ++y) {
      if (m(x, y) == m.identity() && m(y, x) == m.identity()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<bool> unit_mask(const FiniteMonoid& m) {
  std::vector<bool> mask(m.size(), false);
  for (Element u : units(m)) mask[u] = true;
  return mask;
}

}  // namespace

std::vector<Element> two_sided_ideal(const FiniteMonoid& m, Element x) {
  std::vector<bool> in(m.size(), false);
  for (Element u = 0; u < m.size(); ++u)
    for (Element v = 0; v < m.size(); ++v) in[m(m(u, x), v)] = true;
  std::vector<Element> out;
  for (Element y = 0; y < m.size(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

DivisibilityMatrix divisibility(const FiniteMonoid& m) {
  DivisibilityMatrix d(m.size());
  for (Element x = 0; x < m.size(); ++x)
    for (Element y : two_sided_ideal(m, x)) d.set(x, y);
  return d;
}

bool is_cancellative(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) {
      std::vector<bool> seen(n, false);
      for (Element x = 0; x < n; ++x) {
        const Element img = m(m(u, x), v);
        if (seen[img]) return false;
        seen[img] = true;
      }
    }
  }
  return true;
}

bool is_unit_cancellative(const FiniteMonoid& m) {
  const auto unit = unit_mask(m);
  for (Element x = 0; x < m.size(); ++x)
    for (Element y = 0; y < m.size(); ++y)
      if (!unit[y] && (m(x, y) == x || m(y, x) == x)) return false;
  return true;
}

bool is_acyclic(const FiniteMonoid& m) {
  const auto unit = unit_mask(m);
  for (Element u = 0; u < m.size(); ++u)
    for (Element v = 0; v < m.size(); ++v) {
      if (unit[u] && unit[v]) continue;
      for (Element x = 0; x < m.size(); ++x)
        if (m(m(u, x), v) == x) return false;
    }
  return true;
}

bool is_group(const FiniteMonoid& m) { return units(m).size() == m.size(); }

std::vector<Element> atoms(const FiniteMonoid& m) {
  const auto unit = unit_mask(m);
  std::vector<bool> decomposable(m.size(), false);
  for (Element y = 0; y < m.size(); ++y)
    for (Element z = 0; z < m.size(); ++z)
      if (!unit[y] && !unit[z]) decomposable[m(y, z)] = true;
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x)
    if (!unit[x] && !decomposable[x]) out.push_back(x);
  return out;
}

bool is_atomic(const FiniteMonoid& m) {
  const auto unit = unit_mask(m);
  std::vector<bool> reach(m.size(), false);
  const auto base = atoms(m);
  for (Element a : base) reach[a] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x = 0; x < m.size(); ++x) {
      if (!reach[x]) continue;
      for (Element a : base) {
        const Element y = m(x, a);
        if (!reach[y]) reach[y] = grew = true;
      }
    }
  }
  for (Element x = 0; x < m.size(); ++x)
    if (!unit[x] && !reach[x]) return false;
  return true;
}

AccpCertificate element_satisfies_accp(const FiniteMonoid& m, Element x) {
  if (x >= m.size()) throw ValidationError("element index out of range");
  const auto d = divisibility(m);
  // HxH is strictly contained in HyH iff y divides x but not conversely.
  std::vector<std::vector<Element>> memo(m.size());
  std::vector<bool> done(m.size(), false);
  std::function<const std::vector<Element>&(Element)> longest = [&](Element z) -> const std::vector<Element>& {
    if (done[z]) return memo[z];
    std::vector<Element> best{z};
    for (Element y = 0; y < m.size(); ++y) {
      if (d(y, z) && !d(z, y)) {
        const auto& tail = longest(y);
        if (tail.size() + 1 > best.size()) {
          best = {z};
          best.insert(best.end(), tail.begin(), tail.end());
        }
      }
    }
    memo[z] = std::move(best);
    done[z] = true;
    return memo[z];
  };
  return {true, longest(x)};
}

// ---------------------------------------------------------------------------

FiniteMonoid relabel(const FiniteMonoid& m, const std::vector<Element>& perm) {
  const std::size_t n = m.size();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells[perm[x] * n + perm[y]] = perm[m(x, y)];
  return FiniteMonoid(n, perm[m.identity()], std::move(cells));
}

FiniteMonoid canonical_form(const FiniteMonoid& m) {
  std::vector<Element> perm = m.elements();
  FiniteMonoid best = m;
  bool first = true;
  do {
    FiniteMonoid c = relabel(m, perm);
    const bool smaller = c.identity() != best.identity() ? c.identity() < best.identity()
                                                         : c.cells() < best.cells();
    if (first || smaller) {
      best = std::move(c);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t n) {
  if (n == 0 || n > 4) throw ValidationError("monoid enumeration supports orders 1 through 4");
  // Identity fixed at index 0; the free cells are the (n-1)^2 products of
  // non-identity elements.
  const std::size_t free = (n - 1) * (n - 1);
  std::vector<Element> digits(free, 0);
  std::set<std::pair<Element, std::vector<Element>>> seen;
  std::vector<FiniteMonoid> out;
  for (;;) {
    Table t(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
    for (std::size_t i = 0; i < free; ++i) t[1 + i / (n - 1)][1 + i % (n - 1)] = digits[i];
    try {
      FiniteMonoid c = canonical_form(FiniteMonoid::validate(t, 0));
      if (seen.emplace(c.identity(), c.cells()).second) out.push_back(std::move(c));
    } catch (const NotAssociative&) {
    }
    std::size_t i = free;
    while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

FiniteMonoid boolean_and() { return FiniteMonoid::validate({{0, 1}, {1, 1}}, 0); }

FiniteMonoid zmod_mult(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x][y] = (x * y) % n;
  return FiniteMonoid::validate(t, n == 1 ? 0 : 1);
}

FiniteMonoid zmod_add(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteMonoid::validate(t, 0);
}

Premon<Element> matrix_premon(const FiniteMonoid& m, const Relation& preorder, std::string tag) {
  if (preorder.size() != m.size()) throw ValidationError("preorder matrix size mismatch");
  if (!preorder.is_reflexive()) throw ValidationError("preorder matrix is not reflexive");
  if (!preorder.is_transitive()) throw ValidationError("preorder matrix is not transitive");
  auto mon = std::make_shared<const FiniteMonoid>(m);
  auto rel = std::make_shared<const Relation>(preorder);
  Premon<Element> p;
  p.monoid.identity = m.identity();
  p.monoid.multiply = [mon](Element x, Element y) { return (*mon)(x, y); };
  p.monoid.equal = [](Element x, Element y, const SearchBudget&) { return to_tri(x == y); };
  p.monoid.carrier = m.elements();
  p.preorder.tag = std::move(tag);
  p.preorder.leq = [rel](Element x, Element y, const SearchBudget&) { return to_tri((*rel)(x, y)); };
  p.render = [](Element x) { return std::to_string(x); };
  return p;
}

Premon<Element> divisibility_premon(const FiniteMonoid& m) {
  return matrix_premon(m, divisibility(m), "divisibility");
}

Premon<Element> discrete_premon(const FiniteMonoid& m) {
  Relation r(m.size());
  for (Element x = 0; x < m.size(); ++x) r.set(x, x);
  return matrix_premon(m, r, "discrete");
}

Premon<Element> flat_premon(const FiniteMonoid& m) {
  Relation r(m.size());
  for (Element x = 0; x < m.size(); ++x)
    for (Element y = 0; y < m.size(); ++y) r.set(x, y);
  return matrix_premon(m, r, "flat");
}

nlohmann::json to_json(const FiniteMonoid& m) {
  return {{"size", m.size()}, {"identity", m.identity()}, {"table", m.table()}};
}

FiniteMonoid monoid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("Cayley table spec must be a JSON object");
  for (const char* key : {"size", "identity", "table"}) {
    if (!j.contains(key)) throw ParseError(std::string("Cayley table spec lacks \"") + key + "\"");
  }
  try {
    const auto n = j.at("size").get<std::size_t>();
    const auto e = j.at("identity").get<Element>();
    const auto t = j.at("table").get<Table>();
    if (t.size() != n) {
      throw ValidationError("\"size\" is " + std::to_string(n) + " but table has " +
                            std::to_string(t.size()) + " rows");
    }
    return FiniteMonoid::validate(t, e);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed Cayley table spec: ") + ex.what());
  }
}

}  // namespace premon::finite
