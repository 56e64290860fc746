#include "premon/presented.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "premon/errors.hpp"

namespace premon::presented {

namespace {

std::size_t parse_index(std::string_view digits, std::string_view token) {
  if (digits.empty()) throw ParseError("missing index in word token '" + std::string(token) + "'");
  std::size_t v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad word token '" + std::string(token) + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

Word x_block(std::size_t from, std::size_t count) {
  Word w;
  for (std::size_t i = 0; i < count; ++i) w.push_back(x(from + i));
  return w;
}

Word y_block(std::size_t lo, std::size_t hi) {
  Word w;
  for (std::size_t j = lo + 1; j <= hi; ++j) w.push_back(y(j));
  return w;
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& repl) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  return out;
}

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  return pos + pattern.size() <= w.size() &&
         std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2) throw ParseError("bad word token '" + tok + "'");
    const std::string_view digits = std::string_view(tok).substr(1);
    if (tok[0] == 'x') {
      w.push_back(x(parse_index(digits, tok)));
    } else if (tok[0] == 'y') {
      const std::size_t j = parse_index(digits, tok);
      if (j == 0) throw ParseError("y letters are indexed from 1");
      w.push_back(y(j));
    } else {
      throw ParseError("bad word token '" + tok + "'");
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += (l.kind == Letter::Kind::X ? 'x' : 'y');
    out += std::to_string(l.index);
  }
  return out;
}

// ---------------------------------------------------------------------------

Sigma Sigma::identity() { return {}; }

Sigma Sigma::square() {
  Sigma s;
  s.kind_ = Kind::Square;
  return s;
}

Sigma Sigma::table(std::vector<std::size_t> values, std::optional<Tail> tail) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) throw ValidationError("sigma table must be strictly increasing");
  }
  if (tail) {
    if (tail->c < 1) throw ValidationError("sigma tail needs c >= 1");
    const auto n = static_cast<std::int64_t>(values.size());
    const std::int64_t first = tail->c * n + tail->d;
    if (first < 0) throw ValidationError("sigma tail must stay non-negative");
    if (!values.empty() && first <= static_cast<std::int64_t>(values.back())) {
      throw ValidationError("sigma tail must continue the table increasingly");
    }
  }
  if (values.empty() && !tail) throw ValidationError("sigma table is empty");
  Sigma s;
  s.kind_ = Kind::Table;
  s.table_ = std::move(values);
  s.tail_ = tail;
  return s;
}

std::optional<std::size_t> Sigma::try_at(std::size_t n) const {
  switch (kind_) {
    case Kind::Identity:
      return n;
    case Kind::Square:
      return n * n;
    case Kind::Table:
      if (n < table_.size()) return table_[n];
      if (tail_) return static_cast<std::size_t>(tail_->c * static_cast<std::int64_t>(n) + tail_->d);
      return std::nullopt;
  }
  return std::nullopt;
}

std::size_t Sigma::operator()(std::size_t n) const {
  if (auto v = try_at(n)) return *v;
  throw ValidationError("sigma undefined at " + std::to_string(n));
}

nlohmann::json Sigma::to_json() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Square:
      return "square";
    case Kind::Table: {
      nlohmann::json j{{"table", table_}};
      if (tail_) j["tail"] = {{"c", tail_->c}, {"d", tail_->d}};
      return j;
    }
  }
  return nullptr;
}

Sigma Sigma::from_json(const nlohmann::json& j) {
  if (j.is_null()) return identity();
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "identity" || name == "id") return identity();
    if (name == "square") return square();
    throw ParseError("unknown sigma '" + name + "'");
  }
  if (!j.is_object() || !j.contains("table")) throw ParseError("sigma must be a name or {\"table\": [...]}");
  try {
    std::optional<Tail> tail;
    if (j.contains("tail")) tail = Tail{j.at("tail").at("c").get<std::int64_t>(), j.at("tail").at("d").get<std::int64_t>()};
    return table(j.at("table").get<std::vector<std::size_t>>(), tail);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad sigma: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Trace ClassExploration::trace_to(std::size_t i) const {
  Trace t;
  while (i != 0) {
    t.push_back(via[i]);
    i = parent[i];
  }
  std::reverse(t.begin(), t.end());
  return t;
}

bool ChainCertificate::forward_certified() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.forward == Tri::True; });
}

bool ChainCertificate::strictness_proved() const {
  return forward_certified() &&
         std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.reverse == Tri::False; });
}

bool LocalArtinianWitness::valid() const {
  return factors.size() >= 2 && equivalent == Tri::True && factor_quark.size() == factors.size() &&
         std::all_of(factor_quark.begin(), factor_quark.end(), [](Tri t) { return t == Tri::True; });
}

// ---------------------------------------------------------------------------

PresentedMonoid::PresentedMonoid(std::size_t h, std::size_t k, Sigma sigma)
    : h_(h), k_(k), sigma_(std::move(sigma)) {
  if (h_ < 2 || k_ < 2) throw ValidationError("presentation needs h, k >= 2");
}

RulePair PresentedMonoid::rules(std::size_t r) const {
  const Word lhs{x(r * h_)};
  return {{lhs, x_block(r * h_ + 1, h_)}, {lhs, y_block(sigma_(r * k_), sigma_(r * k_ + k_))}};
}

std::optional<std::size_t> PresentedMonoid::block_starting_at(std::size_t j, bool* incomplete) const {
  for (std::size_t r = 0;; ++r) {
    const auto lo = sigma_.try_at(r * k_);
    if (!lo || !sigma_.try_at(r * k_ + k_)) {
      if (incomplete) *incomplete = true;
      return std::nullopt;
    }
    if (*lo + 1 == j) return r;
    if (*lo + 1 > j) return std::nullopt;
  }
}

bool PresentedMonoid::is_block_start(std::size_t j) const { return block_starting_at(j, nullptr).has_value(); }

std::vector<RewriteStep> PresentedMonoid::neighbours(const Word& w, bool* incomplete) const {
  std::vector<RewriteStep> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Letter l = w[p];
    if (l.kind == Letter::Kind::X) {
      if (l.index % h_ == 0) {
        const std::size_t r = l.index / h_;
        out.push_back({r, RewriteStep::Which::XRule, true, p, splice(w, p, 1, x_block(l.index + 1, h_))});
        const auto lo = sigma_.try_at(r * k_);
        const auto hi = sigma_.try_at(r * k_ + k_);
        if (lo && hi) {
          out.push_back({r, RewriteStep::Which::YRule, true, p, splice(w, p, 1, y_block(*lo, *hi))});
        } else if (incomplete) {
          *incomplete = true;
        }
      } else if (l.index % h_ == 1) {
        const std::size_t r = l.index / h_;
        if (matches_at(w, p, x_block(r * h_ + 1, h_))) {
          out.push_back({r, RewriteStep::Which::XRule, false, p, splice(w, p, h_, {x(r * h_)})});
        }
      }
    } else if (const auto r = block_starting_at(l.index, incomplete)) {
      const Word block = y_block(sigma_(*r * k_), sigma_(*r * k_ + k_));
      if (matches_at(w, p, block)) {
        out.push_back({*r, RewriteStep::Which::YRule, false, p, splice(w, p, block.size(), {x(*r * h_)})});
      }
    }
  }
  return out;
}

std::optional<Word> PresentedMonoid::replay(const Word& start, const Trace& trace) const {
  Word cur = start;
  for (const auto& step : trace) {
    const auto options = neighbours(cur);
    const bool ok = std::any_of(options.begin(), options.end(), [&](const RewriteStep& s) {
      return s.rule_index == step.rule_index && s.which == step.which && s.expand == step.expand &&
             s.position == step.position && s.result == step.result;
    });
    if (!ok) return std::nullopt;
    cur = step.result;
  }
  return cur;
}

std::shared_ptr<const ClassExploration> PresentedMonoid::explore(const Word& w, std::size_t radius,
                                                                 std::size_t node_cap) const {
  const auto key = std::make_tuple(w, radius, node_cap);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->entries.find(key); it != cache_->entries.end()) return it->second;
  }
  auto ex = std::make_shared<ClassExploration>();
  ex->words.push_back(w);
  ex->parent.push_back(0);
  ex->via.emplace_back();
  ex->index.emplace(w, 0);
  bool complete = true;
  std::size_t layer_begin = 0;
  for (std::size_t depth = 0; layer_begin < ex->words.size() && complete; ++depth) {
    const std::size_t layer_end = ex->words.size();
    for (std::size_t i = layer_begin; i < layer_end && complete; ++i) {
      bool incomplete = false;
      auto steps = neighbours(ex->words[i], &incomplete);
      if (incomplete) complete = false;
      for (auto& s : steps) {
        if (ex->index.count(s.result)) continue;
        if (depth >= radius || ex->words.size() >= node_cap) {
          complete = false;
          break;
        }
        ex->index.emplace(s.result, ex->words.size());
        ex->words.push_back(s.result);
        ex->parent.push_back(i);
        ex->via.push_back(std::move(s));
      }
    }
    layer_begin = layer_end;
  }
  ex->exhausted = complete;
  std::lock_guard lock(cache_->mutex);
  return cache_->entries.emplace(key, std::move(ex)).first->second;
}

std::int64_t PresentedMonoid::invariant_a(const Word& w) const {
  const std::size_t free_y = sigma_(0);
  std::int64_t total = 0;
  for (const auto& l : w) {
    if (l.kind == Letter::Kind::X) {
      total += l.index % h_ == 0 ? 1 : 0;
    } else {
      total += (l.index <= free_y || is_block_start(l.index)) ? 1 : 0;
    }
  }
  return total;
}

std::int64_t PresentedMonoid::invariant_b(const Word& w) const {
  const auto step = static_cast<std::int64_t>(h_ - 1);
  std::int64_t total = 0;
  for (const auto& l : w) {
    if (l.kind == Letter::Kind::X) {
      total += l.index % h_ == 0 ? -static_cast<std::int64_t>(l.index / h_) * step : 1;
    } else if (const auto r = block_starting_at(l.index, nullptr)) {
      total -= static_cast<std::int64_t>(*r) * step;
    }
  }
  return total;
}

bool PresentedMonoid::invariants_forbid_division(const Word& u, const Word& w) const {
  // A is non-negative on letters, so u | w forces A(u) <= A(w). With equality
  // the cofactors only use A-null letters, on which B is non-negative.
  const auto au = invariant_a(u);
  const auto aw = invariant_a(w);
  if (au != aw) return au > aw;
  return invariant_b(u) > invariant_b(w);
}

Certified<Trace> PresentedMonoid::equivalent_bounded(const Word& u, const Word& w, std::size_t radius,
                                                     std::size_t node_cap) const {
  if (u == w) return {Tri::True, {}};
  const auto ex = explore(u, radius, node_cap);
  if (auto it = ex->index.find(w); it != ex->index.end()) return {Tri::True, ex->trace_to(it->second)};
  if (invariant_a(u) != invariant_a(w) || invariant_b(u) != invariant_b(w)) return {Tri::False, {}};
  if (ex->exhausted || explore(w, radius, node_cap)->exhausted) return {Tri::False, {}};
  return {};
}

Certified<FactorWitness> PresentedMonoid::divides_bounded(const Word& u, const Word& w,
                                                          std::size_t radius,
                                                          std::size_t node_cap) const {
  if (u.empty()) return {Tri::True, {w, 0, {}}};
  const auto ex = explore(w, radius, node_cap);
  for (std::size_t i = 0; i < ex->words.size(); ++i) {
    const Word& v = ex->words[i];
    const auto it = std::search(v.begin(), v.end(), u.begin(), u.end());
    if (it != v.end()) {
      return {Tri::True, {v, static_cast<std::size_t>(it - v.begin()), ex->trace_to(i)}};
    }
  }
  if (invariants_forbid_division(u, w) || ex->exhausted) return {Tri::False, {}};
  return {};
}

QuarkResult<Word> PresentedMonoid::is_quark_bounded(const Word& w, std::size_t radius) const {
  SearchBudget b;
  b.relation_budget = radius;
  return is_quark(make_premon(*this), w, b);
}

ChainCertificate PresentedMonoid::descending_chain_x(std::size_t r, std::size_t len,
                                                     std::size_t radius) const {
  ChainCertificate c;
  for (std::size_t i = 0; i < len; ++i) c.words.push_back({x((r + i) * h_)});
  for (std::size_t i = 1; i < len; ++i) {
    ChainStep s;
    s.from = c.words[i - 1];
    s.to = c.words[i];
    auto fwd = divides_bounded(s.to, s.from, radius);
    s.forward = fwd.verdict;
    s.witness = std::move(fwd.evidence);
    s.reverse = divides_bounded(s.from, s.to, radius).verdict;
    c.steps.push_back(std::move(s));
  }
  return c;
}

LocalArtinianWitness PresentedMonoid::k_local_artinian_witness(std::size_t r, std::size_t radius) const {
  LocalArtinianWitness w;
  const auto rule = rules(r).y_rule;
  w.target = rule.lhs;
  for (const auto& l : rule.rhs) w.factors.push_back({l});
  auto eq = equivalent_bounded(w.target, rule.rhs, radius);
  w.equivalent = eq.verdict;
  w.trace = std::move(eq.evidence);
  for (const auto& f : w.factors) w.factor_quark.push_back(is_quark_bounded(f, radius).verdict);
  return w;
}

nlohmann::json PresentedMonoid::to_json() const {
  return {{"h", h_}, {"k", k_}, {"sigma", sigma_.to_json()}};
}

PresentedMonoid PresentedMonoid::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("h") || !j.contains("k")) {
    throw ParseError("presentation must be an object with \"h\" and \"k\"");
  }
  if (!j.at("h").is_number_unsigned() || !j.at("k").is_number_unsigned()) {
    throw ParseError("h and k must be non-negative integers");
  }
  return PresentedMonoid(j.at("h").get<std::size_t>(), j.at("k").get<std::size_t>(),
                         Sigma::from_json(j.value("sigma", nlohmann::json())));
}

nlohmann::json to_json(const Trace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : trace) {
    out.push_back({{"rule", s.rule_index},
                   {"relation", s.which == RewriteStep::Which::XRule ? "x" : "y"},
                   {"direction", s.expand ? "expand" : "contract"},
                   {"position", s.position},
                   {"result", to_string(s.result)}});
  }
  return out;
}

// ---------------------------------------------------------------------------

Premon<Word> make_premon(const PresentedMonoid& monoid) {
  auto m = std::make_shared<const PresentedMonoid>(monoid);
  Premon<Word> p;
  p.monoid.identity = Word{};
  p.monoid.multiply = [](const Word& u, const Word& w) {
    Word out = u;
    out.insert(out.end(), w.begin(), w.end());
    return out;
  };
  p.monoid.equal = [m](const Word& u, const Word& w, const SearchBudget& b) {
    return m->equivalent_bounded(u, w, b.relation_budget, b.node_cap).verdict;
  };
  p.monoid.for_each_split = [m](const Word& w, std::size_t k, const SearchBudget& b,
                                const SplitVisitor<Word>& visit) {
    const auto ex = m->explore(w, b.relation_budget, b.node_cap);
    std::size_t visited = 0;
    for (const auto& v : ex->words) {
      if (v.size() < k) continue;
      // Cut points 0 < c_1 < ... < c_{k-1} < |v|.
      std::vector<std::size_t> cut(k - 1);
      for (std::size_t i = 0; i + 1 < k; ++i) cut[i] = i + 1;
      for (;;) {
        if (++visited > b.node_cap) return false;
        std::vector<Word> parts;
        std::size_t from = 0;
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t to = i + 1 < k ? cut[i] : v.size();
          parts.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
          from = to;
        }
        if (visit(parts)) return true;
        std::size_t i = k - 1;
        while (i > 0 && cut[i - 1] == v.size() - (k - i)) --i;
        if (i == 0) break;
        ++cut[i - 1];
        for (std::size_t j = i; j + 1 < k; ++j) cut[j] = cut[j - 1] + 1;
      }
    }
    return ex->exhausted;
  };
  p.preorder.tag = "divisibility";
  p.preorder.leq = [m](const Word& u, const Word& w, const SearchBudget& b) {
    return m->divides_bounded(u, w, b.relation_budget, b.node_cap).verdict;
  };
  p.preorder.below = [m](const Word& w, const SearchBudget& b) {
    // Every divisor of w is a factor of some word of its class.
    const auto ex = m->explore(w, b.relation_budget, b.node_cap);
    std::set<Word> factors;
    bool capped = false;
    for (const auto& v : ex->words) {
      for (std::size_t i = 0; i <= v.size() && !capped; ++i) {
        for (std::size_t j = i; j <= v.size(); ++j) {
          factors.emplace(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(j));
        }
        if (factors.size() > b.node_cap) capped = true;
      }
    }
    Enumeration<Word> out;
    out.items.assign(factors.begin(), factors.end());
    std::stable_sort(out.items.begin(), out.items.end(), shortlex_less);
    out.exhaustive = ex->exhausted && !capped;
    out.truncated = !out.exhaustive;
    return out;
  };
  p.render = [](const Word& w) { return to_string(w); };
  return p;
}

}  // namespace premon::presented
