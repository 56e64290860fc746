#include "premon/testkit.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "premon/errors.hpp"
#include "premon/poly_domain.hpp"
#include "premon/puiseux.hpp"
#include "premon/records.hpp"

namespace premon::testkit {

using premon::to_string;

Premon<Element> PremonInstance::premon() const {
  return finite::matrix_premon(monoid, preorder,
                               provenance.construction == "divisibility" ? "divisibility" : "materialized-matrix");
}

nlohmann::json to_json(const Provenance& p) {
  nlohmann::json j{{"construction", p.construction}, {"order", p.order}, {"monoid_index", p.monoid_index}};
  if (p.seed) {
    j["seed"] = *p.seed;
    j["density"] = p.density;
  }
  return j;
}

nlohmann::json to_json(const PremonInstance& inst) {
  std::vector<std::vector<int>> rows(inst.preorder.size(), std::vector<int>(inst.preorder.size(), 0));
  for (Element x = 0; x < inst.preorder.size(); ++x)
    for (Element y = 0; y < inst.preorder.size(); ++y) rows[x][y] = inst.preorder(x, y) ? 1 : 0;
  return {{"monoid", finite::to_json(inst.monoid)}, {"preorder", rows}, {"provenance", to_json(inst.provenance)}};
}

PremonInstance instance_from_json(const nlohmann::json& j) {
  try {
    auto m = finite::monoid_from_json(j.at("monoid"));
    const auto rows = j.at("preorder").get<std::vector<std::vector<int>>>();
    finite::Relation rel(m.size());
    if (rows.size() != m.size()) throw ParseError("preorder matrix size mismatch");
    for (Element x = 0; x < rows.size(); ++x) {
      if (rows[x].size() != m.size()) throw ParseError("preorder matrix size mismatch");
      for (Element y = 0; y < rows[x].size(); ++y) rel.set(x, y, rows[x][y] != 0);
    }
    Provenance p;
    const auto& pj = j.at("provenance");
    p.construction = pj.at("construction").get<std::string>();
    p.order = pj.at("order").get<std::size_t>();
    p.monoid_index = pj.at("monoid_index").get<std::size_t>();
    if (pj.contains("seed")) {
      p.seed = pj.at("seed").get<std::uint64_t>();
      p.density = pj.at("density").get<double>();
    }
    return {std::move(m), std::move(rel), std::move(p)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad premon instance: ") + e.what());
  }
}

finite::Relation random_preorder(std::size_t n, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  finite::Relation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (x != y && edge(rng)) r.set(x, y);
  return r.closure();
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t monoid_index, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(monoid_index), static_cast<std::uint32_t>(i)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<PremonInstance> gen_finite_premons(std::size_t n, const GenOptions& opts) {
  if (opts.density < 0.0 || opts.density > 1.0) throw ValidationError("density must lie in [0, 1]");
  const auto monoids = finite::enumerate_monoids(n);
  std::vector<PremonInstance> out;
  for (std::size_t mi = 0; mi < monoids.size(); ++mi) {
    const auto& m = monoids[mi];
    switch (opts.mode) {
      case PreorderMode::Divisibility:
        out.push_back({m, finite::divisibility(m), {"divisibility", n, mi, std::nullopt, 0.0}});
        break;
      case PreorderMode::Discrete: {
        finite::Relation r(n);
        for (Element x = 0; x < n; ++x) r.set(x, x);
        out.push_back({m, r, {"discrete", n, mi, std::nullopt, 0.0}});
        break;
      }
      case PreorderMode::Random:
        for (std::size_t i = 0; i < opts.count; ++i) {
          const auto s = instance_seed(opts.seed, mi, i);
          out.push_back({m, random_preorder(n, s, opts.density), {"random", n, mi, s, opts.density}});
        }
        break;
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [v](const ClaimResult& c) { return c.verdict == v; }));
}

void VerificationReport::add(std::string claim, bool pass, std::string detail, nlohmann::json witness) {
  claims.push_back({std::move(claim), pass ? Verdict::Pass : Verdict::Fail, std::move(detail), std::move(witness)});
}

void VerificationReport::skip(std::string claim, std::string detail) {
  claims.push_back({std::move(claim), Verdict::Skipped, std::move(detail), nullptr});
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json j{{"claim", c.claim}, {"verdict", to_string(c.verdict)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.is_null()) j["witness"] = c.witness;
    cs.push_back(std::move(j));
  }
  nlohmann::json j{{"suite", suite},
                   {"provenance", provenance},
                   {"claims", cs},
                   {"counts",
                    {{"pass", count(Verdict::Pass)}, {"fail", count(Verdict::Fail)}, {"skipped", count(Verdict::Skipped)}}}};
  if (!conclusion.empty()) j["conclusion"] = conclusion;
  return j;
}

namespace {

VerificationReport start(std::string suite, const PremonInstance& inst) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.provenance = to_json(inst);
  return r;
}

std::vector<Element> non_units(const Premon<Element>& p, const SearchBudget& b) {
  std::vector<Element> out;
  for (Element x : *p.monoid.carrier)
    if (!is_preorder_unit(p, x, b)) out.push_back(x);
  return out;
}

}  // namespace

VerificationReport verify_lemma(const PremonInstance& inst, const std::vector<Degree>& degrees,
                                const SearchBudget& b) {
  auto report = start("lemma", inst);
  const auto p = inst.premon();
  const auto xs = non_units(p, b);
  for (const auto& s : degrees) {
    bool ok = true;
    nlohmann::json witness;
    std::string detail = std::to_string(xs.size()) + " non-units factored";
    for (Element x : xs) {
      try {
        const auto f = factor_into_irreducibles(p, x, s, b);
        if (check_factorization(p, f, b) != Tri::True) {
          ok = false;
          witness = to_json(make_record(p, f));
          detail = "factorization of " + std::to_string(x) + " does not check";
          break;
        }
      } catch (const Error& e) {
        ok = false;
        witness = {{"element", x}};
        detail = e.what();
        break;
      }
    }
    report.add("factor into irreducibles s=" + to_string(s), ok, detail, witness);
  }
  return report;
}

VerificationReport verify_corollary_factorable(const PremonInstance& inst, const SearchBudget& b) {
  auto report = start("factorable", inst);
  const auto p = inst.premon();
  bool hypothesis = true;
  nlohmann::json witness;
  for (Element x : non_units(p, b)) {
    if (is_irreducible(p, x, Degree::infinity(), b).verdict != Tri::True) continue;
    if (!height(p, x, b).is_exact()) {
      hypothesis = false;
      witness = {{"element", x}};
    }
  }
  report.add("irreducibles have finite height", hypothesis, "automatic on a finite carrier", witness);
  const Tri factorable = is_factorable(p, b);
  const Tri local = is_k_locally_artinian(p, 0, false, b);
  report.add("factorable iff locally artinian", is_definite(factorable) && factorable == local,
             "factorable=" + std::string(to_string(factorable)) + " locally-artinian=" + std::string(to_string(local)));
  report.add("both sides hold on a finite carrier", factorable == Tri::True && local == Tri::True);
  return report;
}

VerificationReport verify_corollary_factorable_puiseux(const Integer& a, const Integer& b,
                                                       const SearchBudget& budget) {
  VerificationReport report;
  report.suite = "factorable";
  const puiseux::PuiseuxMonoid h(a, b);
  report.provenance = {{"family", "puiseux"}, {"monoid", puiseux::to_json(h)}, {"budget", to_json(budget)}};
  if (!h.atomic_regime()) {
    report.skip("atoms generate", "a = 1: the generators are not atoms");
    return report;
  }
  const std::size_t cap = budget.relation_budget;
  bool hypothesis = true;
  bool artinian = true;
  for (std::size_t i = 0; i <= cap; ++i) {
    const Rational g = h.generator(i);
    if (h.finite_max_length(g) != std::optional<std::size_t>(1)) hypothesis = false;
    if (h.satisfies_accp_element(g, std::max(cap, i)).verdict != Tri::True) artinian = false;
  }
  report.add("irreducibles have finite height", hypothesis, "generators r^i, i <= " + std::to_string(cap));
  report.add("atoms are artinian", artinian);
  // Sample: sums of c_i r^i with c_i <= 2 and i <= 2; each canonical
  // representation is a factorization into atoms.
  bool generate = true;
  nlohmann::json witness;
  for (int c0 = 0; c0 <= 2; ++c0)
    for (int c1 = 0; c1 <= 2; ++c1)
      for (int c2 = 0; c2 <= 2; ++c2) {
        const Rational x = Rational(c0) + Rational(c1) * h.generator(1) + Rational(c2) * h.generator(2);
        if (x == 0) continue;
        const auto rep = h.canonical(x);
        if (!rep || rep->value(h) != x || rep->length() == 0) {
          generate = false;
          witness = to_string(x);
        }
      }
  report.add("atoms generate the sample", generate, "factorable and locally artinian evidence", witness);
  report.add("factorable iff locally artinian", generate && artinian && hypothesis,
             "both sides positive at exponent cap " + std::to_string(cap));
  return report;
}

VerificationReport verify_corollary_acyclic_accp_puiseux(const Integer& a, const Integer& b,
                                                         const SearchBudget& budget) {
  VerificationReport report;
  report.suite = "acyclic-accp";
  const puiseux::PuiseuxMonoid h(a, b);
  report.provenance = {{"family", "puiseux"}, {"monoid", puiseux::to_json(h)}, {"budget", to_json(budget)}};
  const std::size_t cap = budget.relation_budget;

  std::vector<Rational> sample;
  for (std::size_t i = 0; i <= 3; ++i) {
    sample.push_back(h.generator(i));
    sample.push_back(Rational(h.a()) * h.generator(i));
  }
  sample.push_back(Rational(1) + h.generator(1));
  bool cancellative = true;
  for (const auto& x : sample)
    for (const auto& y : sample)
      for (const auto& z : sample)
        if (h.divides(x + z, y + z) != h.divides(x, y)) cancellative = false;
  report.add("acyclic", cancellative, "cancellative commutative, checked on sampled triples");

  const auto p = puiseux::make_premon(h);
  SearchBudget qb = budget;
  bool quarks = true;
  bool accp = true;
  bool atoms = true;
  nlohmann::json accp_witness;
  for (std::size_t i = 0; i <= cap; ++i) {
    const Rational g = h.generator(i);
    if (is_quark(p, g, qb).verdict != Tri::True) quarks = false;
    const auto v = h.satisfies_accp_element(g, std::max(cap, i));
    if (v.verdict != Tri::True) {
      accp = false;
      if (accp_witness.is_null() && v.witness_index) accp_witness = {{"generator", to_string(g)}, {"i", *v.witness_index}};
    }
    if (!h.is_atom(g)) atoms = false;
  }
  report.add("generators are quarks", quarks == atoms, quarks ? "r^i quark-certified" : "r^i not quarks");
  bool lengths = true;
  for (const auto& x : sample)
    if (h.length_set_bounded(x, cap).empty()) lengths = false;
  const bool atomic = atoms && lengths;
  report.add("atomic iff generators satisfy ACCP", atomic == accp,
             std::string("atomic=") + (atomic ? "yes" : "no") + " generators-accp=" + (accp ? "yes" : "no"),
             accp_witness);
  report.conclusion = atomic ? "atomic, generated by ACCP elements" : "not atomic, generators fail ACCP";
  return report;
}

VerificationReport verify_corollary_acyclic_accp_poly(const SearchBudget& budget) {
  VerificationReport report;
  report.suite = "acyclic-accp";
  report.provenance = {{"family", "poly-domain"}, {"budget", to_json(budget)}};
  using poly::RatPoly;
  report.add("constants 2 and 3 are atoms",
             poly::is_atom(RatPoly::constant(2)) == Tri::True && poly::is_atom(RatPoly::constant(3)) == Tri::True);
  const auto shape = poly::qX_is_never_atom(Rational(1));
  report.add("every factorization of X has one linear factor cX", shape.x_shape_checked,
             "so a generating set must contain some qX");
  for (const Rational& q : {Rational(1), Rational(1, 2), Rational(3)}) {
    const auto cert = poly::qX_is_never_atom(q);
    report.add("qX is not an atom, q=" + to_string(q),
               cert.valid() && poly::is_atom(cert.target) == Tri::False,
               to_string(cert.target) + " = 2 * " + to_string(cert.factors[1]));
    const auto chain = poly::descending_chain_qX(q, budget.chain_depth);
    report.add("qX fails ACCP, q=" + to_string(q), chain.strictly_decreasing(),
               "strictly decreasing chain of length " + std::to_string(chain.elements.size()));
  }
  report.conclusion = "hypothesis fails, monoid non-atomic";
  return report;
}

VerificationReport verify_heights(const PremonInstance& inst, const SearchBudget& b) {
  auto report = start("heights", inst);
  const auto p = inst.premon();
  bool zero = true;
  bool one = true;
  nlohmann::json witness;
  for (Element x : *p.monoid.carrier) {
    const Height h = height(p, x, b);
    const bool unit = is_preorder_unit(p, x, b);
    if ((h == Height::exact(0)) != unit) {
      zero = false;
      witness = {{"element", x}, {"height", h.to_string()}};
    }
    if (unit) continue;
    const bool quark = is_quark(p, x, b).verdict == Tri::True;
    if ((h == Height::exact(1)) != quark) {
      one = false;
      witness = {{"element", x}, {"height", h.to_string()}};
    }
  }
  report.add("height 0 iff unit", zero, {}, zero ? nlohmann::json() : witness);
  report.add("height 1 iff quark", one, {}, one ? nlohmann::json() : witness);
  return report;
}

VerificationReport verify_local_ladder(const PremonInstance& inst, const SearchBudget& b) {
  auto report = start("ladder", inst);
  const auto p = inst.premon();
  for (bool strong : {false, true}) {
    bool ok = true;
    bool seen = false;
    for (std::size_t k = 1; k <= b.factor_length_cap; ++k) {
      const Tri t = is_k_locally_artinian(p, k, strong, b);
      if (seen && t != Tri::True) ok = false;
      seen = seen || t == Tri::True;
    }
    report.add(std::string(strong ? "strongly " : "") + "k-local artinianity is monotone in k", ok);
  }
  return report;
}

std::optional<NonQuarkWitness> find_irreducible_non_quark(std::size_t max_order, std::size_t seeds,
                                                          std::uint64_t seed, const SearchBudget& b) {
  auto scan = [&](const std::vector<PremonInstance>& insts) -> std::optional<NonQuarkWitness> {
    for (const auto& inst : insts) {
      const auto p = inst.premon();
      for (Element x : non_units(p, b)) {
        const auto q = is_quark(p, x, b);
        if (q.verdict != Tri::False) continue;
        if (is_irreducible(p, x, Degree::finite(2), b).verdict == Tri::True) {
          return NonQuarkWitness{inst, x, *q.witness};
        }
      }
    }
    return std::nullopt;
  };
  for (std::size_t n = 1; n <= max_order; ++n) {
    if (auto w = scan(gen_finite_premons(n, {PreorderMode::Divisibility}))) return w;
  }
  for (std::size_t n = 1; n <= max_order; ++n) {
    if (auto w = scan(gen_finite_premons(n, {PreorderMode::Random, seed, 0.5, seeds}))) return w;
  }
  return std::nullopt;
}

}  // namespace premon::testkit
