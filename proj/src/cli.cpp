#include "premon/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "premon/errors.hpp"
#include "premon/finite_monoid.hpp"
#include "premon/poly_domain.hpp"
#include "premon/presented.hpp"
#include "premon/puiseux.hpp"
#include "premon/records.hpp"
#include "premon/testkit.hpp"

namespace premon::cli {

BudgetConfig BudgetConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read budget config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad budget config: " + std::string(e.what()));
  }
  if (!j.is_object()) throw ParseError("budget config must be a JSON object");
  BudgetConfig c;
  const std::pair<const char*, std::size_t*> fields[] = {{"chain_depth", &c.chain_depth},
                                                         {"factor_cap", &c.factor_cap},
                                                         {"node_cap", &c.node_cap},
                                                         {"exponent_cap", &c.exponent_cap},
                                                         {"radius", &c.radius}};
  for (const auto& [key, dst] : fields) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_number_unsigned()) throw ParseError(std::string("budget '") + key + "' must be a positive integer");
    *dst = j.at(key).get<std::size_t>();
  }
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(std::begin(fields), std::end(fields), [&](const auto& f) { return key == f.first; });
    if (!known) throw ParseError("unknown budget key '" + key + "'");
  }
  return c;
}

SearchBudget BudgetConfig::for_family(const std::string& family) const {
  SearchBudget b{chain_depth, factor_cap, node_cap, family == "presented" ? radius : exponent_cap};
  b.validate();
  return b;
}

namespace {

struct Instance {
  std::string family;
  nlohmann::json spec;
};

Instance load_instance(const std::string& text) {
  nlohmann::json j;
  try {
    if (!text.empty() && text.front() == '{') {
      j = nlohmann::json::parse(text);
    } else {
      std::ifstream in(text);
      if (!in) throw ParseError("cannot read instance file " + text);
      j = nlohmann::json::parse(in);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad instance JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw ParseError("instance spec must be a JSON object");
  if (j.contains("table")) return {"finite", j};
  if (j.contains("a") && j.contains("b")) return {"puiseux", j};
  if (j.contains("h") && j.contains("k")) return {"presented", j};
  if (j.value("domain", "") == "poly") return {"poly", j};
  throw ParseError("cannot tell the instance family from its keys");
}

Premon<finite::Element> finite_premon(const nlohmann::json& spec) {
  const auto m = finite::monoid_from_json(spec);
  if (!spec.contains("preorder")) return finite::divisibility_premon(m);
  const auto& pre = spec.at("preorder");
  if (pre.is_string()) {
    const auto name = pre.get<std::string>();
    if (name == "divisibility") return finite::divisibility_premon(m);
    if (name == "discrete") return finite::discrete_premon(m);
    if (name == "flat") return finite::flat_premon(m);
    throw ParseError("unknown preorder '" + name + "'");
  }
  finite::Relation rel(m.size());
  try {
    const auto rows = pre.get<std::vector<std::vector<int>>>();
    if (rows.size() != m.size()) throw ValidationError("preorder matrix size mismatch");
    for (std::size_t x = 0; x < rows.size(); ++x) {
      if (rows[x].size() != m.size()) throw ValidationError("preorder matrix size mismatch");
      for (std::size_t y = 0; y < rows[x].size(); ++y) rel.set(x, y, rows[x][y] != 0);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad preorder matrix: " + std::string(e.what()));
  }
  return finite::matrix_premon(m, rel);
}

finite::Element parse_index(const std::string& s, std::size_t n) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("element must be an index, got '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("element must be an index, got '" + s + "'");
  if (v >= n) throw ValidationError("element index " + s + " out of range");
  return v;
}

bool any_unknown(const ClassificationRecord& r) {
  if (r.is_quark == Tri::Unknown || r.artinian == Tri::Unknown || r.strongly_artinian == Tri::Unknown) return true;
  return std::any_of(r.irreducible.begin(), r.irreducible.end(), [](const auto& p) { return p.second == Tri::Unknown; });
}

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

void print_record(const ClassificationRecord& r, std::ostream& out) {
  out << "element: " << r.element << " (" << r.family << ")\n";
  out << "unit: " << (r.is_unit ? "yes" : "no") << "\n";
  if (!r.is_unit) {
    out << "quark: " << to_string(r.is_quark);
    if (r.quark_witness) out << ", witness " << *r.quark_witness << " strictly below";
    out << "\n";
    std::vector<std::string> irr;
    for (const auto& [s, t] : r.irreducible) irr.push_back("s=" + s + " " + std::string(to_string(t)));
    out << "irreducible: " << join(irr) << "\n";
  }
  out << "height: " << r.height << "\n";
  out << "artinian: " << to_string(r.artinian) << "\n";
  out << "strongly artinian: " << to_string(r.strongly_artinian) << "\n";
  if (!r.chain.empty()) out << "descending chain: " << join(r.chain) << "\n";
}

struct Globals {
  std::string format = "text";
  bool strict = false;
  std::optional<std::size_t> chain_depth, factor_cap, node_cap, exponent_cap, radius;

  [[nodiscard]] bool json() const { return format == "json"; }

  [[nodiscard]] BudgetConfig config() const {
    BudgetConfig c;
    if (const char* path = std::getenv(kConfigEnv); path && *path) c = BudgetConfig::from_file(path);
    if (chain_depth) c.chain_depth = *chain_depth;
    if (factor_cap) c.factor_cap = *factor_cap;
    if (node_cap) c.node_cap = *node_cap;
    if (exponent_cap) c.exponent_cap = *exponent_cap;
    if (radius) c.radius = *radius;
    return c;
  }
};

template <class E>
int emit_classification(const Premon<E>& p, const E& x, const SearchBudget& b, const std::string& family,
                        const Globals& g, std::ostream& out) {
  const auto c = classify(p, x, b);
  const auto r = make_record(p, c, family);
  if (g.json()) {
    auto j = to_json(r);
    j["budget"] = to_json(b);
    out << j.dump() << "\n";
  } else {
    print_record(r, out);
  }
  return g.strict && any_unknown(r) ? kInconclusive : kPass;
}

int cmd_classify(const Globals& g, const std::string& instance, const std::string& element, std::ostream& out) {
  const auto inst = load_instance(instance);
  const auto b = g.config().for_family(inst.family);
  if (inst.family == "finite") {
    const auto p = finite_premon(inst.spec);
    return emit_classification<finite::Element>(p, parse_index(element, p.monoid.carrier->size()), b, inst.family, g, out);
  }
  if (inst.family == "puiseux") {
    const auto h = puiseux::monoid_from_json(inst.spec);
    const Rational x = parse_rational(element);
    if (!h.contains(x)) throw ValidationError(element + " is not an element of H");
    return emit_classification<Rational>(puiseux::make_premon(h), x, b, inst.family, g, out);
  }
  if (inst.family == "presented") {
    const auto m = presented::PresentedMonoid::from_json(inst.spec);
    return emit_classification<presented::Word>(presented::make_premon(m), presented::parse_word(element), b,
                                                inst.family, g, out);
  }
  const auto f = poly::parse_poly(element);
  if (f.is_zero() || !f.in_domain()) throw ValidationError(element + " is not a non-zero element of R");
  return emit_classification<poly::RatPoly>(poly::make_premon(), f, b, inst.family, g, out);
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::size_t n = 3;
  std::vector<std::string> degrees{"2", "3", "inf"};
  std::string mode = "divisibility";
  std::uint64_t seed = 1;
  double density = 0.5;
  std::size_t count = 10;
  std::string family = "finite";
  std::string a = "2";
  std::string b = "3";
};

std::vector<testkit::PremonInstance> instances_upto(const VerifyOptions& o) {
  testkit::GenOptions gen;
  if (o.mode == "divisibility") gen.mode = testkit::PreorderMode::Divisibility;
  else if (o.mode == "random") gen.mode = testkit::PreorderMode::Random;
  else if (o.mode == "discrete") gen.mode = testkit::PreorderMode::Discrete;
  else throw ParseError("unknown preorder mode '" + o.mode + "'");
  gen.seed = o.seed;
  gen.density = o.density;
  gen.count = o.count;
  if (o.n == 0 || o.n > 4) throw ValidationError("order must lie in 1..4");
  std::vector<testkit::PremonInstance> out;
  for (std::size_t k = 1; k <= o.n; ++k) {
    auto part = testkit::gen_finite_premons(k, gen);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Integer parse_integer(const std::string& s) {
  const Rational q = parse_rational(s);
  if (!is_integer(q)) throw ParseError("expected an integer, got '" + s + "'");
  return q.get_num();
}

int cmd_verify(const Globals& g, const VerifyOptions& o, std::ostream& out) {
  const auto cfg = g.config();
  std::vector<testkit::VerificationReport> reports;
  std::string suite = o.suite;
  if (suite == "cor4") suite = "factorable";
  if (suite == "cor5") suite = "acyclic-accp";

  if (suite == "lemma") {
    std::vector<Degree> degrees;
    for (const auto& s : o.degrees) degrees.push_back(degree_from_string(s));
    const auto b = cfg.for_family("finite");
    for (const auto& inst : instances_upto(o)) reports.push_back(testkit::verify_lemma(inst, degrees, b));
  } else if (suite == "factorable") {
    if (o.family == "puiseux") {
      reports.push_back(testkit::verify_corollary_factorable_puiseux(parse_integer(o.a), parse_integer(o.b),
                                                                     cfg.for_family("puiseux")));
    } else if (o.family == "finite") {
      const auto b = cfg.for_family("finite");
      for (const auto& inst : instances_upto(o)) reports.push_back(testkit::verify_corollary_factorable(inst, b));
    } else {
      throw ParseError("factorable suite supports families finite and puiseux");
    }
  } else if (suite == "acyclic-accp") {
    if (o.family == "puiseux") {
      reports.push_back(testkit::verify_corollary_acyclic_accp_puiseux(parse_integer(o.a), parse_integer(o.b),
                                                                       cfg.for_family("puiseux")));
    } else if (o.family == "poly") {
      reports.push_back(testkit::verify_corollary_acyclic_accp_poly(cfg.for_family("poly")));
    } else {
      throw ParseError("acyclic-accp suite supports families puiseux and poly");
    }
  } else if (suite == "heights") {
    const auto b = cfg.for_family("finite");
    for (const auto& inst : instances_upto(o)) reports.push_back(testkit::verify_heights(inst, b));
  } else if (suite == "ladder") {
    const auto b = cfg.for_family("finite");
    for (const auto& inst : instances_upto(o)) reports.push_back(testkit::verify_local_ladder(inst, b));
  } else if (suite == "non-quark") {
    testkit::VerificationReport r;
    r.suite = "non-quark";
    r.provenance = {{"max_order", o.n}, {"seeds", o.count}, {"seed", o.seed}};
    const auto w = testkit::find_irreducible_non_quark(o.n, o.count, o.seed, cfg.for_family("finite"));
    if (w) {
      r.add("irreducible non-quark found", true, "element " + std::to_string(w->element),
            {{"instance", testkit::to_json(w->instance)}, {"element", w->element}, {"below", w->below}});
    } else {
      r.skip("irreducible non-quark found", "none found within the search");
    }
    reports.push_back(std::move(r));
  } else {
    throw CLI::ValidationError("verify", "unknown suite '" + o.suite + "'");
  }

  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    failed += r.ok() ? 0 : 1;
    skipped += r.count(testkit::Verdict::Skipped) > 0 ? 1 : 0;
    if (g.json()) {
      out << r.to_json().dump() << "\n";
    } else if (!r.ok() || reports.size() <= 8) {
      for (const auto& c : r.claims) {
        out << testkit::to_string(c.verdict) << "  " << r.suite << ": " << c.claim;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
        if (c.verdict == testkit::Verdict::Fail) out << "  witness: " << c.witness.dump() << "\n";
      }
      if (!r.conclusion.empty()) out << "  conclusion: " << r.conclusion << "\n";
    }
  }
  if (!g.json()) {
    out << suite << ": " << reports.size() << " report(s), " << failed << " failed, " << skipped
        << " with skipped claims\n";
  }
  if (failed > 0) return kFailure;
  return g.strict && skipped > 0 ? kInconclusive : kPass;
}

// ---------------------------------------------------------------------------

struct ChainOptions {
  std::string instance;
  std::optional<std::string> element;
  std::optional<std::size_t> index;
  std::size_t length = 4;
};

struct ChainOut {
  std::string family;
  std::vector<std::string> chain;
  std::vector<std::array<std::string, 2>> steps;  // forward, reverse
  bool proved = false;
};

int cmd_chain(const Globals& g, const ChainOptions& o, std::ostream& out) {
  if (o.length == 0) throw ValidationError("chain length must be positive");
  const auto inst = load_instance(o.instance);
  const auto b = g.config().for_family(inst.family);
  ChainOut c;
  c.family = inst.family;
  bool forward_ok = true;
  if (inst.family == "puiseux") {
    const auto h = puiseux::monoid_from_json(inst.spec);
    std::vector<Rational> xs;
    if (o.element) {
      const Rational x = parse_rational(*o.element);
      auto chain = h.chain_from(x, o.length, b.relation_budget);
      if (!chain) throw ValidationError(*o.element + " is not of the form a r^i + h within the exponent cap");
      xs = std::move(*chain);
    } else {
      xs = h.decreasing_chain(o.length);
    }
    bool proved = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      c.chain.push_back(to_string(xs[i]));
      if (i == 0) continue;
      const Tri fwd = h.divides_bounded(xs[i], xs[i - 1], b.relation_budget);
      const Tri rev = h.divides_bounded(xs[i - 1], xs[i], b.relation_budget);
      c.steps.push_back({std::string(to_string(fwd)), std::string(to_string(rev))});
      forward_ok = forward_ok && fwd == Tri::True;
      proved = proved && rev == Tri::False;
    }
    c.proved = proved && forward_ok;
  } else if (inst.family == "poly") {
    const Rational q = o.element ? parse_rational(*o.element) : Rational(1);
    const auto chain = poly::descending_chain_qX(q, o.length);
    for (const auto& f : chain.elements) c.chain.push_back(poly::to_string(f));
    for (const auto& l : chain.links) {
      c.steps.push_back({l.forward ? "true" : "false", l.reverse ? "true" : "false"});
      forward_ok = forward_ok && l.forward;
    }
    c.proved = chain.strictly_decreasing();
  } else if (inst.family == "presented") {
    const auto m = presented::PresentedMonoid::from_json(inst.spec);
    const auto chain = m.descending_chain_x(o.index.value_or(0), o.length, b.relation_budget);
    for (const auto& w : chain.words) c.chain.push_back(presented::to_string(w));
    for (const auto& s : chain.steps) c.steps.push_back({std::string(to_string(s.forward)), std::string(to_string(s.reverse))});
    forward_ok = chain.forward_certified();
    c.proved = chain.strictness_proved();
  } else {
    throw ValidationError("finite premons admit no infinite descending chains");
  }

  if (g.json()) {
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      steps.push_back({{"from", c.chain[i]}, {"to", c.chain[i + 1]}, {"forward", c.steps[i][0]}, {"reverse", c.steps[i][1]}});
    }
    out << nlohmann::json{{"family", c.family},
                          {"chain", c.chain},
                          {"steps", steps},
                          {"strictness", c.proved ? "proved" : "not-refuted"}}
               .dump()
        << "\n";
  } else {
    out << join(c.chain) << "\n";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      out << "  " << c.chain[i + 1] << " | " << c.chain[i] << ": " << c.steps[i][0] << "; " << c.chain[i] << " | "
          << c.chain[i + 1] << ": " << c.steps[i][1] << "\n";
    }
    out << "strictness: " << (c.proved ? "proved" : "not refuted") << "\n";
  }
  if (!forward_ok) return kFailure;
  return g.strict && !c.proved ? kInconclusive : kPass;
}

int cmd_lengths(const Globals& g, const std::string& instance, const std::string& element,
                std::optional<std::size_t> cap, std::ostream& out) {
  const auto inst = load_instance(instance);
  if (inst.family != "puiseux") throw ValidationError("length sets are available for Puiseux instances");
  const auto h = puiseux::monoid_from_json(inst.spec);
  const std::size_t e = cap.value_or(g.config().exponent_cap);
  const Rational q = parse_rational(element);
  const auto rep = h.member_bounded(q, e);
  const auto lengths = h.length_set_bounded(q, e);
  std::optional<std::size_t> finite_max;
  if (h.contains(q)) finite_max = h.finite_max_length(q);
  if (g.json()) {
    nlohmann::json j{{"element", to_string(q)}, {"cap", e}, {"lengths", lengths}};
    j["representation"] = rep ? puiseux::to_json(*rep) : nlohmann::json();
    j["length_set_finite"] = h.contains(q) ? nlohmann::json(finite_max.has_value()) : nlohmann::json();
    out << j.dump() << "\n";
  } else {
    std::vector<std::string> ls;
    for (auto l : lengths) ls.push_back(std::to_string(l));
    out << "L(" << to_string(q) << ") at cap " << e << ": {" << join(ls) << "}\n";
    if (rep) {
      std::vector<std::string> terms;
      for (const auto& [i, c] : rep->terms()) terms.push_back(c.get_str() + "*r^" + std::to_string(i));
      out << "representation: " << (terms.empty() ? std::string("0") : join(terms, " + ")) << "\n";
    } else {
      out << "representation: none with exponents <= " << e << "\n";
    }
    if (h.contains(q)) {
      out << "full length set: " << (finite_max ? "finite, max " + std::to_string(*finite_max) : std::string("infinite"))
          << "\n";
    }
  }
  return kPass;
}

int cmd_enum(const Globals& g, std::size_t n, std::ostream& out) {
  const auto ms = finite::enumerate_monoids(n);
  if (g.json()) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& m : ms) list.push_back(finite::to_json(m));
    out << nlohmann::json{{"order", n}, {"count", ms.size()}, {"monoids", list}}.dump() << "\n";
  } else {
    out << "order " << n << ": " << ms.size() << " monoids up to isomorphism\n";
    for (const auto& m : ms) out << finite::to_json(m).at("table").dump() << "  identity " << m.identity() << "\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Premon classification and verification tool", "premon"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", g.strict, "Exit 3 when a verdict stays inconclusive");
  auto positive = CLI::PositiveNumber;
  app.add_option("--chain-depth", g.chain_depth, "Maximum chain length explored")->check(positive);
  app.add_option("--factor-cap", g.factor_cap, "Factor-length cap for degree inf")->check(positive);
  app.add_option("--node-cap", g.node_cap, "Node cap for every search")->check(positive);
  app.add_option("--exponent-cap", g.exponent_cap, "Puiseux exponent cap")->check(positive);
  app.add_option("--radius", g.radius, "Rewrite radius for presented monoids")->check(positive);

  std::string instance;
  std::string element;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one element of an instance");
  classify_cmd->add_option("--instance", instance, "Instance JSON file or inline object")->required();
  classify_cmd->add_option("--element", element, "Element (index, rational, word, or coefficient list)")->required();

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", vo.suite, "lemma | factorable (cor4) | acyclic-accp (cor5) | heights | ladder | non-quark")
      ->required();
  verify_cmd->add_option("--n", vo.n, "Largest monoid order (1..4)");
  verify_cmd->add_option("--s", vo.degrees, "Irreducibility degrees (integers >= 2 or inf)");
  verify_cmd->add_option("--mode", vo.mode, "Preorders: divisibility | random | discrete");
  verify_cmd->add_option("--seed", vo.seed, "Random seed");
  verify_cmd->add_option("--density", vo.density, "Edge density of random preorders")->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--count", vo.count, "Random preorders per monoid (seeds for non-quark)");
  verify_cmd->add_option("--family", vo.family, "finite | puiseux | poly");
  verify_cmd->add_option("--a", vo.a, "Puiseux numerator");
  verify_cmd->add_option("--b", vo.b, "Puiseux denominator");

  ChainOptions co;
  auto* chain_cmd = app.add_subcommand("chain", "Emit a certified descending chain");
  chain_cmd->add_option("--instance", co.instance, "Instance JSON file or inline object")->required();
  chain_cmd->add_option("--element", co.element, "Start element (Puiseux) or q (poly)");
  chain_cmd->add_option("--index", co.index, "Rule index r (presented)");
  chain_cmd->add_option("--length", co.length, "Chain length")->check(positive);

  std::optional<std::size_t> cap;
  auto* lengths_cmd = app.add_subcommand("lengths", "Puiseux length set at an exponent cap");
  lengths_cmd->add_option("--instance", instance, "Instance JSON file or inline object")->required();
  lengths_cmd->add_option("--element", element, "Rational element")->required();
  lengths_cmd->add_option("--cap", cap, "Exponent cap");

  std::size_t order = 3;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate monoids of a given order");
  enum_cmd->add_option("--n", order, "Order (1..4)")->check(CLI::Range(1, 4));

  std::vector<std::string> argv_store{"premon"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "premon: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(g, instance, element, out);
    if (*verify_cmd) return cmd_verify(g, vo, out);
    if (*chain_cmd) return cmd_chain(g, co, out);
    if (*lengths_cmd) return cmd_lengths(g, instance, element, cap, out);
    if (*enum_cmd) return cmd_enum(g, order, out);
  } catch (const CLI::Error& e) {
    err << "premon: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "premon: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "premon: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    err << "premon: inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
  return kUsage;
}

}  // namespace premon::cli
