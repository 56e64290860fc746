#include "premon/records.hpp"

#include <algorithm>
#include <charconv>

#include "premon/errors.hpp"

namespace premon {

Tri tri_from_string(std::string_view s) {
  if (s == "true") return Tri::True;
  if (s == "false") return Tri::False;
  if (s == "unknown") return Tri::Unknown;
  throw ParseError("bad truth value '" + std::string(s) + "'");
}

void SearchBudget::validate() const {
  if (chain_depth == 0 || factor_length_cap == 0 || node_cap == 0 || relation_budget == 0) {
    throw ValidationError("every search budget must be at least 1");
  }
}

Degree Degree::finite(std::size_t s) {
  if (s < 2) throw ValidationError("irreducibility degree must be at least 2");
  return {s, false};
}

std::string Height::to_string() const {
  return kind == Kind::Exact ? std::to_string(value) : ">= " + std::to_string(value);
}

namespace {

std::size_t parse_size(std::string_view s, const char* what) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

nlohmann::json tri_json(Tri t) { return std::string(to_string(t)); }

Tri tri_at(const nlohmann::json& j, const char* key) { return tri_from_string(j.at(key).get<std::string>()); }

}  // namespace

std::string to_string(const Degree& s) { return s.infinite ? "inf" : std::to_string(s.value); }

Degree degree_from_string(std::string_view s) {
  if (s == "inf" || s == "infinity") return Degree::infinity();
  return Degree::finite(parse_size(s, "degree"));
}

Height height_from_string(std::string_view s) {
  if (s.starts_with(">=")) {
    s.remove_prefix(2);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return Height::at_least(parse_size(s, "height"));
  }
  return Height::exact(parse_size(s, "height"));
}

nlohmann::json to_json(const SearchBudget& b) {
  return {{"chain_depth", b.chain_depth},
          {"factor_length_cap", b.factor_length_cap},
          {"node_cap", b.node_cap},
          {"relation_budget", b.relation_budget}};
}

nlohmann::json to_json(const ClassificationRecord& r) {
  nlohmann::json irr = nlohmann::json::object();
  for (const auto& [s, t] : r.irreducible) irr[s] = tri_json(t);
  nlohmann::json j{{"family", r.family},
                   {"element", r.element},
                   {"unit", r.is_unit},
                   {"quark", tri_json(r.is_quark)},
                   {"irreducible", irr},
                   {"height", r.height},
                   {"artinian", tri_json(r.artinian)},
                   {"strongly_artinian", tri_json(r.strongly_artinian)},
                   {"chain", r.chain}};
  j["quark_witness"] = r.quark_witness ? nlohmann::json(*r.quark_witness) : nlohmann::json();
  return j;
}

ClassificationRecord classification_from_json(const nlohmann::json& j) {
  try {
    ClassificationRecord r;
    r.family = j.at("family").get<std::string>();
    r.element = j.at("element").get<std::string>();
    r.is_unit = j.at("unit").get<bool>();
    r.is_quark = tri_at(j, "quark");
    if (!j.at("quark_witness").is_null()) r.quark_witness = j.at("quark_witness").get<std::string>();
    // Object keys come back sorted; restore the degree order.
    for (const auto& [s, t] : j.at("irreducible").items()) {
      r.irreducible.emplace_back(s, tri_from_string(t.get<std::string>()));
    }
    std::sort(r.irreducible.begin(), r.irreducible.end(), [](const auto& a, const auto& b) {
      const Degree da = degree_from_string(a.first);
      const Degree db = degree_from_string(b.first);
      if (da.infinite != db.infinite) return !da.infinite;
      return da.value < db.value;
    });
    r.height = j.at("height").get<std::string>();
    r.artinian = tri_at(j, "artinian");
    r.strongly_artinian = tri_at(j, "strongly_artinian");
    r.chain = j.at("chain").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad classification record: ") + e.what());
  }
}

nlohmann::json to_json(const FactorizationRecord& r) {
  nlohmann::json splits = nlohmann::json::array();
  for (const auto& [parent, parts] : r.splits) splits.push_back({{"parent", parent}, {"parts", parts}});
  return {{"target", r.target}, {"factors", r.factors}, {"degree", r.degree}, {"splits", splits}};
}

FactorizationRecord factorization_from_json(const nlohmann::json& j) {
  try {
    FactorizationRecord r;
    r.target = j.at("target").get<std::string>();
    r.factors = j.at("factors").get<std::vector<std::string>>();
    r.degree = j.at("degree").get<std::string>();
    for (const auto& s : j.at("splits")) {
      r.splits.emplace_back(s.at("parent").get<std::string>(), s.at("parts").get<std::vector<std::string>>());
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad factorization record: ") + e.what());
  }
}

}  // namespace premon
