#pragma once

// Serializable renderings of classification and factorization results.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "premon/premon.hpp"

namespace premon {

std::string to_string(const Degree& s);
/// "2", "3", ..., "inf".
Degree degree_from_string(std::string_view s);
/// "3" or ">= 5".
Height height_from_string(std::string_view s);
nlohmann::json to_json(const SearchBudget& b);

struct ClassificationRecord {
  std::string family;
  std::string element;
  bool is_unit = false;
  Tri is_quark = Tri::False;
  std::optional<std::string> quark_witness;
  std::vector<std::pair<std::string, Tri>> irreducible;
  std::string height;
  Tri artinian = Tri::Unknown;
  Tri strongly_artinian = Tri::Unknown;
  std::vector<std::string> chain;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

struct FactorizationRecord {
  std::string target;
  std::vector<std::string> factors;
  std::string degree;
  std::vector<std::pair<std::string, std::vector<std::string>>> splits;

  friend bool operator==(const FactorizationRecord&, const FactorizationRecord&) = default;
};

nlohmann::json to_json(const ClassificationRecord& r);
ClassificationRecord classification_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FactorizationRecord& r);
FactorizationRecord factorization_from_json(const nlohmann::json& j);

template <class E>
ClassificationRecord make_record(const Premon<E>& p, const Classification<E>& c, std::string family) {
  ClassificationRecord r;
  r.family = std::move(family);
  r.element = p.show(c.element);
  r.is_unit = c.is_unit;
  r.is_quark = c.is_quark;
  if (c.quark_witness) r.quark_witness = p.show(*c.quark_witness);
  for (const auto& [s, t] : c.irreducible) r.irreducible.emplace_back(to_string(s), t);
  r.height = c.height.to_string();
  r.artinian = c.artinian;
  r.strongly_artinian = c.strongly_artinian;
  for (const auto& y : c.chain) r.chain.push_back(p.show(y));
  return r;
}

template <class E>
FactorizationRecord make_record(const Premon<E>& p, const Factorization<E>& f) {
  FactorizationRecord r;
  r.target = p.show(f.target);
  for (const auto& y : f.factors) r.factors.push_back(p.show(y));
  r.degree = to_string(f.degree);
  for (const auto& step : f.splits) {
    std::vector<std::string> parts;
    for (const auto& y : step.parts) parts.push_back(p.show(y));
    r.splits.emplace_back(p.show(step.parent), std::move(parts));
  }
  return r;
}

}  // namespace premon
