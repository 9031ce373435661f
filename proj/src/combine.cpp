// Copyright 2026 The ordbelief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ordbelief/combine.hpp"

#include <map>
#include <utility>
#include <vector>

#include "ordbelief/error.hpp"

namespace ordbelief {

namespace {

// Dense mass accumulator over the canonical enumeration.
class Accumulator {
 public:
  explicit Accumulator(const OrderedFrame& frame)
      : frame_(frame), masses_(ops_size(frame.size()), 0.0) {}

  void add(OrderedElement x, double v) { masses_[index_of(x)] += v; }
  double& at(OrderedElement x) { return masses_[index_of(x)]; }

  MassFunction finish() const {
    std::vector<FocalMass> entries;
    for (std::size_t k = 0; k < masses_.size(); ++k)
      if (masses_[k] > 0.0) entries.push_back({element_at(k, frame_.size()), masses_[k]});
    return MassFunction::make(frame_, entries);
  }

 private:
  const OrderedFrame& frame_;
  std::vector<double> masses_;
};

void require_sources(std::span<const MassFunction> masses, std::size_t minimum,
                     std::string_view rule) {
  if (masses.size() < minimum)
    throw Error(ErrorCode::TooFewInputs, std::string(rule) + " needs at least " +
                                             std::to_string(minimum) + " mass functions");
  for (const auto& m : masses.subspan(1)) require_same_frame(masses.front(), m);
}

double conflict_free_share(OrderedElement y1, OrderedElement y2) {
  const auto u = cardinality(ordered_union(y1, y2));
  if (u == 0) return 1.0;
  return static_cast<double>(cardinality(intersect(y1, y2))) / static_cast<double>(u);
}

}  // namespace

DeltaPolicy DeltaPolicy::jaccard() {
  return DeltaPolicy([](OrderedElement a, OrderedElement b, std::size_t) {
    return conflict_free_share(a, b);
  }, "jaccard");
}

DeltaPolicy DeltaPolicy::fuzzy_jaccard(const FuzzyParams& params) {
  if (params.alpha() == 0.0) return jaccard();
  return DeltaPolicy([params](OrderedElement a, OrderedElement b, std::size_t n) {
    if (a.is_empty() || b.is_empty()) return conflict_free_share(a, b);
    return fuzzy_intersection_cardinality(a, b, params, n) /
           static_cast<double>(cardinality(ordered_union(a, b)));
  }, "fuzzy-jaccard");
}

DeltaPolicy DeltaPolicy::constant(double delta2) {
  return DeltaPolicy([delta2](OrderedElement, OrderedElement, std::size_t) { return delta2; },
                     "constant");
}

DeltaPolicy DeltaPolicy::custom(Fn fn, std::string name) {
  return DeltaPolicy(std::move(fn), std::move(name));
}

MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  Accumulator acc(m1.frame());
  for (const auto& [y1, v1] : m1.focals())
    for (const auto& [y2, v2] : m2.focals()) acc.add(intersect(y1, y2), v1 * v2);
  return acc.finish();
}

MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
  const auto conj = conjunctive(m1, m2);
  const double conflict = conj.empty_mass();
  if (1.0 - conflict <= kNormTolerance)
    throw Error(ErrorCode::TotalConflict, "Dempster's rule is undefined under total conflict");
  std::vector<FocalMass> entries;
  for (const auto& [x, v] : conj.focals())
    if (!x.is_empty()) entries.push_back({x, v / (1.0 - conflict)});
  return MassFunction::make(conj.frame(), entries);
}

MassFunction yager(const MassFunction& m1, const MassFunction& m2) {
  const auto conj = conjunctive(m1, m2);
  std::vector<FocalMass> entries;
  for (const auto& [x, v] : conj.focals())
    entries.push_back({x.is_empty() ? OrderedElement::whole(conj.frame()) : x, v});
  return MassFunction::make(conj.frame(), entries);
}

MassFunction ordered_disjunctive(std::span<const MassFunction> masses) {
  require_sources(masses, 2, "ordered disjunctive rule");
  const auto& frame = masses.front().frame();
  // Partial ordered unions of the first k sources; the final distribution sums
  // every s-tuple's product onto its ordered union.
  std::vector<double> state = masses.front().to_vector();
  for (const auto& m : masses.subspan(1)) {
    std::vector<double> next(state.size(), 0.0);
    for (std::size_t k = 0; k < state.size(); ++k) {
      if (state[k] == 0.0) continue;
      const auto u = element_at(k, frame.size());
      for (const auto& [y, v] : m.focals()) next[index_of(ordered_union(u, y))] += state[k] * v;
    }
    state = std::move(next);
  }
  Accumulator acc(frame);
  for (std::size_t k = 0; k < state.size(); ++k)
    if (state[k] > 0.0) acc.add(element_at(k, frame.size()), state[k]);
  return acc.finish();
}

MassFunction ordered_dubois_prade(std::span<const MassFunction> masses) {
  require_sources(masses, 2, "ordered Dubois-Prade rule");
  const auto& frame = masses.front().frame();
  // Key: (index of the running intersection, index of the running union).
  std::map<std::pair<std::size_t, std::size_t>, double> state;
  for (const auto& [y, v] : masses.front().focals()) state[{index_of(y), index_of(y)}] += v;
  for (const auto& m : masses.subspan(1)) {
    std::map<std::pair<std::size_t, std::size_t>, double> next;
    for (const auto& [key, w] : state) {
      const auto inter = element_at(key.first, frame.size());
      const auto uni = element_at(key.second, frame.size());
      for (const auto& [y, v] : m.focals())
        next[{index_of(intersect(inter, y)), index_of(ordered_union(uni, y))}] += w * v;
    }
    state = std::move(next);
  }
  Accumulator acc(frame);
  for (const auto& [key, w] : state)
    acc.add(element_at(key.first != 0 ? key.first : key.second, frame.size()), w);
  return acc.finish();
}

MassFunction ordered_dubois_prade_pairwise(std::span<const MassFunction> masses) {
  require_sources(masses, 2, "ordered Dubois-Prade rule");
  MassFunction acc = masses.front();
  for (const auto& m : masses.subspan(1)) {
    const MassFunction pair[] = {acc, m};
    acc = ordered_dubois_prade(pair);
  }
  return acc;
}

MassFunction average(std::span<const MassFunction> masses) {
  require_sources(masses, 1, "average rule");
  Accumulator acc(masses.front().frame());
  const double w = 1.0 / static_cast<double>(masses.size());
  for (const auto& m : masses)
    for (const auto& [x, v] : m.focals()) acc.add(x, w * v);
  return acc.finish();
}

MassFunction mixed(const MassFunction& m1, const MassFunction& m2, const DeltaPolicy& delta) {
  require_same_frame(m1, m2);
  const std::size_t n = m1.frame_size();
  Accumulator acc(m1.frame());
  for (const auto& [y1, v1] : m1.focals()) {
    for (const auto& [y2, v2] : m2.focals()) {
      const double d2 = delta(y1, y2, n);
      if (!(d2 >= 0.0 && d2 <= 1.0))
        throw Error(ErrorCode::InvalidDelta, "delta policy '" + delta.name() + "' returned " +
                                                 std::to_string(d2) + " for (" + to_string(y1) +
                                                 ", " + to_string(y2) + ")");
      const double p = v1 * v2;
      acc.add(intersect(y1, y2), d2 * p);
      acc.add(ordered_union(y1, y2), (1.0 - d2) * p);
    }
  }
  return acc.finish();
}

std::string_view rule_name(Rule::Kind kind) noexcept {
  switch (kind) {
    case Rule::Kind::ConjunctiveUnnormalized: return "conj";
    case Rule::Kind::Dempster: return "dempster";
    case Rule::Kind::Yager: return "yager";
    case Rule::Kind::OrderedDisjunctive: return "odisj";
    case Rule::Kind::OrderedDuboisPrade: return "odp";
    case Rule::Kind::Average: return "avg";
    case Rule::Kind::Mixed: return "mixed";
  }
  return "conj";
}

std::optional<Rule::Kind> parse_rule_kind(std::string_view name) noexcept {
  for (auto kind : {Rule::Kind::ConjunctiveUnnormalized, Rule::Kind::Dempster, Rule::Kind::Yager,
                    Rule::Kind::OrderedDisjunctive, Rule::Kind::OrderedDuboisPrade,
                    Rule::Kind::Average, Rule::Kind::Mixed})
    if (rule_name(kind) == name) return kind;
  return std::nullopt;
}

namespace {

template <class Binary>
MassFunction fold(std::span<const MassFunction> masses, Binary op) {
  require_sources(masses, 2, "combination");
  MassFunction acc = masses.front();
  for (const auto& m : masses.subspan(1)) acc = op(acc, m);
  return acc;
}

}  // namespace

MassFunction combine(const Rule& rule, std::span<const MassFunction> masses) {
  switch (rule.kind) {
    case Rule::Kind::ConjunctiveUnnormalized: return fold(masses, conjunctive);
    case Rule::Kind::Dempster: return fold(masses, dempster);
    case Rule::Kind::Yager: return fold(masses, yager);
    case Rule::Kind::OrderedDisjunctive: return ordered_disjunctive(masses);
    case Rule::Kind::OrderedDuboisPrade: return ordered_dubois_prade(masses);
    case Rule::Kind::Average: return average(masses);
    case Rule::Kind::Mixed: {
      const auto policy = rule.delta.value_or(DeltaPolicy::jaccard());
      return fold(masses, [&](const MassFunction& a, const MassFunction& b) {
        return mixed(a, b, policy);
      });
    }
  }
  return fold(masses, conjunctive);
}

}  // namespace ordbelief
