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

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ordbelief/fuzzy.hpp"
#include "ordbelief/mass.hpp"

namespace ordbelief {

/// Conjunctive share δ₂(Y1, Y2) of the mixed rule; the remaining 1 − δ₂ goes
/// to the ordered union.
class DeltaPolicy {
 public:
  using Fn = std::function<double(OrderedElement, OrderedElement, std::size_t)>;

  /// |Y1∩Y2| / |Y1 ∪o Y2|.
  static DeltaPolicy jaccard();
  /// |Y1∩Y2|_o / |Y1 ∪o Y2|; identical to jaccard() when alpha = 0.
  static DeltaPolicy fuzzy_jaccard(const FuzzyParams& params);
  static DeltaPolicy constant(double delta2);
  static DeltaPolicy custom(Fn fn, std::string name);

  double operator()(OrderedElement y1, OrderedElement y2, std::size_t n) const {
    return fn_(y1, y2, n);
  }
  const std::string& name() const noexcept { return name_; }

 private:
  DeltaPolicy(Fn fn, std::string name) : fn_(std::move(fn)), name_(std::move(name)) {}

  Fn fn_;
  std::string name_;
};

/// Unnormalized conjunctive rule; conflict stays on the empty set.
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

/// Conjunctive rule renormalized by 1 − m(∅). Throws TotalConflict.
MassFunction dempster(const MassFunction& m1, const MassFunction& m2);

/// Conjunctive rule with the conflict moved onto the whole frame.
MassFunction yager(const MassFunction& m1, const MassFunction& m2);

/// m(X) = Σ over tuples whose ordered union is X of Π m_j(Y_j).
/// Requires at least two sources. Throws TooFewInputs or FrameMismatch.
MassFunction ordered_disjunctive(std::span<const MassFunction> masses);

/// Dubois-Prade on the ordered power set, applied to whole s-tuples: a
/// tuple's product goes to its s-way intersection, or to its s-way ordered
/// union when the intersection is empty. m(∅) = 0 unless every source has
/// mass on ∅.
MassFunction ordered_dubois_prade(std::span<const MassFunction> masses);

/// Repeated two-source Dubois-Prade. The rule is not associative, so for more
/// than two sources this generally differs from ordered_dubois_prade().
MassFunction ordered_dubois_prade_pairwise(std::span<const MassFunction> masses);

/// Arithmetic mean of the mass functions. Requires at least one source.
MassFunction average(std::span<const MassFunction> masses);

/// Two-source mixed rule: each focal product is split between Y1∩Y2 (share
/// δ₂) and Y1 ∪o Y2 (share 1 − δ₂). Throws InvalidDelta or FrameMismatch.
MassFunction mixed(const MassFunction& m1, const MassFunction& m2, const DeltaPolicy& delta);

/// A combination rule selectable by name.
struct Rule {
  enum class Kind {
    ConjunctiveUnnormalized,
    Dempster,
    Yager,
    OrderedDisjunctive,
    OrderedDuboisPrade,
    Average,
    Mixed,
  };

  Kind kind = Kind::ConjunctiveUnnormalized;
  std::optional<DeltaPolicy> delta;  // Mixed only

  static Rule mixed(DeltaPolicy policy) { return {Kind::Mixed, std::move(policy)}; }
};

/// CLI names: conj, dempster, yager, odisj, odp, avg, mixed.
std::string_view rule_name(Rule::Kind kind) noexcept;
std::optional<Rule::Kind> parse_rule_kind(std::string_view name) noexcept;

/// Applies `rule` to all sources. Two-source rules (conj, dempster, yager,
/// mixed) are folded left to right over more than two sources; odisj, odp and
/// avg use their s-source forms.
MassFunction combine(const Rule& rule, std::span<const MassFunction> masses);

}  // namespace ordbelief
