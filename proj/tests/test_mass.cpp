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

#include <random>

#include "doctest.h"
#include "ordbelief/error.hpp"
#include "ordbelief/mass.hpp"
#include "support/error_code.hpp"
#include "support/bitset_oracle.hpp"
#include "support/random_mass.hpp"

using namespace ordbelief;
using ordbelief::testing::code_of;
using ordbelief::testing::random_mass;

namespace {

OrderedElement iv(Ordinal lo, Ordinal hi) { return OrderedElement::interval(lo, hi); }
OrderedElement w(Ordinal i) { return OrderedElement::singleton(i); }

const OrderedFrame kF3 = OrderedFrame::with_size(3);

MassFunction sample() {
  const FocalMass e[] = {{w(2), 0.4}, {iv(1, 2), 0.6}};
  return make_mass(kF3, e);
}

}  // namespace

TEST_CASE("make_mass") {
  const auto m = sample();
  CHECK(m.focals().size() == 2);
  CHECK(m.mass_of(w(2)) == doctest::Approx(0.4));
  CHECK(m.mass_of(w(3)) == 0.0);

  const FocalMass cat[] = {{w(1), 1.0}};
  CHECK(make_mass(kF3, cat).focals().size() == 1);

  const FocalMass half[] = {{w(1), 0.5}};
  CHECK(code_of([&] { make_mass(kF3, half); }) == ErrorCode::NotNormalized);

  const FocalMass neg[] = {{w(1), 1.5}, {w(2), -0.5}};
  CHECK(code_of([&] { make_mass(kF3, neg); }) == ErrorCode::NegativeMass);

  const FocalMass outside[] = {{w(4), 1.0}};
  CHECK(code_of([&] { make_mass(kF3, outside); }) == ErrorCode::InvalidElement);

  const FocalMass dup[] = {{w(1), 0.25}, {w(3), 0.0}, {w(1), 0.25}, {iv(1, 3), 0.5}};
  const auto d = make_mass(kF3, dup);
  CHECK(d.focals().size() == 2);
  CHECK(d.mass_of(w(1)) == doctest::Approx(0.5));

  const FocalMass near[] = {{w(1), 0.5 + 5e-10}, {w(2), 0.5}};
  CHECK_NOTHROW(make_mass(kF3, near));

  const FocalMass scaled[] = {{w(1), 2.0}, {w(2), 6.0}};
  const auto r = MassFunction::renormalized(kF3, scaled);
  CHECK(r.mass_of(w(2)) == doctest::Approx(0.75));
  const FocalMass zero[] = {{w(1), 0.0}};
  CHECK(code_of([&] { MassFunction::renormalized(kF3, zero); }) == ErrorCode::NotNormalized);
}

TEST_CASE("categorical and vacuous") {
  CHECK(categorical(kF3, w(1)).mass_of(w(1)) == 1.0);
  CHECK(vacuous(kF3).mass_of(iv(1, 3)) == 1.0);
  CHECK(code_of([] { categorical(kF3, OrderedElement::empty()); }) == ErrorCode::EmptyElement);
}

TEST_CASE("bel, pl, betp on the worked example") {
  const auto m = sample();
  CHECK(bel(m, w(1)) == 0.0);
  CHECK(bel(m, iv(1, 2)) == doctest::Approx(1.0));
  CHECK(bel(m, OrderedElement::empty()) == 0.0);
  CHECK(pl(m, w(1)) == doctest::Approx(0.6));
  CHECK(pl(m, w(3)) == 0.0);
  CHECK(pl(m, iv(1, 3)) == doctest::Approx(1.0));
  CHECK(betp(m, 1) == doctest::Approx(0.3));
  CHECK(betp(m, 2) == doctest::Approx(0.7));
  CHECK(betp(m, 3) == 0.0);

  const FocalMass all_empty[] = {{OrderedElement::empty(), 1.0}};
  CHECK(code_of([&] { betp(make_mass(kF3, all_empty), 1); }) == ErrorCode::TotalConflict);
}

TEST_CASE("transform invariants on random masses") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto frame = OrderedFrame::with_size(1 + trial % 8);
    const auto m = random_mass(frame, rng, 5, trial % 3 == 0);
    const auto elems = enumerate_ops(frame);
    const auto omega = OrderedElement::whole(frame);
    CHECK(bel(m, omega) == doctest::Approx(1.0 - m.empty_mass()));
    CHECK(pl(m, omega) == doctest::Approx(1.0 - m.empty_mass()));
    if (m.empty_mass() < 1.0) {
      double sum = 0.0;
      for (Ordinal i = 1; i <= frame.size(); ++i) sum += betp(m, i);
      CHECK(std::abs(sum - 1.0) < 1e-9);
    }
    for (auto x : elems) {
      CHECK(bel(m, x) <= pl(m, x) + 1e-12);
      for (auto y : elems) {
        if (!subset(x, y)) continue;
        CHECK(bel(m, x) <= bel(m, y) + 1e-12);
        CHECK(pl(m, x) <= pl(m, y) + 1e-12);
      }
    }
  }
}

TEST_CASE("bel, pl, betp agree with the bitset oracle") {
  using namespace ordbelief::testing;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto frame = OrderedFrame::with_size(1 + trial % 5);
    const auto m = random_mass(frame, rng, 5, trial % 4 == 0);
    const auto b = to_bits(m);
    for (auto x : enumerate_ops(frame)) {
      CHECK(std::abs(bel(m, x) - bit_bel(b, to_mask(x))) < 1e-12);
      CHECK(std::abs(pl(m, x) - bit_pl(b, to_mask(x))) < 1e-12);
    }
    if (m.empty_mass() > 1.0 - 1e-9) continue;
    for (Ordinal i = 1; i <= frame.size(); ++i)
      CHECK(std::abs(betp(m, i) - bit_betp(b, i)) < 1e-12);
  }
}

TEST_CASE("dense vector follows the canonical enumeration") {
  const auto v = sample().to_vector();
  REQUIRE(v.size() == 7);
  CHECK(v[2] == doctest::Approx(0.4));
  CHECK(v[3] == doctest::Approx(0.6));
  CHECK(v[0] == 0.0);
}
