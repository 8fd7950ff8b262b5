// Copyright 2026 The Polyblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyblock/triangulation.h"

#include <functional>
#include <random>
#include <set>

#include "doctest.h"

namespace polyblock {
namespace {

BigInt Factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt CatalanOracle(int m) {
  return Factorial(2 * m) / (Factorial(m) * Factorial(m + 1));
}

DiagonalSet Fan(int n, int v) {
  DiagonalSet s(n);
  for (int w = 0; w < n; ++w) {
    if (IsValidDiagonal(n, v, w)) s.Insert(Diagonal::Make(n, v, w));
  }
  return s;
}

// Size of the largest pairwise non-crossing diagonal set, by exhaustive
// extension in index order.
int LargestNonCrossing(int n) {
  const int count = DiagonalCount(n);
  std::vector<Diagonal> chosen;
  int best = 0;
  std::function<void(int)> extend = [&](int next) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int index = next; index < count; ++index) {
      const Diagonal d = DiagonalAt(n, index);
      bool ok = true;
      for (const Diagonal& c : chosen) ok = ok && !Crosses(c, d);
      if (!ok) continue;
      chosen.push_back(d);
      extend(index + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return best;
}

TEST_CASE("is_triangulation examples") {
  CHECK(IsTriangulation(DiagonalSet::Parse(5, "0-2,0-3")));
  CHECK_FALSE(IsTriangulation(DiagonalSet::Parse(5, "0-2,1-3")));
  CHECK_FALSE(IsTriangulation(DiagonalSet::Parse(6, "0-2,0-3")));
}

TEST_CASE("Catalan numbers agree with the factorial formula") {
  for (int m = 0; m <= 60; ++m) CHECK(CatalanNumber(m) == CatalanOracle(m));
}

TEST_CASE("enumeration counts match Catalan and are duplicate free") {
  for (int n = 4; n <= 12; ++n) {
    std::set<DiagonalSet, LexLessFn> seen;
    bool all_valid = true;
    std::size_t total = 0;
    ForEachTriangulation(n, [&](const DiagonalSet& t) {
      all_valid = all_valid && IsTriangulation(t);
      seen.insert(t);
      ++total;
    });
    CHECK(all_valid);
    CHECK(seen.size() == total);
    CHECK(BigInt(total) == CatalanOracle(n - 2));
  }
  CHECK(AllTriangulations(4).size() == 2);
  CHECK(AllTriangulations(6).size() == 14);
  CHECK(TriangulationMasks(12).size() == 16796);
}

TEST_CASE("enumeration order is deterministic, apex first") {
  const std::vector<DiagonalSet> ts = AllTriangulations(4);
  CHECK(ts[0].ToString() == "1-3");  // apex 1 over edge 0-3
  CHECK(ts[1].ToString() == "0-2");  // apex 2
  CHECK(AllTriangulations(7) == AllTriangulations(7));
}

TEST_CASE("n-3 non-crossing diagonals are maximal") {
  for (int n = 4; n <= 9; ++n) CHECK(LargestNonCrossing(n) == n - 3);
}

TEST_CASE("contains_triangulation examples") {
  for (int n = 4; n <= 20; ++n) {
    const auto all = ContainsTriangulation(DiagonalSet::All(n));
    REQUIRE(all.has_value());
    CHECK(IsTriangulation(*all));
    for (int v = 0; v < n; ++v) {
      const auto star = ContainsTriangulation(Fan(n, v));
      REQUIRE(star.has_value());
      CHECK(*star == Fan(n, v));
    }
    DiagonalSet no_ears(n);
    for (int index = 0; index < DiagonalCount(n); ++index) {
      const Diagonal d = DiagonalAt(n, index);
      if (DiagonalOrder(n, d) >= 3) no_ears.Insert(d);
    }
    CHECK_FALSE(ContainsTriangulation(no_ears).has_value());
  }
}

TEST_CASE("every triangulation has two ear-covers (exhaustive, 5 <= n <= 10)") {
  // For n = 4 the single diagonal is the only ear-cover.
  for (int n = 5; n <= 10; ++n) {
    bool every_has_two = true;
    ForEachTriangulation(n, [&](const DiagonalSet& t) {
      int ears = 0;
      for (const Diagonal& d : t.Diagonals()) ears += IsEarCover(n, d);
      every_has_two = every_has_two && ears >= 2;
    });
    CHECK(every_has_two);
  }
}

TEST_CASE("dp agrees with exhaustive search (n <= 10)") {
  std::mt19937_64 rng(11);
  for (int n = 4; n <= 10; ++n) {
    const std::vector<DiagonalSet> ts = AllTriangulations(n);
    const int trials = n <= 8 ? 400 : 120;
    for (int trial = 0; trial < trials; ++trial) {
      DiagonalSet allowed(n);
      // Vary the density so both outcomes are well represented.
      const int keep = 40 + static_cast<int>(rng() % 55);
      for (int index = 0; index < DiagonalCount(n); ++index) {
        if (static_cast<int>(rng() % 100) < keep) allowed.Insert(DiagonalAt(n, index));
      }
      bool exists = false;
      for (const DiagonalSet& t : ts) exists = exists || t.IsSubsetOf(allowed);
      const auto witness = ContainsTriangulation(allowed);
      CHECK(witness.has_value() == exists);
      if (witness) {
        CHECK(IsTriangulation(*witness));
        CHECK(witness->IsSubsetOf(allowed));
      }
      for (int k = 1; k < n; ++k) {
        CHECK(ContainsTriangulation(Rotate(n, k, allowed)).has_value() == exists);
      }
    }
  }
}

}  // namespace
}  // namespace polyblock
