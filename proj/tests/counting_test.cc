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

#include "polyblock/counting.h"

#include <map>

#include "doctest.h"
#include "polyblock/blocker.h"
#include "polyblock/polygon.h"

namespace polyblock {
namespace {

// The double sum evaluated literally, memoized on (n, k).
class NaiveFk {
 public:
  BigInt operator()(int n, int k) {
    if (k == n - 2) return 1;
    if (k == n - 3) return n - 5;
    auto key = std::make_pair(n, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (int j = 2; j <= k; ++j) {
      for (int i = j + 2; i <= n - 1 + j - k; ++i) total += (*this)(i, j);
    }
    memo_[key] = total;
    return total;
  }

 private:
  std::map<std::pair<int, int>, BigInt> memo_;
};

BigInt IteratedFib(int k) {
  // Standard sequence with G_0 = 0, then patch index 0.
  BigInt a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return k == 0 ? BigInt(1) : a;
}

TEST_CASE("fib uses F_0 = 1") {
  CHECK(Fib(0) == 1);
  CHECK(Fib(1) == 1);
  CHECK(Fib(2) == 1);
  CHECK(Fib(8) == 21);
  CHECK(Fib(16) == 987);
  for (int k = 0; k <= 400; ++k) CHECK(Fib(k) == IteratedFib(k));
}

TEST_CASE("count formula") {
  CHECK(BlockerCountFormula(4) == 1);
  CHECK(BlockerCountFormula(7) == 8);
  CHECK(BlockerCountFormula(12) == 987);
  CHECK_THROWS_AS(BlockerCountFormula(3), Error);
}

TEST_CASE("f^k base values") {
  CHECK(FK(5, 2) == 0);
  for (int n = 4; n <= 40; ++n) CHECK(FK(n, n - 2) == 1);
  CHECK(FK(6, 2) == 1);
  CHECK(FK(6, 3) == 1);
  CHECK(FK(6, 4) == 1);
  CHECK_THROWS_AS(FK(6, 1), Error);
  CHECK_THROWS_AS(FK(6, 5), Error);
}

TEST_CASE("totals") {
  CHECK(FTotal(5) == 1);
  CHECK(FTotal(8) == 21);
  CHECK(FTotal(30) == Fib(52));
}

TEST_CASE("prefix-sum table equals the literal double sum") {
  const CountTable table(45);
  NaiveFk naive;
  for (int n = 4; n <= 45; ++n) {
    for (int k = 2; k <= n - 2; ++k) CHECK(table.Fk(n, k) == naive(n, k));
  }
}

TEST_CASE("recursion equals formula up to n = 200") {
  const CountTable table(kMaxCountSize);
  for (int n = 4; n <= kMaxCountSize; ++n) {
    CHECK(table.Total(n) == BlockerCountFormula(n));
    CHECK(table.RowAgrees(n));
    for (int k = 2; k <= n - 2; ++k) CHECK(table.Fk(n, k) >= 0);
  }
  // No silent overflow: F_392 has 82 decimal digits.
  CHECK(table.Total(200).str().size() == 82);
}

TEST_CASE("per-k counts match enumeration classified by net length") {
  const CountTable table(12);
  for (int n = 4; n <= 12; ++n) {
    const auto buckets = CountBlockersByNetLength(n);
    for (int k = 2; k <= n - 2; ++k) CHECK(buckets.at(k) == table.Fk(n, k));
  }
}

TEST_CASE("count table provenance") {
  CountTable table(9);
  table.Record(9, CountSource::kEnumeration,
               static_cast<int>(EnumerateBlockers(9, true).size()));
  table.Record(9, CountSource::kBruteForce,
               static_cast<int>(DistinctUpToRotation(BruteForceBlockers(9)).size()));
  const auto cells = table.Cells(9);
  REQUIRE(cells.size() == 4);
  CHECK(cells[0].source == CountSource::kRecursion);
  CHECK(cells[1].source == CountSource::kFormula);
  CHECK(cells[2].source == CountSource::kEnumeration);
  CHECK(cells[3].source == CountSource::kBruteForce);
  CHECK(table.RowAgrees(9));
  CHECK(cells[3].value == 55);
  table.Record(8, CountSource::kEnumeration, 20);
  CHECK_FALSE(table.RowAgrees(8));
}

TEST_CASE("identities") {
  const IdentityReport report = VerifyIdentities(kMaxCountSize);
  CHECK(report.recursion_holds());
  CHECK(report.weighted_holds());
  // f(8) = 1*8 + 2*3 + 3*1 + 4*1 (k*f(8-k) with f(7..4) = 8, 3, 1, 1).
  CHECK(report.recursion[3].n == 8);
  CHECK(report.recursion[3].lhs == 21);
  // Weighted identity at n = 3: 8 = 3 + 2 + 3.
  CHECK(report.weighted_fibonacci[2].n == 3);
  CHECK(report.weighted_fibonacci[2].rhs == 8);
  // Unweighted at n = 4: F_8 = 21 against F_6 + F_4 + F_2 + F_0 = 13.
  CHECK(report.unweighted_fibonacci[3].lhs == 21);
  CHECK(report.unweighted_fibonacci[3].rhs == 13);
  const auto failures = report.unweighted_failures();
  CHECK(failures.front() == 2);
  CHECK(failures.size() == kMaxCountSize - 1);
  CHECK_THROWS_AS(VerifyIdentities(7), Error);
}

}  // namespace
}  // namespace polyblock
