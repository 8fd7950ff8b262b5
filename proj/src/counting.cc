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

#include <algorithm>

#include "polyblock/blocker.h"
#include "polyblock/polygon.h"

namespace polyblock {

BigInt Fib(int k) {
  if (k < 0) throw Error("Fibonacci index must be non-negative");
  if (k <= 2) return 1;
  BigInt prev = 1;
  BigInt cur = 1;
  for (int i = 3; i <= k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt BlockerCountFormula(int n) {
  CheckPolygonSize(n);
  return Fib(2 * n - 8);
}

std::string ToString(CountSource source) {
  switch (source) {
    case CountSource::kRecursion: return "recursion";
    case CountSource::kFormula: return "formula";
    case CountSource::kEnumeration: return "enumeration";
    case CountSource::kBruteForce: return "brute-force";
  }
  return "unknown";
}

CountTable::CountTable(int n_max) : n_max_(n_max) {
  CheckPolygonSize(n_max);
  fk_.assign(n_max + 1, {});
  // prefix[j][i] = sum of f^j(i') over i' <= i.
  std::vector<std::vector<BigInt>> prefix(n_max + 1,
                                          std::vector<BigInt>(n_max + 1, 0));
  for (int n = kMinPolygonSize; n <= n_max; ++n) {
    fk_[n].assign(n - 1, 0);
    for (int k = 2; k <= n - 2; ++k) {
      if (k == n - 2) {
        fk_[n][k] = 1;
      } else if (k == n - 3) {
        fk_[n][k] = n - 5;
      } else {
        BigInt total = 0;
        for (int j = 2; j <= k; ++j) {
          total += prefix[j][n - 1 + j - k] - prefix[j][j + 1];
        }
        fk_[n][k] = std::move(total);
      }
    }
    for (int j = 2; j <= n_max; ++j) {
      prefix[j][n] = prefix[j][n - 1] + (j <= n - 2 ? fk_[n][j] : BigInt(0));
    }
  }
}

void CountTable::CheckRow(int n) const {
  if (n < kMinPolygonSize || n > n_max_) {
    throw Error("row n = " + std::to_string(n) + " outside the table");
  }
}

const BigInt& CountTable::Fk(int n, int k) const {
  CheckRow(n);
  if (k < 2 || k > n - 2) {
    throw Error("k = " + std::to_string(k) + " outside [2, n-2]");
  }
  return fk_[n][k];
}

BigInt CountTable::Total(int n) const {
  CheckRow(n);
  BigInt total = 0;
  for (int k = 2; k <= n - 2; ++k) total += fk_[n][k];
  return total;
}

void CountTable::Record(int n, CountSource source, BigInt value) {
  CheckRow(n);
  recorded_[n].push_back(CountCell{std::move(value), source});
}

std::vector<CountCell> CountTable::Cells(int n) const {
  std::vector<CountCell> cells{{Total(n), CountSource::kRecursion},
                               {BlockerCountFormula(n), CountSource::kFormula}};
  if (auto it = recorded_.find(n); it != recorded_.end()) {
    cells.insert(cells.end(), it->second.begin(), it->second.end());
  }
  return cells;
}

bool CountTable::RowAgrees(int n) const {
  const std::vector<CountCell> cells = Cells(n);
  return std::all_of(cells.begin(), cells.end(), [&](const CountCell& c) {
    return c.value == cells.front().value;
  });
}

BigInt FK(int n, int k) { return CountTable(n).Fk(n, k); }

BigInt FTotal(int n) { return CountTable(n).Total(n); }

std::map<int, BigInt> CountBlockersByNetLength(int n) {
  std::map<int, BigInt> buckets;
  for (int k = 2; k <= n - 2; ++k) buckets[k] = 0;
  for (const DiagonalSet& b : EnumerateBlockers(n, /*up_to_rotation=*/true)) {
    const StructureParse parse = ParseStructure(b);
    if (!parse.structure) {
      throw Error("generated set failed to parse: " + b.ToString());
    }
    ++buckets[parse.structure->m + 1];
  }
  return buckets;
}

bool IdentityReport::recursion_holds() const {
  return std::all_of(recursion.begin(), recursion.end(),
                     [](const IdentityRow& r) { return r.holds(); });
}

bool IdentityReport::weighted_holds() const {
  return std::all_of(weighted_fibonacci.begin(), weighted_fibonacci.end(),
                     [](const IdentityRow& r) { return r.holds(); });
}

std::vector<int> IdentityReport::unweighted_failures() const {
  std::vector<int> out;
  for (const IdentityRow& r : unweighted_fibonacci) {
    if (!r.holds()) out.push_back(r.n);
  }
  return out;
}

IdentityReport VerifyIdentities(int n_max) {
  if (n_max < 8) throw Error("identity check needs n_max >= 8");
  if (n_max > kMaxCountSize) throw Error("identity check limited to n_max <= 200");
  const CountTable table(n_max);
  IdentityReport report;
  std::vector<BigInt> f(n_max + 1, 0);
  for (int n = kMinPolygonSize; n <= n_max; ++n) f[n] = table.Total(n);
  for (int n = 5; n <= n_max; ++n) {
    IdentityRow row{n, f[n], 0};
    for (int k = 1; k <= n - 4; ++k) row.rhs += k * f[n - k];
    report.recursion.push_back(std::move(row));
  }
  for (int n = 1; n <= n_max; ++n) {
    IdentityRow weighted{n, Fib(2 * n), 0};
    IdentityRow unweighted{n, Fib(2 * n), 0};
    for (int k = 1; k <= n; ++k) {
      const BigInt term = Fib(2 * n - 2 * k);
      weighted.rhs += k * term;
      unweighted.rhs += term;
    }
    report.weighted_fibonacci.push_back(std::move(weighted));
    report.unweighted_fibonacci.push_back(std::move(unweighted));
  }
  return report;
}

}  // namespace polyblock
