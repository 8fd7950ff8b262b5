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

#ifndef POLYBLOCK_COUNTING_H_
#define POLYBLOCK_COUNTING_H_

#include <map>
#include <string>
#include <vector>

#include "polyblock/bigint.h"

namespace polyblock {

inline constexpr int kMaxCountSize = 200;

// Fibonacci numbers with F_1 = F_2 = 1 and the convention F_0 = 1.
BigInt Fib(int k);

// Number of blockers up to rotation, F_{2n-8}.
BigInt BlockerCountFormula(int n);

enum class CountSource { kRecursion, kFormula, kEnumeration, kBruteForce };

std::string ToString(CountSource source);

struct CountCell {
  BigInt value;
  CountSource source;
};

// f^k(n): blockers (up to rotation) whose net has k ear-covers, for
// 4 <= n <= n_max and 2 <= k <= n-2. Filled bottom-up:
//   f^{n-2}(n) = 1,   f^{n-3}(n) = n-5,
//   f^k(n) = sum_{j=2..k} sum_{i=j+2..n-1+j-k} f^j(i)   for 2 <= k <= n-4,
// with the inner sums read off running prefix sums.
class CountTable {
 public:
  explicit CountTable(int n_max);

  int n_max() const { return n_max_; }
  const BigInt& Fk(int n, int k) const;
  // sum_k f^k(n).
  BigInt Total(int n) const;

  // Attaches an independently obtained f(n) (enumeration, brute force, ...).
  void Record(int n, CountSource source, BigInt value);
  // Recursion total, formula value, then recorded cells in insertion order.
  std::vector<CountCell> Cells(int n) const;
  // True when every cell of row n carries the same value.
  bool RowAgrees(int n) const;

 private:
  void CheckRow(int n) const;

  int n_max_;
  std::vector<std::vector<BigInt>> fk_;  // fk_[n][k]
  std::map<int, std::vector<CountCell>> recorded_;
};

BigInt FK(int n, int k);
BigInt FTotal(int n);

// Blockers up to rotation for n, bucketed by the number of ear-covers in
// their recovered net. Uses the structural generator, so n <= 12 or so.
std::map<int, BigInt> CountBlockersByNetLength(int n);

struct IdentityRow {
  int n = 0;
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  // f(n) = sum_{k=1}^{n-4} k f(n-k) for 5 <= n <= n_max.
  std::vector<IdentityRow> recursion;
  // F_{2n} = sum_{k=1}^{n} k F_{2n-2k} for 1 <= n <= n_max.
  std::vector<IdentityRow> weighted_fibonacci;
  // The unweighted F_{2n} = sum_{k=1}^{n} F_{2n-2k}; fails from n = 2 on.
  std::vector<IdentityRow> unweighted_fibonacci;

  bool recursion_holds() const;
  bool weighted_holds() const;
  std::vector<int> unweighted_failures() const;
};

IdentityReport VerifyIdentities(int n_max);

}  // namespace polyblock

#endif  // POLYBLOCK_COUNTING_H_
