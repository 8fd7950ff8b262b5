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
#ifndef POLYBLOCK_TRIANGULATION_H_
#define POLYBLOCK_TRIANGULATION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polyblock/bigint.h"
#include "polyblock/polygon.h"

namespace polyblock {

// Enumeration is only offered where it finishes in interactive time.
inline constexpr int kMaxEnumerationSize = 14;

// n-3 pairwise non-crossing diagonals. In a convex polygon such a set is
// automatically maximal, so no separate maximality test is needed.
bool IsTriangulation(const DiagonalSet& s);

// Catalan number C(m) = (2m)! / (m! (m+1)!).
BigInt CatalanNumber(int m);
inline BigInt TriangulationCount(int n) { return CatalanNumber(n - 2); }

// Streams every triangulation exactly once. The recursion splits on the
// triangle over the boundary edge (0, n-1) and visits apex vertices in
// increasing order, so the sequence is deterministic.
void ForEachTriangulation(int n,
                          const std::function<void(const DiagonalSet&)>& visit);

std::vector<DiagonalSet> AllTriangulations(int n);

// Bit masks of every triangulation; requires n <= 12.
std::vector<std::uint64_t> TriangulationMasks(int n);

// Some triangulation using only diagonals from allowed, or nullopt if none
// exists (equivalently, the complement of allowed blocks every
// triangulation). Interval DP in O(n^3); at each cell the smallest apex that
// works is taken, which fixes the witness.
std::optional<DiagonalSet> ContainsTriangulation(const DiagonalSet& allowed);

}  // namespace polyblock

#endif  // POLYBLOCK_TRIANGULATION_H_
