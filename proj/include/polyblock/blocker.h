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

#ifndef POLYBLOCK_BLOCKER_H_
#define POLYBLOCK_BLOCKER_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyblock/polygon.h"

namespace polyblock {

// A blocker is a minimum-size set of diagonals meeting every triangulation.
// Every blocker has n-2 edges and, up to rotation, the normal form
//
//   net:   (a, a+2), (a+1, a+3), ..., (a+m, a+m+2)          m+1 ear-covers
//   beams: (a+m+2+j, a+i_j) for j = 1 .. n-3-m,  1 <= i_j <= m+1
//
// where two beams whose net endpoints differ by at least 2 never cross. For
// beams j < k this is the same as i_k <= i_j + 1.
struct BlockerStructure {
  int a = 0;
  int m = 1;
  std::vector<int> beams;  // i_1 .. i_{n-3-m}, relative to a

  bool operator==(const BlockerStructure&) const = default;
};

// Throws Error when st violates the normal-form invariants for n.
void ValidateStructure(int n, const BlockerStructure& st);

// Net followed by beams; the result is always a blocker.
DiagonalSet BuildEdges(int n, const BlockerStructure& st);

// Members of b that are ear-covers.
DiagonalSet EarsOf(const DiagonalSet& b);

enum class BlockingMethod { kDp, kExhaustive };

// Exhaustive scanning is limited to n <= 12.
bool IsBlockingSet(const DiagonalSet& b,
                   BlockingMethod method = BlockingMethod::kDp);

// Blocking and of size n-2 (the minimum possible size).
bool IsBlocker(const DiagonalSet& b);

enum class StructureViolation {
  kNone,
  kNoEars,
  kTooFewEars,
  kTooManyEars,
  kEarsNotContiguous,
  kEdgeNotBeam,
  kVertexWithMultipleBeams,
  kVertexWithoutBeam,
  kBeamsCross,
};

std::string ToString(StructureViolation v);

struct StructureParse {
  std::optional<BlockerStructure> structure;
  StructureViolation violation = StructureViolation::kNone;
  std::string detail;
};

// Recovers the normal form. The net is the maximal run of ear-covers
// actually present in b, so m can exceed the m of a generator whose beams
// happened to be ear-covers themselves. a is the first vertex of the run.
StructureParse ParseStructure(const DiagonalSet& b);

enum class Observation {
  kNoIsolatedVertex,
  kHighDegreeHasEarCover,
  kEdgeHasCoveredEndpoint,
  kAtLeastTwoEarCovers,
};

std::string ToString(Observation o);

struct ObservationResult {
  Observation observation;
  bool passed = true;
  // Counterexample on failure: a vertex, an edge, or an ear count.
  std::optional<int> vertex;
  std::optional<Diagonal> edge;
  std::optional<int> ear_count;
};

// The necessary conditions every blocker satisfies, evaluated on b:
//  1. every vertex meets an edge of b;
//  2. a vertex of degree >= 2 has its ear-cover in b;
//  3. every edge has an endpoint whose ear-cover is in b;
//  4. b holds at least two ear-covers.
std::vector<ObservationResult> ObservationChecks(const DiagonalSet& b);

struct BlockerReport {
  int n = 0;
  bool is_blocking = false;
  int size = 0;
  bool is_minimum_size = false;
  StructureParse structure;
  std::vector<ObservationResult> observations;

  bool is_blocker() const { return is_blocking && is_minimum_size; }
};

BlockerReport VerifyBlocker(const DiagonalSet& b);

// Visits every beam sequence admissible for (n, m) in lexicographic order.
void ForEachBeamSequence(int n, int m,
                         const std::function<void(const std::vector<int>&)>& visit);

// All blockers generated from the normal form, duplicate-free and sorted by
// LexLess. With up_to_rotation each class is represented by its canonical
// rotation; otherwise every rotation is listed.
std::vector<DiagonalSet> EnumerateBlockers(int n, bool up_to_rotation);

inline constexpr int kMaxBruteForceSize = 10;

// Every (n-2)-subset of diagonals that meets every triangulation, found by
// scanning subsets against precomputed triangulation masks with no use of the
// normal form. Refuses n > 10 unless allow_large is set (n <= 12 hard cap).
std::vector<DiagonalSet> BruteForceBlockers(int n, bool allow_large = false);

// Canonical rotations of sets, deduplicated and LexLess-sorted.
std::vector<DiagonalSet> DistinctUpToRotation(const std::vector<DiagonalSet>& sets);

}  // namespace polyblock

#endif  // POLYBLOCK_BLOCKER_H_
