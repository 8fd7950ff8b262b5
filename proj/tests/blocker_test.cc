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

#include "polyblock/blocker.h"

#include <functional>

#include "doctest.h"
#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

DiagonalSet Sun(int n, int v) {
  DiagonalSet s(n);
  for (int w = 0; w < n; ++w) {
    if (IsValidDiagonal(n, v, w)) s.Insert(Diagonal::Make(n, v, w));
  }
  s.Insert(EarCoverOf(n, v));
  return s;
}

DiagonalSet Net(int n, int start, int ears) {
  DiagonalSet s(n);
  for (int t = 0; t < ears; ++t) {
    s.Insert(Diagonal::Make(n, (start + t) % n, (start + t + 2) % n));
  }
  return s;
}

const ObservationResult& Check(const std::vector<ObservationResult>& rs,
                               Observation o) {
  for (const auto& r : rs) {
    if (r.observation == o) return r;
  }
  throw Error("missing observation");
}

// Every sequence in [1, m+1]^length, with no admissibility filter.
void ForEachRawSequence(int m, int length,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> seq(length, 1);
  while (true) {
    visit(seq);
    int pos = length - 1;
    while (pos >= 0 && seq[pos] == m + 1) seq[pos--] = 1;
    if (pos < 0) return;
    ++seq[pos];
  }
}

TEST_CASE("ears_of") {
  CHECK(EarsOf(DiagonalSet::Parse(6, "0-2,1-3,2-5")).ToString() == "0-2,1-3");
  CHECK(EarsOf(DiagonalSet::Parse(6, "0-3,1-4")).Empty());
  CHECK(EarsOf(DiagonalSet::Parse(5, "1-4")).ToString() == "1-4");
}

TEST_CASE("blocking set examples") {
  for (int v = 0; v < 8; ++v) {
    CHECK(IsBlockingSet(Sun(8, v)));
    CHECK(IsBlockingSet(Sun(8, v), BlockingMethod::kExhaustive));
    CHECK(IsBlocker(Sun(8, v)));
    CHECK(IsBlockingSet(Net(8, v, 6)));
    CHECK(IsBlockingSet(Net(8, v, 6), BlockingMethod::kExhaustive));
  }
  CHECK_FALSE(IsBlockingSet(DiagonalSet::Parse(5, "0-2")));
  CHECK_FALSE(IsBlockingSet(DiagonalSet::Parse(5, "0-2"), BlockingMethod::kExhaustive));
  CHECK_THROWS_AS(IsBlockingSet(DiagonalSet(13), BlockingMethod::kExhaustive), Error);
}

TEST_CASE("blocker examples") {
  CHECK(IsBlocker(DiagonalSet::Parse(4, "0-2,1-3")));
  const DiagonalSet b6 = DiagonalSet::Parse(6, "0-2,1-3,2-4,5-2");
  CHECK(IsBlocker(b6));
  CHECK(IsBlockingSet(b6, BlockingMethod::kExhaustive));
  const DiagonalSet five = b6 | DiagonalSet::Parse(6, "0-3");
  CHECK(IsBlockingSet(five));
  CHECK_FALSE(IsBlocker(five));
}

TEST_CASE("observation checks") {
  for (const DiagonalSet& b : EnumerateBlockers(7, false)) {
    for (const auto& r : ObservationChecks(b)) CHECK(r.passed);
  }
  // Sun at 0 without 0-3 leaves vertex 3 isolated.
  const DiagonalSet broken = Sun(6, 0) - DiagonalSet::Parse(6, "0-3");
  const auto isolated = Check(ObservationChecks(broken), Observation::kNoIsolatedVertex);
  CHECK_FALSE(isolated.passed);
  CHECK(isolated.vertex == 3);

  const DiagonalSet high = DiagonalSet::Parse(6, "0-2,0-3,1-3,2-4");
  const auto degree = Check(ObservationChecks(high), Observation::kHighDegreeHasEarCover);
  CHECK_FALSE(degree.passed);
  CHECK(degree.vertex == 0);

  const auto endpoint = Check(ObservationChecks(DiagonalSet::Parse(8, "0-4")),
                              Observation::kEdgeHasCoveredEndpoint);
  CHECK_FALSE(endpoint.passed);
  CHECK(endpoint.edge == Diagonal{0, 4});

  const auto ears = Check(ObservationChecks(DiagonalSet::Parse(8, "0-2,0-4")),
                          Observation::kAtLeastTwoEarCovers);
  CHECK_FALSE(ears.passed);
  CHECK(ears.ear_count == 1);
}

TEST_CASE("parse_structure examples") {
  // n = 12, net (0,2)..(4,6) and beams from 7..11.
  const BlockerStructure fig{0, 4, {4, 3, 3, 2, 2}};
  const DiagonalSet b12 = BuildEdges(12, fig);
  CHECK(b12.ToString() == "0-2,1-3,2-4,2-10,2-11,3-5,3-8,3-9,4-6,4-7");
  CHECK(IsBlocker(b12));
  const StructureParse p12 = ParseStructure(b12);
  REQUIRE(p12.structure.has_value());
  CHECK(*p12.structure == fig);

  const StructureParse p6 = ParseStructure(DiagonalSet::Parse(6, "0-2,1-3,4-1,5-2"));
  REQUIRE(p6.structure.has_value());
  CHECK(*p6.structure == BlockerStructure{0, 1, {1, 2}});
  CHECK(IsBlockingSet(DiagonalSet::Parse(6, "0-2,1-3,4-1,5-2"),
                      BlockingMethod::kExhaustive));

  // Nominal m = 2 with beam 5-1; the beam is an ear-cover covering 0, so the
  // recovered net is the four ear-covers starting at 5.
  const StructureParse merged = ParseStructure(DiagonalSet::Parse(6, "0-2,1-3,2-4,5-1"));
  REQUIRE(merged.structure.has_value());
  CHECK(merged.structure->a == 5);
  CHECK(merged.structure->m == 3);
  CHECK(merged.structure->beams.empty());
}

TEST_CASE("parse_structure diagnostics") {
  CHECK(ParseStructure(DiagonalSet::Parse(8, "0-4,1-5")).violation ==
        StructureViolation::kNoEars);
  CHECK(ParseStructure(DiagonalSet::Parse(8, "0-2,4-6")).violation ==
        StructureViolation::kEarsNotContiguous);
  CHECK(ParseStructure(DiagonalSet::Parse(8, "0-2,1-4")).violation ==
        StructureViolation::kTooFewEars);
  CHECK(ParseStructure(Net(6, 0, 6)).violation == StructureViolation::kTooManyEars);
  CHECK(ParseStructure(Net(6, 0, 5)).violation == StructureViolation::kTooManyEars);
  // 0-5 touches the net end 0.
  CHECK(ParseStructure(DiagonalSet::Parse(8, "0-2,1-3,0-5,4-1,6-2,7-2")).violation ==
        StructureViolation::kEdgeNotBeam);
  CHECK(ParseStructure(DiagonalSet::Parse(8, "0-2,1-3,5-1,5-2,7-2")).violation ==
        StructureViolation::kVertexWithMultipleBeams);
  CHECK(ParseStructure(DiagonalSet::Parse(8, "0-2,1-3,4-1,5-2")).violation ==
        StructureViolation::kVertexWithoutBeam);
  // m = 2, beams 5-1 and 6-3 differ by 2 and cross.
  const DiagonalSet crossing = DiagonalSet::Parse(7, "0-2,1-3,2-4,5-1,6-3");
  CHECK(ParseStructure(crossing).violation == StructureViolation::kBeamsCross);
  CHECK_FALSE(IsBlockingSet(crossing));
}

TEST_CASE("build_edges examples and validation") {
  CHECK(BuildEdges(5, {0, 2, {}}).ToString() == "0-2,1-3,2-4");
  CHECK(BuildEdges(6, {0, 2, {2}}).ToString() == "0-2,1-3,2-4,2-5");
  CHECK(IsBlockingSet(BuildEdges(6, {0, 2, {2}}), BlockingMethod::kExhaustive));
  CHECK_THROWS_AS(BuildEdges(6, {0, 0, {1, 1, 1}}), Error);
  CHECK_THROWS_AS(BuildEdges(6, {0, 2, {}}), Error);
  CHECK_THROWS_AS(BuildEdges(6, {0, 2, {4}}), Error);
  CHECK_THROWS_AS(BuildEdges(7, {0, 2, {1, 3}}), Error);
  CHECK_THROWS_AS(BuildEdges(6, {6, 3, {}}), Error);
}

TEST_CASE("beam constraint: geometric form equals arithmetic form") {
  for (int n = 4; n <= 10; ++n) {
    for (int m = 1; m <= n - 3; ++m) {
      const int length = n - 3 - m;
      int admissible = 0;
      ForEachRawSequence(m, length, [&](const std::vector<int>& seq) {
        bool geometric = true;
        bool arithmetic = true;
        for (int j = 0; j < length; ++j) {
          for (int k = j + 1; k < length; ++k) {
            const Diagonal bj = Diagonal::Make(n, m + 3 + j, seq[j]);
            const Diagonal bk = Diagonal::Make(n, m + 3 + k, seq[k]);
            if (std::abs(seq[j] - seq[k]) >= 2 && Crosses(bj, bk)) geometric = false;
            if (seq[k] > seq[j] + 1) arithmetic = false;
          }
        }
        CHECK(geometric == arithmetic);
        admissible += arithmetic;
      });
      int generated = 0;
      ForEachBeamSequence(n, m, [&](const std::vector<int>&) { ++generated; });
      CHECK(generated == admissible);
    }
  }
}

TEST_CASE("structure round trip") {
  for (int n = 4; n <= 10; ++n) {
    for (int m = 1; m <= n - 3; ++m) {
      ForEachBeamSequence(n, m, [&](const std::vector<int>& beams) {
        for (int a = 0; a < n; ++a) {
          const DiagonalSet edges = BuildEdges(n, {a, m, beams});
          CHECK(edges.Size() == n - 2);
          const StructureParse parse = ParseStructure(edges);
          REQUIRE(parse.structure.has_value());
          CHECK(BuildEdges(n, *parse.structure) == edges);
          CHECK(parse.structure->m >= m);
        }
      });
    }
  }
}

TEST_CASE("enumeration examples") {
  const auto four = EnumerateBlockers(4, true);
  REQUIRE(four.size() == 1);
  CHECK(four[0].ToString() == "0-2,1-3");
  const auto six = EnumerateBlockers(6, true);
  CHECK(six.size() == 3);
  CHECK(EnumerateBlockers(8, true).size() == 21);
}

TEST_CASE("brute force examples") {
  CHECK(BruteForceBlockers(5).size() == 5);
  CHECK(DistinctUpToRotation(BruteForceBlockers(5)).size() == 1);
  CHECK(BruteForceBlockers(7).size() == 56);
  CHECK(DistinctUpToRotation(BruteForceBlockers(7)).size() == 8);
  CHECK_THROWS_AS(BruteForceBlockers(11), Error);
  CHECK_THROWS_AS(BruteForceBlockers(13, true), Error);
}

TEST_CASE("the three hexagon blockers are net, one beam, two beams") {
  const auto six = DistinctUpToRotation(BruteForceBlockers(6));
  REQUIRE(six.size() == 3);
  CHECK(six == EnumerateBlockers(6, true));
  std::vector<int> ears;
  for (const auto& b : six) ears.push_back(EarsOf(b).Size());
  std::sort(ears.begin(), ears.end());
  CHECK(ears == std::vector<int>{2, 3, 4});
}

TEST_CASE("characterization: generator equals brute force (n <= 8)") {
  for (int n = 4; n <= 8; ++n) {
    const auto generated = EnumerateBlockers(n, false);
    const auto brute = BruteForceBlockers(n);
    CHECK(generated == brute);
    for (const auto& b : generated) {
      CHECK(IsBlocker(b));
      CHECK(IsBlockingSet(b, BlockingMethod::kExhaustive));
      for (const auto& r : ObservationChecks(b)) CHECK(r.passed);
    }
  }
}

TEST_CASE("no blocker has rotational symmetry; total is n times classes") {
  // n = 4 is the exception: its only blocker, both diagonals, is fixed by
  // every rotation.
  CHECK(EnumerateBlockers(4, false).size() == 1);
  for (int n = 5; n <= 10; ++n) {
    const auto classes = EnumerateBlockers(n, true);
    const auto total = EnumerateBlockers(n, false);
    CHECK(total.size() == n * classes.size());
    for (const auto& b : classes) {
      for (int k = 1; k < n; ++k) CHECK_FALSE(Rotate(n, k, b) == b);
    }
  }
}

TEST_CASE("generated blockers are sound under the dp test (n <= 10)") {
  for (int n = 9; n <= 10; ++n) {
    for (const auto& b : EnumerateBlockers(n, false)) CHECK(IsBlocker(b));
  }
}

TEST_CASE("verify report") {
  const BlockerReport yes = VerifyBlocker(DiagonalSet::Parse(6, "0-2,1-3,2-4,5-2"));
  CHECK(yes.is_blocker());
  REQUIRE(yes.structure.structure.has_value());
  CHECK(yes.structure.structure->m == 2);
  CHECK(yes.structure.structure->beams == std::vector<int>{2});
  const BlockerReport no = VerifyBlocker(DiagonalSet::Parse(6, "0-2,1-3,2-4"));
  CHECK_FALSE(no.is_blocking);
  CHECK(no.size == 3);
  CHECK_FALSE(no.is_minimum_size);
}

}  // namespace
}  // namespace polyblock
