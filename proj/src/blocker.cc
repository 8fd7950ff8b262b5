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

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

int Mod(int v, int n) { return ((v % n) + n) % n; }

std::vector<int> Degrees(const DiagonalSet& b) {
  std::vector<int> degree(b.n(), 0);
  for (const Diagonal& d : b.Diagonals()) {
    ++degree[d.i];
    ++degree[d.j];
  }
  return degree;
}

}  // namespace

void ValidateStructure(int n, const BlockerStructure& st) {
  CheckPolygonSize(n);
  if (st.a < 0 || st.a >= n) throw Error("offset a out of range");
  if (st.m < 1 || st.m > n - 3) {
    throw Error("net parameter m must lie in [1, n-3], got " +
                std::to_string(st.m));
  }
  if (static_cast<int>(st.beams.size()) != n - 3 - st.m) {
    throw Error("expected " + std::to_string(n - 3 - st.m) + " beams, got " +
                std::to_string(st.beams.size()));
  }
  int lowest = st.m + 1;
  for (std::size_t j = 0; j < st.beams.size(); ++j) {
    const int target = st.beams[j];
    if (target < 1 || target > st.m + 1) {
      throw Error("beam target " + std::to_string(target) +
                  " outside the net interior [1, m+1]");
    }
    if (j > 0 && target > lowest + 1) {
      throw Error("beam " + std::to_string(j + 1) + " crosses an earlier beam");
    }
    lowest = std::min(lowest, target);
  }
}

DiagonalSet BuildEdges(int n, const BlockerStructure& st) {
  ValidateStructure(n, st);
  DiagonalSet out(n);
  for (int t = 0; t <= st.m; ++t) {
    out.Insert(Diagonal::Make(n, Mod(st.a + t, n), Mod(st.a + t + 2, n)));
  }
  for (std::size_t j = 0; j < st.beams.size(); ++j) {
    const int outer = st.a + st.m + 3 + static_cast<int>(j);
    out.Insert(Diagonal::Make(n, Mod(outer, n), Mod(st.a + st.beams[j], n)));
  }
  return out;
}

DiagonalSet EarsOf(const DiagonalSet& b) {
  DiagonalSet out(b.n());
  for (const Diagonal& d : b.Diagonals()) {
    if (IsEarCover(b.n(), d)) out.Insert(d);
  }
  return out;
}

bool IsBlockingSet(const DiagonalSet& b, BlockingMethod method) {
  if (method == BlockingMethod::kDp) {
    return !ContainsTriangulation(b.Complement()).has_value();
  }
  if (b.n() > 12) throw Error("exhaustive blocking test requires n <= 12");
  bool blocking = true;
  // The walk cannot be aborted early; n <= 12 keeps it cheap regardless.
  ForEachTriangulation(b.n(), [&](const DiagonalSet& t) {
    if (blocking && !t.Intersects(b)) blocking = false;
  });
  return blocking;
}

bool IsBlocker(const DiagonalSet& b) {
  return b.Size() == b.n() - 2 && IsBlockingSet(b);
}

std::string ToString(StructureViolation v) {
  switch (v) {
    case StructureViolation::kNone: return "none";
    case StructureViolation::kNoEars: return "no_ear_covers";
    case StructureViolation::kTooFewEars: return "too_few_ear_covers";
    case StructureViolation::kTooManyEars: return "too_many_ear_covers";
    case StructureViolation::kEarsNotContiguous: return "ear_covers_not_contiguous";
    case StructureViolation::kEdgeNotBeam: return "edge_not_a_beam";
    case StructureViolation::kVertexWithMultipleBeams: return "vertex_with_multiple_beams";
    case StructureViolation::kVertexWithoutBeam: return "vertex_without_beam";
    case StructureViolation::kBeamsCross: return "beams_cross";
  }
  return "unknown";
}

StructureParse ParseStructure(const DiagonalSet& b) {
  const int n = b.n();
  StructureParse result;
  auto fail = [&](StructureViolation v, std::string detail) {
    result.violation = v;
    result.detail = std::move(detail);
    return result;
  };

  // has_ear[t] <=> (t, t+2) is in b.
  std::vector<bool> has_ear(n, false);
  int ear_count = 0;
  for (const Diagonal& d : EarsOf(b).Diagonals()) {
    const int start = Mod(CoveredVertex(n, d) - 1, n);
    has_ear[start] = true;
    ++ear_count;
  }
  if (ear_count == 0) return fail(StructureViolation::kNoEars, "no ear-covers");
  if (ear_count == n) {
    return fail(StructureViolation::kTooManyEars, "all n ear-covers present");
  }
  int run_start = -1;
  int runs = 0;
  for (int t = 0; t < n; ++t) {
    if (has_ear[t] && !has_ear[Mod(t - 1, n)]) {
      ++runs;
      if (run_start < 0) run_start = t;
    }
  }
  if (runs > 1) {
    return fail(StructureViolation::kEarsNotContiguous,
                std::to_string(runs) + " separate runs of ear-covers");
  }
  if (ear_count < 2) {
    return fail(StructureViolation::kTooFewEars, "only one ear-cover");
  }
  if (ear_count > n - 2) {
    return fail(StructureViolation::kTooManyEars,
                std::to_string(ear_count) + " ear-covers");
  }

  const int a = run_start;
  const int m = ear_count - 1;
  const int beam_count = n - 3 - m;
  std::vector<int> beams(beam_count, 0);
  std::vector<Diagonal> beam_edges(beam_count);
  for (const Diagonal& d : b.Diagonals()) {
    if (IsEarCover(n, d)) continue;
    const int u = Mod(d.i - a, n);
    const int v = Mod(d.j - a, n);
    const int inner = std::min(u, v);
    const int outer = std::max(u, v);
    if (inner < 1 || inner > m + 1 || outer < m + 3) {
      return fail(StructureViolation::kEdgeNotBeam,
                  ToString(d) + " does not join an outer vertex to the net interior");
    }
    const int j = outer - (m + 2);
    if (beams[j - 1] != 0) {
      return fail(StructureViolation::kVertexWithMultipleBeams,
                  "vertex " + std::to_string(Mod(a + outer, n)) +
                      " carries more than one beam");
    }
    beams[j - 1] = inner;
    beam_edges[j - 1] = d;
  }
  for (int j = 0; j < beam_count; ++j) {
    if (beams[j] == 0) {
      return fail(StructureViolation::kVertexWithoutBeam,
                  "vertex " + std::to_string(Mod(a + m + 3 + j, n)) +
                      " carries no beam");
    }
  }
  for (int j = 0; j < beam_count; ++j) {
    for (int k = j + 1; k < beam_count; ++k) {
      if (std::abs(beams[j] - beams[k]) >= 2 &&
          Crosses(beam_edges[j], beam_edges[k])) {
        return fail(StructureViolation::kBeamsCross,
                    ToString(beam_edges[j]) + " crosses " +
                        ToString(beam_edges[k]));
      }
    }
  }
  result.structure = BlockerStructure{a, m, std::move(beams)};
  return result;
}

std::string ToString(Observation o) {
  switch (o) {
    case Observation::kNoIsolatedVertex: return "no_isolated_vertex";
    case Observation::kHighDegreeHasEarCover: return "high_degree_has_ear_cover";
    case Observation::kEdgeHasCoveredEndpoint: return "edge_has_covered_endpoint";
    case Observation::kAtLeastTwoEarCovers: return "at_least_two_ear_covers";
  }
  return "unknown";
}

std::vector<ObservationResult> ObservationChecks(const DiagonalSet& b) {
  const int n = b.n();
  const std::vector<int> degree = Degrees(b);
  auto covered = [&](int v) { return b.Contains(EarCoverOf(n, v)); };

  ObservationResult isolated;
  isolated.observation = Observation::kNoIsolatedVertex;
  for (int v = 0; v < n && isolated.passed; ++v) {
    if (degree[v] == 0) {
      isolated.passed = false;
      isolated.vertex = v;
    }
  }

  ObservationResult high_degree;
  high_degree.observation = Observation::kHighDegreeHasEarCover;
  for (int v = 0; v < n && high_degree.passed; ++v) {
    if (degree[v] >= 2 && !covered(v)) {
      high_degree.passed = false;
      high_degree.vertex = v;
    }
  }

  ObservationResult endpoint;
  endpoint.observation = Observation::kEdgeHasCoveredEndpoint;
  for (const Diagonal& d : b.Diagonals()) {
    if (!covered(d.i) && !covered(d.j)) {
      endpoint.passed = false;
      endpoint.edge = d;
      break;
    }
  }

  ObservationResult ears;
  ears.observation = Observation::kAtLeastTwoEarCovers;
  const int ear_count = EarsOf(b).Size();
  if (ear_count < 2) {
    ears.passed = false;
    ears.ear_count = ear_count;
  }
  return {isolated, high_degree, endpoint, ears};
}

BlockerReport VerifyBlocker(const DiagonalSet& b) {
  BlockerReport report;
  report.n = b.n();
  report.size = b.Size();
  report.is_minimum_size = report.size == b.n() - 2;
  report.is_blocking = IsBlockingSet(b);
  report.structure = ParseStructure(b);
  report.observations = ObservationChecks(b);
  return report;
}

void ForEachBeamSequence(
    int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  CheckPolygonSize(n);
  if (m < 1 || m > n - 3) throw Error("net parameter m out of range");
  const int length = n - 3 - m;
  std::vector<int> seq;
  seq.reserve(length);
  // Choosing i_k <= 1 + min(i_1..i_{k-1}) keeps every prefix admissible.
  std::function<void(int)> extend = [&](int lowest) {
    if (static_cast<int>(seq.size()) == length) {
      visit(seq);
      return;
    }
    const int cap = std::min(m + 1, lowest + 1);
    for (int target = 1; target <= cap; ++target) {
      seq.push_back(target);
      extend(std::min(lowest, target));
      seq.pop_back();
    }
  };
  extend(m);  // cap for i_1 is then m+1
}

std::vector<DiagonalSet> EnumerateBlockers(int n, bool up_to_rotation) {
  CheckPolygonSize(n);
  std::set<DiagonalSet, LexLessFn> seen;
  for (int m = 1; m <= n - 3; ++m) {
    ForEachBeamSequence(n, m, [&](const std::vector<int>& beams) {
      const DiagonalSet base = BuildEdges(n, BlockerStructure{0, m, beams});
      if (up_to_rotation) {
        seen.insert(CanonicalRotation(base).first);
        return;
      }
      for (int a = 0; a < n; ++a) seen.insert(Rotate(n, a, base));
    });
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Depth-first subset scan in increasing diagonal index. Triangulations are
// sorted by their highest diagonal index; once the scan has moved past that
// index, a triangulation not yet met can never be met and the branch dies.
class SubsetScanner {
 public:
  SubsetScanner(int n, std::vector<std::uint64_t> triangulations)
      : n_(n),
        size_(n - 2),
        bits_(DiagonalCount(n)),
        triangulations_(std::move(triangulations)) {
    std::sort(triangulations_.begin(), triangulations_.end(),
              [](std::uint64_t x, std::uint64_t y) {
                return std::bit_width(x) < std::bit_width(y);
              });
    // settled_[p]: number of triangulations whose diagonals all have index < p.
    settled_.assign(bits_ + 1, 0);
    for (int p = 0; p <= bits_; ++p) {
      int count = 0;
      while (count < std::ssize(triangulations_) &&
             static_cast<int>(std::bit_width(triangulations_[count])) <= p) {
        ++count;
      }
      settled_[p] = count;
    }
  }

  std::vector<DiagonalSet> Run() {
    Scan(0, 0, 0, 0);
    return std::move(found_);
  }

 private:
  void Scan(int pos, int chosen, std::uint64_t mask, int checked) {
    const int limit = settled_[pos];
    for (int t = checked; t < limit; ++t) {
      if ((triangulations_[t] & mask) == 0) return;
    }
    if (chosen == size_) {
      for (int t = limit; t < static_cast<int>(triangulations_.size()); ++t) {
        if ((triangulations_[t] & mask) == 0) return;
      }
      found_.push_back(DiagonalSet::FromMask(n_, mask));
      return;
    }
    for (int index = pos; index <= bits_ - (size_ - chosen); ++index) {
      Scan(index + 1, chosen + 1, mask | (std::uint64_t{1} << index), limit);
    }
  }

  int n_;
  int size_;
  int bits_;
  std::vector<std::uint64_t> triangulations_;
  std::vector<int> settled_;
  std::vector<DiagonalSet> found_;
};

}  // namespace

std::vector<DiagonalSet> BruteForceBlockers(int n, bool allow_large) {
  CheckPolygonSize(n);
  if (n > 12 || (n > kMaxBruteForceSize && !allow_large)) {
    throw Error("brute-force blocker search refused for n = " +
                std::to_string(n) + " (limit " +
                std::to_string(kMaxBruteForceSize) + ")");
  }
  std::vector<DiagonalSet> found =
      SubsetScanner(n, TriangulationMasks(n)).Run();
  std::sort(found.begin(), found.end(), LexLess);
  return found;
}

std::vector<DiagonalSet> DistinctUpToRotation(
    const std::vector<DiagonalSet>& sets) {
  std::set<DiagonalSet, LexLessFn> seen;
  for (const DiagonalSet& s : sets) seen.insert(CanonicalRotation(s).first);
  return {seen.begin(), seen.end()};
}

}  // namespace polyblock
