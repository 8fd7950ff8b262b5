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

#include <utility>

namespace polyblock {

bool IsTriangulation(const DiagonalSet& s) {
  const int n = s.n();
  if (s.Size() != n - 3) return false;
  const std::vector<Diagonal> ds = s.Diagonals();
  for (std::size_t a = 0; a < ds.size(); ++a) {
    for (std::size_t b = a + 1; b < ds.size(); ++b) {
      if (Crosses(ds[a], ds[b])) return false;
    }
  }
  return true;
}

BigInt CatalanNumber(int m) {
  if (m < 0) throw Error("Catalan index must be non-negative");
  // C(k+1) = C(k) * 2(2k+1) / (k+2), exact at every step.
  BigInt c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

namespace {

class TriangulationWalker {
 public:
  TriangulationWalker(int n, const std::function<void(const DiagonalSet&)>& visit)
      : n_(n), visit_(visit), current_(n) {}

  void Run() {
    pending_.push_back({0, n_ - 1});
    Step();
  }

 private:
  // Triangulates the first pending interval, then recurses on the rest.
  void Step() {
    if (pending_.empty()) {
      visit_(current_);
      return;
    }
    const auto [lo, hi] = pending_.back();
    pending_.pop_back();
    for (int apex = lo + 1; apex < hi; ++apex) {
      const std::size_t depth = pending_.size();
      const bool left = apex - lo >= 2;
      const bool right = hi - apex >= 2;
      if (left) current_.Insert(Diagonal{lo, apex});
      if (right) current_.Insert(Diagonal{apex, hi});
      // Right half is pushed first so the left half is expanded first.
      if (right) pending_.push_back({apex, hi});
      if (left) pending_.push_back({lo, apex});
      Step();
      pending_.resize(depth);
      if (left) current_.Erase(Diagonal{lo, apex});
      if (right) current_.Erase(Diagonal{apex, hi});
    }
    pending_.push_back({lo, hi});
  }

  int n_;
  const std::function<void(const DiagonalSet&)>& visit_;
  DiagonalSet current_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

void ForEachTriangulation(
    int n, const std::function<void(const DiagonalSet&)>& visit) {
  CheckPolygonSize(n);
  TriangulationWalker(n, visit).Run();
}

std::vector<DiagonalSet> AllTriangulations(int n) {
  std::vector<DiagonalSet> out;
  ForEachTriangulation(n, [&](const DiagonalSet& t) { out.push_back(t); });
  return out;
}

std::vector<std::uint64_t> TriangulationMasks(int n) {
  if (DiagonalCount(n) > 64) throw Error("triangulation masks require n <= 12");
  std::vector<std::uint64_t> out;
  ForEachTriangulation(n, [&](const DiagonalSet& t) { out.push_back(t.Mask()); });
  return out;
}

std::optional<DiagonalSet> ContainsTriangulation(const DiagonalSet& allowed) {
  const int n = allowed.n();
  auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

  std::vector<std::uint8_t> usable(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i + 1 < n; ++i) usable[at(i, i + 1)] = 1;
  usable[at(0, n - 1)] = 1;
  for (int index : allowed.Indices()) {
    const Diagonal d = DiagonalAt(n, index);
    usable[at(d.i, d.j)] = 1;
  }

  // apex[i][j] > 0 marks a triangulable interval and records its apex.
  std::vector<int> apex(static_cast<std::size_t>(n) * n, 0);
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len < n; ++i) {
      const int j = i + len;
      for (int k = i + 1; k < j; ++k) {
        if (!usable[at(i, k)] || !usable[at(k, j)]) continue;
        if (k - i >= 2 && apex[at(i, k)] == 0) continue;
        if (j - k >= 2 && apex[at(k, j)] == 0) continue;
        apex[at(i, j)] = k;
        break;
      }
    }
  }
  if (apex[at(0, n - 1)] == 0) return std::nullopt;

  DiagonalSet witness(n);
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    const int k = apex[at(i, j)];
    if (k - i >= 2) {
      witness.Insert(Diagonal{i, k});
      stack.push_back({i, k});
    }
    if (j - k >= 2) {
      witness.Insert(Diagonal{k, j});
      stack.push_back({k, j});
    }
  }
  return witness;
}

}  // namespace polyblock
