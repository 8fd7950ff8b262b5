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

#include "polyblock/polygon.h"

#include <cstdint>
#include <random>

#include "doctest.h"

namespace polyblock {
namespace {

// Exact segment intersection on integer points in convex position. Vertex v
// sits at (v, v^2) on a parabola, which visits the hull in label order.
struct Point {
  std::int64_t x, y;
};

Point Vertex(int v) { return {v, static_cast<std::int64_t>(v) * v}; }

int Orientation(Point a, Point b, Point c) {
  const std::int64_t cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (cross > 0) - (cross < 0);
}

// Proper crossing of the open segments (no shared endpoints possible here
// except identical labels, handled by the caller).
bool SegmentsCross(Diagonal d1, Diagonal d2) {
  if (d1.i == d2.i || d1.i == d2.j || d1.j == d2.i || d1.j == d2.j) return false;
  const Point a = Vertex(d1.i), b = Vertex(d1.j);
  const Point c = Vertex(d2.i), d = Vertex(d2.j);
  return Orientation(a, b, c) * Orientation(a, b, d) < 0 &&
         Orientation(c, d, a) * Orientation(c, d, b) < 0;
}

TEST_CASE("diagonal order") {
  CHECK(DiagonalOrder(12, Diagonal::Make(12, 0, 2)) == 2);
  CHECK(DiagonalOrder(6, Diagonal::Make(6, 0, 3)) == 3);
  CHECK(DiagonalOrder(10, Diagonal::Make(10, 1, 9)) == 2);
  CHECK_THROWS_AS(Diagonal::Make(6, 0, 1), Error);
  CHECK_THROWS_AS(Diagonal::Make(6, 0, 5), Error);
  CHECK_THROWS_AS(Diagonal::Make(6, 0, 6), Error);
  CHECK_THROWS_AS(DiagonalOrder(6, Diagonal{0, 1}), Error);
}

TEST_CASE("ear covers") {
  CHECK(IsEarCover(8, Diagonal::Make(8, 3, 5)));
  CHECK(CoveredVertex(8, Diagonal::Make(8, 3, 5)) == 4);
  CHECK_FALSE(IsEarCover(8, Diagonal::Make(8, 0, 4)));
  CHECK_THROWS_AS(CoveredVertex(8, Diagonal::Make(8, 0, 4)), Error);
  const Diagonal wrap = Diagonal::Make(5, 4, 1);
  CHECK(IsEarCover(5, wrap));
  CHECK(CoveredVertex(5, wrap) == 0);
  CHECK(EarCoverOf(5, 0) == wrap);
}

TEST_CASE("crossing examples") {
  CHECK(Crosses(Diagonal::Make(6, 0, 2), Diagonal::Make(6, 1, 3)));
  CHECK_FALSE(Crosses(Diagonal::Make(6, 0, 2), Diagonal::Make(6, 2, 4)));
  CHECK(Crosses(Diagonal::Make(6, 1, 4), Diagonal::Make(6, 2, 5)));
  CHECK(SegmentsCross(Diagonal::Make(6, 1, 4), Diagonal::Make(6, 2, 5)));
}

TEST_CASE("crossing agrees with the coordinate oracle for n <= 8") {
  for (int n = 4; n <= 8; ++n) {
    for (int a = 0; a < DiagonalCount(n); ++a) {
      const Diagonal da = DiagonalAt(n, a);
      CHECK_FALSE(Crosses(da, da));
      for (int b = 0; b < DiagonalCount(n); ++b) {
        const Diagonal db = DiagonalAt(n, b);
        CHECK(Crosses(da, db) == SegmentsCross(da, db));
        CHECK(Crosses(da, db) == Crosses(db, da));
        for (int k = 0; k < n; ++k) {
          CHECK(Crosses(da, db) == Crosses(Rotate(n, k, da), Rotate(n, k, db)));
        }
      }
    }
  }
}

TEST_CASE("index map is a bijection") {
  for (int n = 4; n <= 30; ++n) {
    CHECK(DiagonalCount(n) == n * (n - 3) / 2);
    int expected = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (!IsValidDiagonal(n, i, j)) continue;
        const Diagonal d{i, j};
        CHECK(DiagonalIndex(n, d) == expected);
        CHECK(DiagonalAt(n, expected) == d);
        ++expected;
      }
    }
    CHECK(expected == DiagonalCount(n));
  }
}

TEST_CASE("diagonal set basics") {
  DiagonalSet s = DiagonalSet::Parse(6, "0-2, 1-3,4-2");
  CHECK(s.Size() == 3);
  CHECK(s.ToString() == "0-2,1-3,2-4");
  CHECK(s.Contains(Diagonal{2, 4}));
  CHECK_FALSE(s.Contains(Diagonal{0, 3}));
  CHECK(DiagonalSet::Parse(6, "").Empty());
  CHECK(DiagonalSet::All(6).Size() == 9);
  CHECK(DiagonalSet::All(50).Size() == DiagonalCount(50));
  CHECK(DiagonalSet::All(50).Complement().Empty());
  CHECK((s | DiagonalSet::Parse(6, "3-5")).Size() == 4);
  CHECK((s - DiagonalSet::Parse(6, "0-2")).ToString() == "1-3,2-4");
  CHECK(s.Intersects(DiagonalSet::Parse(6, "1-3")));
  CHECK(DiagonalSet::Parse(6, "1-3").IsSubsetOf(s));
  CHECK(DiagonalSet::FromMask(6, s.Mask()) == s);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      DiagonalSet::Parse(6, text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("0-2,x") == 4);
  CHECK(position_of("0-2;1-3") == 3);
  CHECK(position_of("0-1") == 0);
  CHECK(position_of("0-2,1-9") == 4);
  CHECK(position_of("0 2") == 2);
  CHECK_THROWS_AS(ParseDiagonal(6, "0-2x"), ParseError);
}

TEST_CASE("rotation") {
  CHECK(Rotate(5, 1, DiagonalSet::Parse(5, "0-2")).ToString() == "1-3");
  CHECK(Rotate(6, 3, DiagonalSet::Parse(6, "0-3")).ToString() == "0-3");
  const auto [canonical, k] = CanonicalRotation(DiagonalSet::Parse(6, "1-3,2-4"));
  CHECK(canonical.ToString() == "0-2,1-3");
  CHECK(k == 5);
}

TEST_CASE("rotation composes to the identity and is a bijection") {
  std::mt19937_64 rng(17);
  for (int n = 4; n <= 20; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      DiagonalSet s(n);
      for (int index = 0; index < DiagonalCount(n); ++index) {
        if (rng() % 3 == 0) s.Insert(DiagonalAt(n, index));
      }
      CHECK(Rotate(n, 0, s) == s);
      DiagonalSet r = s;
      int total = 0;
      while (total < n) {
        const int k = std::min<int>(n - total, 1 + rng() % 3);
        r = Rotate(n, k, r);
        total += k;
      }
      CHECK(r == s);
      CHECK(Rotate(n, 1, s).Size() == s.Size());
      const auto [canonical, offset] = CanonicalRotation(s);
      CHECK(Rotate(n, offset, s) == canonical);
      CHECK(CanonicalRotation(Rotate(n, 1 + rng() % (n - 1), s)).first == canonical);
    }
  }
}

// Independent relabelling oracle: map every label through the cyclic gap
// closure and keep chords that are still diagonals of the (n-1)-gon.
DiagonalSet RemoveVertexOracle(int n, int v, const DiagonalSet& s) {
  DiagonalSet out(n - 1);
  for (int index = 0; index < DiagonalCount(n); ++index) {
    if (!s.ContainsIndex(index)) continue;
    const Diagonal d = DiagonalAt(n, index);
    if (d.i == v || d.j == v) continue;
    const int a = (d.i - v - 1 + n) % n;  // position after v, 0-based
    const int b = (d.j - v - 1 + n) % n;
    // Back to labels with the gap closed: position p -> (v + p) mod (n-1).
    const int la = (v + a) % (n - 1);
    const int lb = (v + b) % (n - 1);
    const int gap = std::abs(la - lb);
    if (gap >= 2 && gap <= n - 3) out.Insert(Diagonal::Make(n - 1, la, lb));
  }
  return out;
}

TEST_CASE("vertex removal") {
  auto r1 = RemoveVertex(5, 4, DiagonalSet::Parse(5, "0-2,1-3,1-4"));
  CHECK(r1.n == 4);
  CHECK(r1.diagonals.ToString() == "0-2,1-3");
  auto r2 = RemoveVertex(6, 0, DiagonalSet::Parse(6, "1-5"));
  CHECK(r2.n == 5);
  CHECK(r2.diagonals.Empty());
  auto r3 = RemoveVertex(6, 3, DiagonalSet::Parse(6, "0-2,1-4"));
  CHECK(r3.diagonals.ToString() == "0-2,1-3");
  CHECK_THROWS_AS(RemoveVertex(4, 0, DiagonalSet(4)), Error);
}

TEST_CASE("vertex removal matches the relabelling oracle") {
  std::mt19937_64 rng(5);
  for (int n = 5; n <= 12; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      DiagonalSet s(n);
      for (int index = 0; index < DiagonalCount(n); ++index) {
        if (rng() % 2) s.Insert(DiagonalAt(n, index));
      }
      for (int v = 0; v < n; ++v) {
        CHECK(RemoveVertex(n, v, s).diagonals == RemoveVertexOracle(n, v, s));
      }
    }
  }
}

}  // namespace
}  // namespace polyblock
