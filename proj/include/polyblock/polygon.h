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

#ifndef POLYBLOCK_POLYGON_H_
#define POLYBLOCK_POLYGON_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Vertex/diagonal model of a convex n-gon with vertices labelled 0..n-1 in
// cyclic order. Every set of diagonals is a DiagonalSet, a bit vector indexed
// by the lexicographic position of (i, j) among the valid pairs with i < j.
//
// Index layout (stable, used by every serialization): for n = 6 the order is
//   0-2 0-3 0-4 1-3 1-4 1-5 2-4 2-5 3-5
// i.e. row i lists j = i+2 .. n-1, except row 0 which stops at n-2.

namespace polyblock {

inline constexpr int kMinPolygonSize = 4;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; position() is the 0-based offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Throws Error unless n >= 4.
void CheckPolygonSize(int n);

// Number of diagonals of a convex n-gon, n(n-3)/2.
int DiagonalCount(int n);

// A chord of the polygon, stored with i < j.
struct Diagonal {
  int i = 0;
  int j = 0;

  // Canonicalizes the endpoint order and validates against n.
  static Diagonal Make(int n, int a, int b);

  auto operator<=>(const Diagonal&) const = default;
};

bool IsValidDiagonal(int n, int a, int b);

int DiagonalIndex(int n, Diagonal d);
Diagonal DiagonalAt(int n, int index);

// min(j - i, n - (j - i)); always in [2, n/2] for a diagonal.
int DiagonalOrder(int n, Diagonal d);
bool IsEarCover(int n, Diagonal d);
// The vertex strictly inside the short arc of an ear-cover.
int CoveredVertex(int n, Diagonal d);
// The ear-cover (v-1, v+1) that covers v.
Diagonal EarCoverOf(int n, int v);

// Strict interleaving of endpoints; a shared endpoint is not a crossing.
bool Crosses(Diagonal a, Diagonal b);

std::string ToString(Diagonal d);
Diagonal ParseDiagonal(int n, std::string_view text);

class DiagonalSet {
 public:
  explicit DiagonalSet(int n);

  static DiagonalSet All(int n);
  // Requires DiagonalCount(n) <= 64.
  static DiagonalSet FromMask(int n, std::uint64_t mask);
  static DiagonalSet FromDiagonals(int n, const std::vector<Diagonal>& ds);
  // Comma-separated "i-j" list; empty text is the empty set.
  static DiagonalSet Parse(int n, std::string_view text);

  int n() const { return n_; }
  int Size() const;
  bool Empty() const;
  bool Contains(Diagonal d) const;
  bool ContainsIndex(int index) const;
  void Insert(Diagonal d);
  void Erase(Diagonal d);

  // Members in index order.
  std::vector<Diagonal> Diagonals() const;
  std::vector<int> Indices() const;
  // Requires DiagonalCount(n) <= 64.
  std::uint64_t Mask() const;

  DiagonalSet operator|(const DiagonalSet& other) const;
  DiagonalSet operator&(const DiagonalSet& other) const;
  DiagonalSet operator-(const DiagonalSet& other) const;
  DiagonalSet Complement() const;
  bool Intersects(const DiagonalSet& other) const;
  bool IsSubsetOf(const DiagonalSet& other) const;

  std::string ToString() const;

  bool operator==(const DiagonalSet& other) const = default;

 private:
  void CheckSameN(const DiagonalSet& other) const;
  void TrimTail();

  int n_;
  std::vector<std::uint64_t> words_;
};

// Orders sets by their ascending member lists compared lexicographically.
// This is the tie-break used for canonical rotations.
bool LexLess(const DiagonalSet& a, const DiagonalSet& b);

struct LexLessFn {
  bool operator()(const DiagonalSet& a, const DiagonalSet& b) const {
    return LexLess(a, b);
  }
};

// Maps every vertex v to v + k (mod n).
Diagonal Rotate(int n, int k, Diagonal d);
DiagonalSet Rotate(int n, int k, const DiagonalSet& s);

// The LexLess-least rotated image and the smallest offset producing it.
std::pair<DiagonalSet, int> CanonicalRotation(const DiagonalSet& s);

struct ReducedPolygon {
  int n;
  DiagonalSet diagonals;
};

// Deletes vertex v, closes the gap by relabelling w > v to w - 1, drops edges
// incident to v and chords that become boundary edges of the (n-1)-gon.
ReducedPolygon RemoveVertex(int n, int v, const DiagonalSet& s);

}  // namespace polyblock

#endif  // POLYBLOCK_POLYGON_H_
