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

#include <algorithm>
#include <bit>
#include <cctype>

namespace polyblock {
namespace {

int Mod(int v, int n) { return ((v % n) + n) % n; }

// Index of the first diagonal whose smaller endpoint is i.
int RowOffset(int n, int i) {
  if (i == 0) return 0;
  // Row 0 holds n-3 entries, row r >= 1 holds n-r-2.
  const int rows = i - 1;
  return (n - 3) + rows * (n - 2) - rows * (rows + 1) / 2;
}

}  // namespace

void CheckPolygonSize(int n) {
  if (n < kMinPolygonSize) {
    throw Error("polygon size must be at least 4, got " + std::to_string(n));
  }
}

int DiagonalCount(int n) { return n * (n - 3) / 2; }

bool IsValidDiagonal(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  const int gap = a < b ? b - a : a - b;
  return gap >= 2 && gap <= n - 2;
}

Diagonal Diagonal::Make(int n, int a, int b) {
  if (!IsValidDiagonal(n, a, b)) {
    throw Error("(" + std::to_string(a) + "," + std::to_string(b) +
                ") is not a diagonal of a " + std::to_string(n) + "-gon");
  }
  return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

int DiagonalIndex(int n, Diagonal d) {
  return RowOffset(n, d.i) + (d.j - d.i - 2);
}

Diagonal DiagonalAt(int n, int index) {
  if (index < 0 || index >= DiagonalCount(n)) {
    throw Error("diagonal index out of range: " + std::to_string(index));
  }
  int i = 0;
  while (i + 1 <= n - 3 && RowOffset(n, i + 1) <= index) ++i;
  return Diagonal{i, i + 2 + (index - RowOffset(n, i))};
}

int DiagonalOrder(int n, Diagonal d) {
  if (!IsValidDiagonal(n, d.i, d.j)) {
    throw Error("invalid diagonal " + ToString(d));
  }
  const int gap = d.j - d.i;
  return std::min(gap, n - gap);
}

bool IsEarCover(int n, Diagonal d) { return DiagonalOrder(n, d) == 2; }

int CoveredVertex(int n, Diagonal d) {
  if (!IsEarCover(n, d)) {
    throw Error(ToString(d) + " is not an ear-cover");
  }
  return d.j - d.i == 2 ? d.i + 1 : Mod(d.j + 1, n);
}

Diagonal EarCoverOf(int n, int v) {
  return Diagonal::Make(n, Mod(v - 1, n), Mod(v + 1, n));
}

bool Crosses(Diagonal a, Diagonal b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) ||
         (b.i < a.i && a.i < b.j && b.j < a.j);
}

std::string ToString(Diagonal d) {
  return std::to_string(d.i) + "-" + std::to_string(d.j);
}

namespace {

// Parses one "i-j" token starting at text[pos]; advances pos past it.
Diagonal ParseToken(int n, std::string_view text, std::size_t& pos,
                    std::size_t base) {
  auto skip_spaces = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto read_int = [&]() -> int {
    skip_spaces();
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("vertex label too large", base + start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected vertex label", base + start);
    return static_cast<int>(value);
  };
  const std::size_t token_start = pos;
  const int a = read_int();
  skip_spaces();
  if (pos >= text.size() || text[pos] != '-') {
    throw ParseError("expected '-'", base + pos);
  }
  ++pos;
  const int b = read_int();
  skip_spaces();
  if (!IsValidDiagonal(n, a, b)) {
    throw ParseError("not a diagonal of a " + std::to_string(n) + "-gon",
                     base + token_start);
  }
  return Diagonal::Make(n, a, b);
}

}  // namespace

Diagonal ParseDiagonal(int n, std::string_view text) {
  std::size_t pos = 0;
  Diagonal d = ParseToken(n, text, pos, 0);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return d;
}

DiagonalSet::DiagonalSet(int n) : n_(n) {
  CheckPolygonSize(n);
  words_.assign((DiagonalCount(n) + 63) / 64, 0);
}

DiagonalSet DiagonalSet::All(int n) {
  DiagonalSet s(n);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.TrimTail();
  return s;
}

DiagonalSet DiagonalSet::FromMask(int n, std::uint64_t mask) {
  DiagonalSet s(n);
  if (DiagonalCount(n) > 64) throw Error("mask form requires n <= 12");
  s.words_[0] = mask;
  s.TrimTail();
  if (s.words_[0] != mask) throw Error("mask has bits beyond the diagonal count");
  return s;
}

DiagonalSet DiagonalSet::FromDiagonals(int n, const std::vector<Diagonal>& ds) {
  DiagonalSet s(n);
  for (const Diagonal& d : ds) s.Insert(Diagonal::Make(n, d.i, d.j));
  return s;
}

DiagonalSet DiagonalSet::Parse(int n, std::string_view text) {
  DiagonalSet s(n);
  std::size_t pos = 0;
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == text.size()) return s;
  while (true) {
    s.Insert(ParseToken(n, text, pos, 0));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return s;
}

int DiagonalSet::Size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool DiagonalSet::Empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool DiagonalSet::ContainsIndex(int index) const {
  return (words_[index / 64] >> (index % 64)) & 1u;
}

bool DiagonalSet::Contains(Diagonal d) const {
  if (!IsValidDiagonal(n_, d.i, d.j)) return false;
  return ContainsIndex(DiagonalIndex(n_, Diagonal::Make(n_, d.i, d.j)));
}

void DiagonalSet::Insert(Diagonal d) {
  const int index = DiagonalIndex(n_, Diagonal::Make(n_, d.i, d.j));
  words_[index / 64] |= std::uint64_t{1} << (index % 64);
}

void DiagonalSet::Erase(Diagonal d) {
  const int index = DiagonalIndex(n_, Diagonal::Make(n_, d.i, d.j));
  words_[index / 64] &= ~(std::uint64_t{1} << (index % 64));
}

std::vector<int> DiagonalSet::Indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Diagonal> DiagonalSet::Diagonals() const {
  std::vector<Diagonal> out;
  for (int index : Indices()) out.push_back(DiagonalAt(n_, index));
  return out;
}

std::uint64_t DiagonalSet::Mask() const {
  if (DiagonalCount(n_) > 64) throw Error("mask form requires n <= 12");
  return words_[0];
}

void DiagonalSet::CheckSameN(const DiagonalSet& other) const {
  if (n_ != other.n_) throw Error("diagonal sets over different polygons");
}

void DiagonalSet::TrimTail() {
  const int bits = DiagonalCount(n_) % 64;
  if (bits != 0) words_.back() &= (std::uint64_t{1} << bits) - 1;
}

DiagonalSet DiagonalSet::operator|(const DiagonalSet& other) const {
  CheckSameN(other);
  DiagonalSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

DiagonalSet DiagonalSet::operator&(const DiagonalSet& other) const {
  CheckSameN(other);
  DiagonalSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

DiagonalSet DiagonalSet::operator-(const DiagonalSet& other) const {
  CheckSameN(other);
  DiagonalSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

DiagonalSet DiagonalSet::Complement() const {
  return All(n_) - *this;
}

bool DiagonalSet::Intersects(const DiagonalSet& other) const {
  CheckSameN(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool DiagonalSet::IsSubsetOf(const DiagonalSet& other) const {
  CheckSameN(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::string DiagonalSet::ToString() const {
  std::string out;
  for (const Diagonal& d : Diagonals()) {
    if (!out.empty()) out += ',';
    out += polyblock::ToString(d);
  }
  return out;
}

bool LexLess(const DiagonalSet& a, const DiagonalSet& b) {
  const std::vector<int> ia = a.Indices();
  const std::vector<int> ib = b.Indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(),
                                      ib.end());
}

Diagonal Rotate(int n, int k, Diagonal d) {
  return Diagonal::Make(n, Mod(d.i + k, n), Mod(d.j + k, n));
}

DiagonalSet Rotate(int n, int k, const DiagonalSet& s) {
  DiagonalSet out(n);
  for (const Diagonal& d : s.Diagonals()) out.Insert(Rotate(n, k, d));
  return out;
}

std::pair<DiagonalSet, int> CanonicalRotation(const DiagonalSet& s) {
  const int n = s.n();
  DiagonalSet best = s;
  int best_k = 0;
  for (int k = 1; k < n; ++k) {
    DiagonalSet r = Rotate(n, k, s);
    if (LexLess(r, best)) {
      best = std::move(r);
      best_k = k;
    }
  }
  return {best, best_k};
}

ReducedPolygon RemoveVertex(int n, int v, const DiagonalSet& s) {
  if (n <= kMinPolygonSize) {
    throw Error("cannot delete a vertex from a 4-gon");
  }
  if (v < 0 || v >= n) throw Error("vertex out of range");
  auto relabel = [v](int w) { return w > v ? w - 1 : w; };
  ReducedPolygon out{n - 1, DiagonalSet(n - 1)};
  for (const Diagonal& d : s.Diagonals()) {
    if (d.i == v || d.j == v) continue;
    const int a = relabel(d.i);
    const int b = relabel(d.j);
    if (IsValidDiagonal(n - 1, a, b)) out.diagonals.Insert(Diagonal{a, b});
  }
  return out;
}

}  // namespace polyblock
