#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wst {

// Hard capacity of the library: every vertex subset is one machine word.
// The exact solvers enumerate Theta(n^8) candidate sets and the oracle scans
// 2^n subsets, so instances anywhere near this bound are out of reach anyway.
inline constexpr int kMaxVertices = 64;

// A set of vertex ids in [0, kMaxVertices).
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }
  static VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  static VertexSet all(int n) {
    assert(n >= 0 && n <= kMaxVertices);
    return n == 64 ? VertexSet{~std::uint64_t{0}}
                   : VertexSet{(std::uint64_t{1} << n) - 1};
  }

  bool test(int v) const { return (bits >> v) & 1u; }
  VertexSet& set(int v) {
    assert(v >= 0 && v < kMaxVertices);
    bits |= std::uint64_t{1} << v;
    return *this;
  }
  VertexSet& reset(int v) {
    bits &= ~(std::uint64_t{1} << v);
    return *this;
  }

  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool any() const { return bits != 0; }
  int first() const { return bits ? std::countr_zero(bits) : -1; }

  bool contains(VertexSet other) const { return (other.bits & ~bits) == 0; }
  bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

  VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
  VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
  VertexSet& operator-=(VertexSet o) { bits &= ~o.bits; return *this; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t w = bits; w;) {
      int v = std::countr_zero(w);
      w &= w - 1;
      f(v);
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  // Lexicographic order on the ascending vertex-id sequences, so {0,2} < {1}
  // and {0} < {0,1}. Used for deterministic tie-breaking.
  bool lex_less(VertexSet other) const {
    std::uint64_t a = bits, b = other.bits;
    while (a && b) {
      int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return !a && b;
  }
};

}  // namespace wst
