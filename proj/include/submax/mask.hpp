#pragma once

#include <cstdint>
#include <string>

namespace submax {

using ElementId = uint32_t;

// A subset of a ground set with at most 128 elements; bit i is element i.
// Comparison order is the numeric value of the 128-bit word, which fixes the
// iteration order of every map keyed by masks.
struct SubsetMask {
  uint64_t lo = 0;
  uint64_t hi = 0;

  static constexpr int kMaxElements = 128;

  static SubsetMask single(ElementId u) {
    SubsetMask m;
    m.set(u);
    return m;
  }

  // Elements [0, n).
  static SubsetMask first_n(int n) { return range(0, n); }

  // Elements [a, b).
  static SubsetMask range(int a, int b) {
    SubsetMask m;
    for (int i = a; i < b; ++i) m.set(static_cast<ElementId>(i));
    return m;
  }

  void set(ElementId u) {
    if (u < 64)
      lo |= (uint64_t{1} << u);
    else
      hi |= (uint64_t{1} << (u - 64));
  }

  void reset(ElementId u) {
    if (u < 64)
      lo &= ~(uint64_t{1} << u);
    else
      hi &= ~(uint64_t{1} << (u - 64));
  }

  bool test(ElementId u) const {
    if (u < 64) return (lo >> u) & 1;
    return (hi >> (u - 64)) & 1;
  }

  int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }

  bool empty() const { return lo == 0 && hi == 0; }

  bool subset_of(const SubsetMask& o) const {
    return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
  }

  bool contains(const SubsetMask& o) const { return o.subset_of(*this); }

  bool intersects(const SubsetMask& o) const {
    return (lo & o.lo) != 0 || (hi & o.hi) != 0;
  }

  // Smallest element, or -1 when empty.
  int lowest() const {
    if (lo) return __builtin_ctzll(lo);
    if (hi) return 64 + __builtin_ctzll(hi);
    return -1;
  }

  // Smallest element strictly above u, or -1.
  int next_above(int u) const {
    for (int i = u + 1; i < kMaxElements; ++i)
      if (test(static_cast<ElementId>(i))) return i;
    return -1;
  }

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) {
    a.lo |= b.lo;
    a.hi |= b.hi;
    return a;
  }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) {
    a.lo &= b.lo;
    a.hi &= b.hi;
    return a;
  }
  // Set difference.
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) {
    a.lo &= ~b.lo;
    a.hi &= ~b.hi;
    return a;
  }
  SubsetMask& operator|=(const SubsetMask& b) {
    lo |= b.lo;
    hi |= b.hi;
    return *this;
  }
  SubsetMask& operator&=(const SubsetMask& b) {
    lo &= b.lo;
    hi &= b.hi;
    return *this;
  }
  SubsetMask& operator-=(const SubsetMask& b) {
    lo &= ~b.lo;
    hi &= ~b.hi;
    return *this;
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }
  friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.lo < b.lo;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    uint64_t w = lo;
    while (w) {
      fn(static_cast<ElementId>(__builtin_ctzll(w)));
      w &= w - 1;
    }
    w = hi;
    while (w) {
      fn(static_cast<ElementId>(64 + __builtin_ctzll(w)));
      w &= w - 1;
    }
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](ElementId u) {
      if (!first) s += ",";
      s += std::to_string(u);
      first = false;
    });
    s += "}";
    return s;
  }
};

}  // namespace submax
