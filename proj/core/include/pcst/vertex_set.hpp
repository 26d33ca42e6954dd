#ifndef PCST_VERTEX_SET_HPP
#define PCST_VERTEX_SET_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace pcst {

/// Dense internal vertex index. File-level identifiers are strings and are
/// mapped onto 0..n-1 at parse time.
using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

inline void normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

inline bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// True iff every element of `inner` is in `outer` (both sorted).
inline bool is_subset(std::span<const Vertex> inner, std::span<const Vertex> outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

inline bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

inline VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace pcst

#endif  // PCST_VERTEX_SET_HPP
