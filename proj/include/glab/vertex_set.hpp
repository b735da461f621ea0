#ifndef GLAB_VERTEX_SET_HPP
#define GLAB_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "glab/errors.hpp"

namespace glab {

using Vertex = std::size_t;
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

constexpr std::size_t popcount(Mask m) noexcept { return static_cast<std::size_t>(std::popcount(m)); }

constexpr Vertex lowest_vertex(Mask m) noexcept { return static_cast<Vertex>(std::countr_zero(m)); }

// Iterates the set bits of a mask in ascending order.
class MaskIterator {
 public:
  using value_type = Vertex;
  using difference_type = std::ptrdiff_t;
  using iterator_category = std::forward_iterator_tag;

  constexpr MaskIterator() = default;
  constexpr explicit MaskIterator(Mask m) : rest_(m) {}

  constexpr Vertex operator*() const noexcept { return lowest_vertex(rest_); }
  constexpr MaskIterator& operator++() noexcept {
    rest_ &= rest_ - 1;
    return *this;
  }
  constexpr MaskIterator operator++(int) noexcept {
    auto old = *this;
    ++*this;
    return old;
  }
  constexpr bool operator==(const MaskIterator&) const = default;

 private:
  Mask rest_ = 0;
};

class MaskRange {
 public:
  constexpr explicit MaskRange(Mask m) : m_(m) {}
  constexpr MaskIterator begin() const { return MaskIterator(m_); }
  constexpr MaskIterator end() const { return MaskIterator(0); }

 private:
  Mask m_;
};

constexpr MaskRange vertices_of(Mask m) { return MaskRange(m); }

/// A subset of {0, ..., universe-1} stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  constexpr explicit VertexSet(std::size_t universe) : universe_(checked_universe(universe)) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_mask(Mask bits, std::size_t universe) {
    VertexSet s(universe);
    if ((bits & ~full_mask(universe)) != 0) {
      throw usage_error("vertex set has members outside universe of size " + std::to_string(universe));
    }
    s.bits_ = bits;
    return s;
  }

  static VertexSet full(std::size_t universe) { return from_mask(full_mask(universe), universe); }

  constexpr Mask mask() const noexcept { return bits_; }
  constexpr std::size_t universe() const noexcept { return universe_; }
  constexpr std::size_t size() const noexcept { return popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  constexpr bool contains(Vertex v) const noexcept { return v < universe_ && (bits_ & bit(v)) != 0; }

  void insert(Vertex v) {
    check(v);
    bits_ |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    bits_ &= ~bit(v);
  }

  constexpr bool is_subset_of(const VertexSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(const VertexSet& other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr MaskIterator begin() const { return MaskIterator(bits_); }
  constexpr MaskIterator end() const { return MaskIterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  // Complement within the universe.
  VertexSet complement() const { return from_mask(~bits_ & full_mask(universe_), universe_); }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a.require_same(b);
    a.bits_ &= b.bits_;
    return a;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    a.require_same(b);
    a.bits_ |= b.bits_;
    return a;
  }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    a.require_same(b);
    a.bits_ &= ~b.bits_;
    return a;
  }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  friend constexpr auto operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  static constexpr std::size_t checked_universe(std::size_t universe) {
    if (universe > kMaxVertices) throw unsupported_error("vertex universe above 64 is not supported");
    return universe;
  }
  void check(Vertex v) const {
    if (v >= universe_) {
      throw usage_error("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }
  }
  void require_same(const VertexSet& other) const {
    if (universe_ != other.universe_) throw usage_error("vertex sets over different universes");
  }

  Mask bits_ = 0;
  std::size_t universe_ = 0;
};

}  // namespace glab

#endif  // GLAB_VERTEX_SET_HPP
