#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace exdir {

using Vertex = int;

// Vertices fit in one machine word: indices 0..31.
inline constexpr int kMaxVertices = 32;

/// A subset of the vertices 0..n-1, stored as a bitmask together with the
/// universe size n so complements are well defined.  Value type, immutable
/// style: mutating helpers return a new set.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    check_universe(n);
    if (n < 32 && (bits >> n) != 0)
      throw std::invalid_argument("VertexSet: bit outside universe");
  }
  explicit VertexSet(int n) : VertexSet(n, 0u) {}

  static VertexSet full(int n) {
    check_universe(n);
    return VertexSet(n, n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static VertexSet of(int n, std::initializer_list<Vertex> vs) {
    VertexSet s(n);
    for (Vertex v : vs) s = s.with(v);
    return s;
  }
  static VertexSet from_vertices(int n, const std::vector<Vertex>& vs) {
    VertexSet s(n);
    for (Vertex v : vs) s = s.with(v);
    return s;
  }
  /// Parses a comma separated vertex list such as "0,1,3".
  static VertexSet parse(int n, const std::string& text);

  int universe() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(Vertex v) const { return in_range(v) && ((bits_ >> v) & 1u); }

  VertexSet with(Vertex v) const {
    require(v);
    return VertexSet(n_, bits_ | (1u << v));
  }
  VertexSet without(Vertex v) const {
    require(v);
    return VertexSet(n_, bits_ & ~(1u << v));
  }

  VertexSet unions(const VertexSet& o) const { return VertexSet(n_, bits_ | o.bits_); }
  VertexSet intersect(const VertexSet& o) const { return VertexSet(n_, bits_ & o.bits_); }
  VertexSet difference(const VertexSet& o) const { return VertexSet(n_, bits_ & ~o.bits_); }
  VertexSet complement() const { return full(n_).difference(*this); }

  bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const VertexSet& o) const = default;

  /// Members in increasing order.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  /// Lexicographic order on the sorted member list; used for deterministic
  /// witness tie-breaking.  Note this differs from numeric mask order.
  bool lex_less(const VertexSet& o) const;

  std::string to_string() const;  // "{0,1,3}"

 private:
  static void check_universe(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("VertexSet: universe size out of range");
  }
  bool in_range(Vertex v) const { return v >= 0 && v < n_; }
  void require(Vertex v) const {
    if (!in_range(v)) throw std::invalid_argument("VertexSet: vertex out of range");
  }

  int n_ = 0;
  std::uint32_t bits_ = 0;
};

}  // namespace exdir
