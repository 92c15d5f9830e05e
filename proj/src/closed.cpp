#include "exdir/closed.hpp"

#include <bit>

#include "exdir/errors.hpp"

namespace exdir {

namespace {

// Distances realized from u inside the mask, as a bitset over 0..ecc(u).
std::uint64_t spectrum(const DistanceMatrix& dm, Vertex u, std::uint32_t mask) {
  std::uint64_t s = 0;
  for (std::uint32_t b = mask; b != 0; b &= b - 1)
    s |= std::uint64_t(1) << dm.dist(u, std::countr_zero(b));
  return s;
}

bool member_ok(const DistanceMatrix& dm, Vertex u, std::uint32_t mask) {
  std::uint64_t want = (std::uint64_t(1) << (dm.ecc(u) + 1)) - 1u;
  return spectrum(dm, u, mask) == want;
}

bool mask_closed(const DistanceMatrix& dm, std::uint32_t mask) {
  for (std::uint32_t b = mask; b != 0; b &= b - 1)
    if (!member_ok(dm, std::countr_zero(b), mask)) return false;
  return true;
}

// Depth-first lexicographic enumeration of size-s subsets of the allowed
// universe, optionally forced to contain one vertex.  Returns the first
// closed subset found, which by the enumeration order is the
// lexicographically smallest witness of that size.
struct SizedSearch {
  const DistanceMatrix& dm;
  int n;
  int target_size;
  std::vector<Vertex> allowed;  // ascending, ecc(u) <= target_size-1
  Vertex forced = -1;           // -1: none

  std::vector<Vertex> chosen;
  std::uint32_t chosen_mask = 0;
  bool found = false;
  std::uint32_t result = 0;

  void run() {
    chosen.clear();
    chosen_mask = 0;
    descend(0);
  }

  void descend(size_t from) {
    if (found) return;
    if (static_cast<int>(chosen.size()) == target_size) {
      if (forced >= 0 && !((chosen_mask >> forced) & 1u)) return;
      if (mask_closed(dm, chosen_mask)) {
        found = true;
        result = chosen_mask;
      }
      return;
    }
    int remaining = target_size - static_cast<int>(chosen.size());
    for (size_t i = from; i < allowed.size(); ++i) {
      if (static_cast<int>(allowed.size() - i) < remaining) return;
      Vertex v = allowed[i];
      // Once the enumeration passes the forced vertex it can never be added.
      if (forced >= 0 && v > forced && !((chosen_mask >> forced) & 1u)) return;
      chosen.push_back(v);
      chosen_mask |= 1u << v;
      if (feasible(remaining - 1)) descend(i + 1);
      chosen_mask &= ~(1u << v);
      chosen.pop_back();
      if (found) return;
    }
  }

  // Each later vertex adds at most one new distance per chosen member, so a
  // member missing more distances than there are slots left kills the branch.
  bool feasible(int slots_left) const {
    for (Vertex u : chosen) {
      std::uint64_t want = (std::uint64_t(1) << (dm.ecc(u) + 1)) - 1u;
      int missing = std::popcount(want & ~spectrum(dm, u, chosen_mask));
      if (missing > slots_left) return false;
    }
    return true;
  }
};

void check_search_cap(const DistanceMatrix& dm, int cap) {
  if (cap > kMaxSearchVertices) cap = kMaxSearchVertices;
  if (dm.n() > cap)
    throw CapError("closed-set search refused: n=" + std::to_string(dm.n()) +
                   " exceeds cap " + std::to_string(cap));
}

ClosedSearchResult search_min(const DistanceMatrix& dm, Vertex forced, int cap) {
  check_search_cap(dm, cap);
  int n = dm.n();
  int lower = (forced >= 0 ? dm.ecc(forced) : dm.radius()) + 1;
  for (int s = lower; s <= n; ++s) {
    SizedSearch search{dm, n, s, {}, forced, {}, 0, false, 0};
    for (Vertex v = 0; v < n; ++v)
      if (dm.ecc(v) + 1 <= s) search.allowed.push_back(v);
    if (static_cast<int>(search.allowed.size()) < s) continue;
    if (forced >= 0 && dm.ecc(forced) + 1 > s) continue;
    search.run();
    if (search.found)
      return {s, VertexSet(n, search.result)};
  }
  // V itself is always closed, so the loop cannot fall through.
  return {n, VertexSet::full(n)};
}

}  // namespace

bool is_closed(const DistanceMatrix& dm, const VertexSet& u_set) {
  if (u_set.empty()) throw std::invalid_argument("is_closed: the empty set is not closed");
  return mask_closed(dm, u_set.bits());
}

PeelResult peel(const DistanceMatrix& dm, const VertexSet& u_set) {
  if (u_set.empty()) throw std::invalid_argument("peel: empty input");
  int n = dm.n();
  PeelResult out{VertexSet(n), {}, std::vector<int>(n, -1)};
  std::uint32_t current = u_set.bits();
  int layer = 0;
  while (current != 0) {
    std::uint32_t escaping = 0;
    for (std::uint32_t b = current; b != 0; b &= b - 1) {
      Vertex u = std::countr_zero(b);
      if (!member_ok(dm, u, current)) escaping |= 1u << u;
    }
    if (escaping == 0) break;  // current is closed
    ++layer;
    out.layers.emplace_back(n, escaping);
    for (std::uint32_t b = escaping; b != 0; b &= b - 1)
      out.escape_depth[std::countr_zero(b)] = layer;
    current &= ~escaping;
  }
  out.core = VertexSet(n, current);
  for (std::uint32_t b = current; b != 0; b &= b - 1)
    out.escape_depth[std::countr_zero(b)] = 0;
  return out;
}

ClosedSearchResult min_closed_size(const DistanceMatrix& dm, int cap) {
  return search_min(dm, -1, cap);
}

ClosedSearchResult min_closed_containing(const DistanceMatrix& dm, Vertex v, int cap) {
  if (v < 0 || v >= dm.n()) throw std::invalid_argument("min_closed_containing: bad vertex");
  return search_min(dm, v, cap);
}

}  // namespace exdir
