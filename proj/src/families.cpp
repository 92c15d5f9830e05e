#include "exdir/families.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

#include "exdir/errors.hpp"

namespace exdir {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("family spec needs 'name:args': " + text);
  std::string name = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  FamilySpec spec;
  if (name == "path" || name == "cycle" || name == "complete" || name == "star") {
    spec.family = name == "path"       ? Family::kPath
                  : name == "cycle"    ? Family::kCycle
                  : name == "complete" ? Family::kComplete
                                       : Family::kStar;
    spec.a = parse_int(args, name + " size");
  } else if (name == "lattice") {
    auto parts = split(args, 'x');
    if (parts.size() != 2) throw ParseError("lattice spec needs NxM: " + text);
    spec.family = Family::kLattice;
    spec.a = parse_int(parts[0], "lattice n");
    spec.b = parse_int(parts[1], "lattice m");
  } else if (name == "lollipop") {
    auto parts = split(args, ',');
    if (parts.size() != 2) throw ParseError("lollipop spec needs b,k: " + text);
    spec.family = Family::kLollipop;
    spec.a = parse_int(parts[0], "lollipop b");
    spec.b = parse_int(parts[1], "lollipop k");
  } else if (name == "spider") {
    auto parts = split(args, ';');
    if (parts.size() != 2) throw ParseError("spider spec needs h;l1,l2,...: " + text);
    spec.family = Family::kSpider;
    spec.a = parse_int(parts[0], "spider handle");
    for (const auto& leg : split(parts[1], ','))
      spec.legs.push_back(parse_int(leg, "spider leg"));
    if (spec.legs.empty()) throw ParseError("spider needs at least one leg: " + text);
  } else if (name == "randtree") {
    auto parts = split(args, ',');
    if (parts.size() != 2) throw ParseError("randtree spec needs n,seed: " + text);
    spec.family = Family::kRandTree;
    spec.a = parse_int(parts[0], "randtree n");
    spec.seed = static_cast<std::uint32_t>(parse_int(parts[1], "randtree seed"));
  } else {
    throw ParseError("unknown family: " + name);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (family) {
    case Family::kPath: return "path:" + std::to_string(a);
    case Family::kCycle: return "cycle:" + std::to_string(a);
    case Family::kComplete: return "complete:" + std::to_string(a);
    case Family::kStar: return "star:" + std::to_string(a);
    case Family::kLattice: return "lattice:" + std::to_string(a) + "x" + std::to_string(b);
    case Family::kLollipop: return "lollipop:" + std::to_string(a) + "," + std::to_string(b);
    case Family::kSpider: {
      std::string out = "spider:" + std::to_string(a) + ";";
      for (size_t i = 0; i < legs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(legs[i]);
      }
      return out;
    }
    case Family::kRandTree: return "randtree:" + std::to_string(a) + "," + std::to_string(seed);
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kPath: return make_path(spec.a);
    case Family::kCycle: return make_cycle(spec.a);
    case Family::kComplete: return make_complete(spec.a);
    case Family::kStar: return make_star(spec.a);
    case Family::kLattice: return make_lattice(spec.a, spec.b);
    case Family::kLollipop: return make_lollipop(spec.a, spec.b);
    case Family::kSpider: return make_spider(spec.a, spec.legs);
    case Family::kRandTree: return make_random_tree(spec.a, spec.seed);
  }
  throw std::invalid_argument("bad family");
}

Graph make_path(int n) {
  require(n >= 1, "path: n >= 1 required");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle: n >= 3 required");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
  require(n >= 1, "complete: n >= 1 required");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_star(int k) {
  require(k >= 1, "star: k >= 1 required");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(k + 1, std::move(edges));
}

int lattice_index(int n, int m, int col, int row) {
  require(col >= 1 && col <= n && row >= 1 && row <= m, "lattice cell out of range");
  return (row - 1) * n + (col - 1);
}

Graph make_lattice(int n, int m) {
  require(n >= 1 && m >= 1, "lattice: n,m >= 1 required");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int row = 1; row <= m; ++row)
    for (int col = 1; col <= n; ++col) {
      if (col < n) edges.emplace_back(lattice_index(n, m, col, row), lattice_index(n, m, col + 1, row));
      if (row < m) edges.emplace_back(lattice_index(n, m, col, row), lattice_index(n, m, col, row + 1));
    }
  return Graph::from_edges(n * m, std::move(edges));
}

Graph make_lollipop(int b, int k) {
  require(b >= 2 && k >= 2 && k <= b, "lollipop: 2 <= k <= b required");
  int clique = b - k + 2;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
  for (int v = clique; v < b; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(b, std::move(edges));
}

Graph make_spider(int handle, const std::vector<int>& legs) {
  require(handle >= 0, "spider: handle >= 0 required");
  require(!legs.empty(), "spider: at least one leg required");
  for (int leg : legs) require(leg >= 1, "spider: leg lengths >= 1 required");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < handle; ++i) edges.emplace_back(i, i + 1);
  int center = handle;
  int next = handle + 1;
  for (int leg : legs) {
    Vertex prev = center;
    for (int i = 0; i < leg; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, std::move(edges));
}

Graph make_random_tree(int n, std::uint32_t seed) {
  require(n >= 1, "randtree: n >= 1 required");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = pick(rng);

  // Standard decode: repeatedly join the smallest leaf to the next code entry.
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int x : pruefer) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    --degree[leaf];
    if (--degree[x] == 1) leaves.push(x);
  }
  int u = leaves.top();
  leaves.pop();
  int v = leaves.top();
  edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace exdir
