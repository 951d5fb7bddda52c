#include "kkb/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "kkb/error.hpp"

namespace kkb {

GraphGround::GraphGround(int n) : n_(n) {
  if (n < 1 || n * (n - 1) / 2 > SubsetMask::kMaxWidth) {
    throw Error(ErrorCode::OutOfRange, "K_" + std::to_string(n) + " does not fit a 64-bit ground set");
  }
}

int GraphGround::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::OutOfRange, "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u > v) std::swap(u, v);
  // Edges (a, *) for a < u come first: sum_{a<u} (n-1-a).
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> GraphGround::edge(int index) const {
  if (index < 0 || index >= edge_count()) throw Error(ErrorCode::OutOfRange, "edge index out of range");
  int u = 0;
  while (index >= n_ - 1 - u) {
    index -= n_ - 1 - u;
    ++u;
  }
  return {u, u + 1 + index};
}

EdgeList cycle_graph(int k) {
  EdgeList e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return e;
}

EdgeList star_graph(int leaves) {
  EdgeList e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return e;
}

EdgeList complete_graph(int k) {
  EdgeList e;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
  return e;
}

EdgeList perfect_matching(int k) {
  EdgeList e;
  for (int i = 0; i + 1 < k; i += 2) e.emplace_back(i, i + 1);
  return e;
}

UpperSet principal(int ground_size, const SubsetMask& s) {
  if (s.width() == ground_size && s == SubsetMask::full_of(ground_size)) {
    throw Error(ErrorCode::TrivialUpperSet, "principal generator equals the ground set");
  }
  const SubsetMask gens[] = {s};
  return UpperSet::from_generators(ground_size, gens);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

bool is_forest(const GraphGround& g, std::uint64_t edges) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  for (std::uint64_t b = edges; b != 0; b &= b - 1) {
    const auto [u, v] = g.edge(std::countr_zero(b));
    const int ru = find_root(parent, u);
    const int rv = find_root(parent, v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

// Visits every k-subset of {0..n-1} as a bitmask, in increasing numeric order.
template <typename Visit>
void for_each_k_subset(int n, int k, Visit visit) {
  if (k == 0 || k > n) return;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    visit(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

UpperSet graph_connectivity(int n) {
  if (n < 3 || n > 7) throw Error(ErrorCode::OutOfRange, "connectivity family needs 3 <= n <= 7");
  const GraphGround g(n);
  std::vector<SubsetMask> trees;
  // n-1 acyclic edges on n vertices form a spanning tree.
  for_each_k_subset(g.edge_count(), n - 1, [&](std::uint64_t s) {
    if (is_forest(g, s)) trees.emplace_back(g.edge_count(), s);
  });
  return UpperSet::from_antichain(g.edge_count(), trees);
}

UpperSet subgraph_containment(int n, const EdgeList& h, std::size_t embedding_cap) {
  if (h.empty()) throw Error(ErrorCode::InvalidArgument, "pattern graph has no edges");
  int h_vertices = 0;
  for (const auto& [u, v] : h) {
    if (u < 0 || v < 0 || u == v) throw Error(ErrorCode::InvalidArgument, "bad pattern edge");
    h_vertices = std::max({h_vertices, u + 1, v + 1});
  }
  if (h_vertices > n) throw Error(ErrorCode::OutOfRange, "pattern has more vertices than K_n");
  const GraphGround g(n);
  double embeddings = 1.0;
  for (int i = 0; i < h_vertices; ++i) embeddings *= n - i;
  if (embeddings > static_cast<double>(embedding_cap)) {
    throw Error(ErrorCode::CapExceeded, "pattern has more than " + std::to_string(embedding_cap) + " embeddings");
  }
  // Walk injective maps {0..h-1} -> {0..n-1} as the h-prefixes of
  // permutations of choices, one per distinct ordered tuple.
  std::vector<SubsetMask> images;
  std::vector<int> image(static_cast<std::size_t>(h_vertices));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto place = [&](auto&& self, int depth) -> void {
    if (depth == h_vertices) {
      std::uint64_t bits = 0;
      for (const auto& [u, v] : h) {
        bits |= std::uint64_t{1} << g.edge_index(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
      }
      images.emplace_back(g.edge_count(), bits);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      image[static_cast<std::size_t>(depth)] = x;
      self(self, depth + 1);
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  place(place, 0);
  return UpperSet::from_generators(g.edge_count(), images);
}

UpperSet random_upper_set(int ground_size, int count, int max_size, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be >= 1");
  if (max_size < 1 || max_size >= ground_size) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= max_size < ground_size");
  }
  if (ground_size > kExactGroundCap) throw Error(ErrorCode::SizeLimitExceeded, "ground size above cap");
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << ground_size) - 1;
  std::vector<SubsetMask> draws;
  draws.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(draws.size()) < count) {
    const std::uint64_t bits = rng() & full;
    if (bits == 0 || std::popcount(bits) > max_size) continue;
    draws.emplace_back(ground_size, bits);
  }
  auto f = UpperSet::from_generators(ground_size, draws);
  if (f.min_count() == 0) throw Error(ErrorCode::DegenerateDraw, "antichain reduction emptied the draw");
  return f;
}

UpperSet disjoint_blocks(int blocks, int block_size) {
  if (blocks < 1 || block_size < 1) throw Error(ErrorCode::InvalidArgument, "blocks and block size must be >= 1");
  const int n = blocks * block_size;
  std::vector<SubsetMask> gens;
  for (int b = 0; b < blocks; ++b) {
    std::uint64_t bits = ((std::uint64_t{1} << block_size) - 1) << (b * block_size);
    gens.emplace_back(n, bits);
  }
  return UpperSet::from_antichain(n, gens);
}

UpperSet sunflower(int core, int petals, int petal_size) {
  if (core < 0 || petals < 1 || petal_size < 1) throw Error(ErrorCode::InvalidArgument, "bad sunflower shape");
  const int n = core + petals * petal_size;
  const std::uint64_t core_bits = (std::uint64_t{1} << core) - 1;
  std::vector<SubsetMask> gens;
  for (int i = 0; i < petals; ++i) {
    const std::uint64_t petal = ((std::uint64_t{1} << petal_size) - 1) << (core + i * petal_size);
    gens.emplace_back(n, core_bits | petal);
  }
  return UpperSet::from_antichain(n, gens);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"principal", "connectivity", "triangle",  "star",  "hamiltonian",
                                                 "matching",  "singletons",   "sunflower", "random"};
  return names;
}

UpperSet family_instance(std::string_view name, int n, std::uint64_t seed) {
  if (name == "principal") {
    // |S_n| = n inside a ground set of n + 1 elements.
    if (n < 1 || n + 1 > kExactGroundCap) throw Error(ErrorCode::OutOfRange, "principal needs 1 <= n < 30");
    return principal(n + 1, SubsetMask(n + 1, (std::uint64_t{1} << n) - 1));
  }
  if (name == "connectivity") return graph_connectivity(n);
  if (name == "triangle") {
    if (n < 3) throw Error(ErrorCode::OutOfRange, "triangle needs n >= 3");
    return subgraph_containment(n, complete_graph(3));
  }
  if (name == "star") {
    // Spanning star S_{n-1}.
    if (n < 3) throw Error(ErrorCode::OutOfRange, "star needs n >= 3");
    return subgraph_containment(n, star_graph(n - 1));
  }
  if (name == "hamiltonian") {
    if (n < 3) throw Error(ErrorCode::OutOfRange, "hamiltonian needs n >= 3");
    return subgraph_containment(n, cycle_graph(n));
  }
  if (name == "matching") {
    if (n < 4 || n % 2 != 0) throw Error(ErrorCode::OutOfRange, "matching needs even n >= 4");
    return subgraph_containment(n, perfect_matching(n));
  }
  if (name == "singletons") {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "singletons needs n >= 1");
    return disjoint_blocks(n, 1);
  }
  if (name == "sunflower") {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "sunflower needs n >= 1");
    return sunflower(1, n, 2);
  }
  if (name == "random") {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "random needs n >= 2");
    return random_upper_set(n, n, std::max(1, n / 2), seed);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::vector<NamedInstance> builtin_battery() {
  std::vector<NamedInstance> out;
  auto add = [&](std::string name, UpperSet f) { out.push_back({std::move(name), std::move(f)}); };

  for (int k = 1; k <= 6; ++k) {
    for (int extra : {1, 2, 3}) {
      const int n = k + extra;
      add("principal k=" + std::to_string(k) + " n=" + std::to_string(n),
          principal(n, SubsetMask(n, (std::uint64_t{1} << k) - 1)));
    }
  }
  for (int n = 3; n <= 6; ++n) add("connectivity n=" + std::to_string(n), graph_connectivity(n));
  for (int n = 3; n <= 6; ++n) add("triangle n=" + std::to_string(n), family_instance("triangle", n));
  for (int n = 3; n <= 6; ++n) add("star n=" + std::to_string(n), family_instance("star", n));
  for (int n = 4; n <= 6; ++n) add("hamiltonian n=" + std::to_string(n), family_instance("hamiltonian", n));
  add("matching n=4", family_instance("matching", 4));
  add("matching n=6", family_instance("matching", 6));
  for (int m = 2; m <= 8; ++m) add("singletons m=" + std::to_string(m), disjoint_blocks(m, 1));
  for (int m = 2; m <= 4; ++m) add("pairs m=" + std::to_string(m), disjoint_blocks(m, 2));
  for (int petals = 2; petals <= 5; ++petals) {
    add("sunflower core=1 petals=" + std::to_string(petals), sunflower(1, petals, 2));
    add("sunflower core=2 petals=" + std::to_string(petals), sunflower(2, petals, 1));
  }
  {
    const SubsetMask gens[] = {SubsetMask::of(4, {0}), SubsetMask::of(4, {1, 2, 3})};
    add("mixed {0},{1,2,3}", UpperSet::from_antichain(4, gens));
  }

  std::mt19937_64 shape(20240601);
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + static_cast<int>(shape() % 10);               // 3..12
    const int count = 1 + static_cast<int>(shape() % 10);           // 1..10 draws
    const int max_size = 1 + static_cast<int>(shape() % std::min(4, n - 1));  // 1..4
    const std::uint64_t seed = shape();
    add("random #" + std::to_string(i) + " n=" + std::to_string(n),
        random_upper_set(n, count, max_size, seed));
  }
  return out;
}

}  // namespace kkb
