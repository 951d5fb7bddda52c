#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kkb/upper_set.hpp"

namespace kkb {

/// Edges of K_n indexed 0..C(n,2)-1 in lexicographic order of (min, max).
class GraphGround {
 public:
  explicit GraphGround(int n);

  int vertices() const noexcept { return n_; }
  int edge_count() const noexcept { return n_ * (n_ - 1) / 2; }
  int edge_index(int u, int v) const;
  std::pair<int, int> edge(int index) const;

 private:
  int n_;
};

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList cycle_graph(int k);
EdgeList star_graph(int leaves);
EdgeList complete_graph(int k);
EdgeList perfect_matching(int k);  // k/2 disjoint edges on k vertices

/// Errors: TrivialUpperSet if s is empty or the full ground set.
UpperSet principal(int ground_size, const SubsetMask& s);

/// Spanning trees of K_n as edge sets; 3 <= n <= 7 (OutOfRange otherwise).
UpperSet graph_connectivity(int n);

/// Edge sets of K_n containing a copy of H (H's vertices are 0..h-1, h <= n).
/// Errors: CapExceeded if n!/(n-h)! exceeds embedding_cap, OutOfRange,
/// InvalidArgument for empty H.
UpperSet subgraph_containment(int n, const EdgeList& h, std::size_t embedding_cap = 1'000'000);

/// `count` nonempty masks of popcount <= max_size, each uniform over such masks
/// (rejection from uniform 64-bit draws of mt19937_64), antichain-reduced.
UpperSet random_upper_set(int ground_size, int count, int max_size, std::uint64_t seed);

/// `blocks` pairwise disjoint minimals of size `block_size`.
UpperSet disjoint_blocks(int blocks, int block_size);

/// `petals` minimals sharing a common core of size `core`, each with its own
/// `petal_size` private elements.
UpperSet sunflower(int core, int petals, int petal_size);

/// Parameterised families addressable by name for sweeps and the CLI:
/// principal, connectivity, triangle, star, hamiltonian, matching,
/// singletons, sunflower, random.
const std::vector<std::string>& family_names();
UpperSet family_instance(std::string_view name, int n, std::uint64_t seed = 0);

struct NamedInstance {
  std::string name;
  UpperSet instance;
};

/// The regression battery: every named family at every n where all exact
/// quantities are computable, hand-picked edge cases, and 150 seeded random
/// antichains (ground <= 12, |F0| <= 10), 204 instances in all.
std::vector<NamedInstance> builtin_battery();

}  // namespace kkb
