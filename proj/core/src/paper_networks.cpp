#include <array>
#include <utility>
#include <vector>

#include "phinet/errors.hpp"
#include "phinet/netmodel.hpp"

namespace phinet {

namespace {

using Edge = std::pair<int, int>;

// Networks 2, 4 and 5 are only available as drawings. These edge sets were
// recovered by searching graphs with the published adjacency spectra; each is
// the unique match (up to isomorphism) found.
constexpr std::array<Edge, 18> kNetwork2 = {{
    {0, 4}, {0, 5}, {0, 7}, {0, 9}, {1, 3}, {1, 4}, {1, 5}, {1, 7}, {1, 9},
    {2, 3}, {2, 7}, {2, 9}, {3, 6}, {4, 6}, {5, 8}, {6, 7}, {7, 8}, {8, 9},
}};

constexpr std::array<Edge, 15> kNetwork4 = {{
    {0, 2}, {0, 3}, {0, 9}, {1, 5}, {1, 6}, {1, 9}, {2, 6}, {2, 8},
    {3, 4}, {3, 6}, {4, 7}, {4, 8}, {5, 7}, {5, 9}, {7, 8},
}};

constexpr std::array<Edge, 13> kNetwork5 = {{
    {0, 8}, {0, 9}, {1, 6}, {1, 9}, {2, 3}, {2, 4}, {3, 5},
    {3, 9}, {4, 6}, {4, 8}, {5, 7}, {6, 7}, {7, 8},
}};

constexpr int kPaperNodes = 10;

}  // namespace

AdjacencyMatrix paper_network(int id) {
  switch (id) {
    case 1:
      return build_complete(kPaperNodes);
    case 2:
      return from_edges(kPaperNodes, kNetwork2);
    case 3:
      return build_mobius_ladder(kPaperNodes);
    case 4:
      return from_edges(kPaperNodes, kNetwork4);
    case 5:
      return from_edges(kPaperNodes, kNetwork5);
    case 6:
      return build_cycle(kPaperNodes);
    default:
      throw InvalidArgument("unknown network id " + std::to_string(id) + " (expected 1..6)");
  }
}

}  // namespace phinet
