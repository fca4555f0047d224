#pragma once

#include <string>

#include "centracover/cgraph.hpp"

namespace centracover {

/// Gamma_Z(G) as an undirected DOT graph: one vertex per atlas entry
/// labeled "Z(<representative>) |Z|=<order>", maximal centers with a
/// doubled border, one edge line per unordered pair.
std::string dot_centralizer_graph(const CentralizerAtlas& atlas,
                                  const CentralizerGraph& graph);

/// The combined Hasse diagram of the distinct subgroups of C(G) and Z(G):
/// centralizer vertices ranked above the centers that are not themselves
/// centralizers, with an edge where a center covers into a centralizer in
/// the combined containment order.
std::string dot_hasse(const CentralizerAtlas& atlas);

}  // namespace centracover
