// Builds C5 ⊠ P4, runs the strong-product spvc theorem and cross-checks it
// with the exhaustive oracle.

#include <iostream>

#include "pvclab/pvclab.hpp"

int main() {
  using namespace pvclab;
  const Graph c5 = cycle_graph(5);
  const Graph p4 = path_graph(4);

  const TheoremReport report = strong_spvc(c5, p4);
  std::cout << report.theorem_id << " predicts " << report.predicted->to_string() << ", coloring uses "
            << report.coloring->palette_size() << " colors, " << (report.verified ? "verified" : "NOT verified")
            << " with " << report.witnesses.size() << " geodesic witnesses\n";

  OracleOptions opt;
  opt.max_order = 20;
  const OracleResult exact = brute_spvc(report.graph, opt);
  std::cout << "oracle spvc = " << exact.value << " after " << exact.colorings_examined << " colorings\n";

  std::cout << "product graph6: " << emit_graph6(report.graph) << "\n";
  return report.verified && report.predicted->contains(exact.value) ? 0 : 1;
}
