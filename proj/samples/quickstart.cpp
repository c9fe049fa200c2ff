// Minimal library walk-through: load a file, decompose, find a dense region.

#include <iostream>

#include "hgcore/hgcore.hpp"

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : "fig3b.hg";
    const auto built = hgcore::load_hg(path);
    const auto& h = built.graph;

    const auto cores = hgcore::local_core(h).cores;
    for (hgcore::NodeId v = 0; v < h.num_nodes(); ++v)
        std::cout << h.label(v) << '\t' << cores.core[v] << '\n';

    const auto dense = hgcore::greedy_densest(h);
    std::cout << "greedy density " << hgcore::to_fraction_string(dense.density) << " over " << dense.nodes.size()
              << " nodes (within a factor " << hgcore::to_fraction_string(dense.factor) << ")\n";
}
