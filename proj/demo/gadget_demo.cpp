// Builds the split-graph gadget and checks its structure.
#include <iostream>

#include "pigc/pigc.hpp"

int main() {
    const auto src = pigc::gen_split(3, 2, 0.5, 7);
    const auto gadget = pigc::split_pig_reduction_gadget(src.graph, src.partition);
    const auto& h = gadget.graph;
    const std::size_t n = src.graph.size();
    std::cout << "input: " << n << " vertices, |C| = " << src.partition.clique.size() << '\n';
    std::cout << "gadget: " << h.size() << " vertices, " << h.edge_count() << " edges\n";
    std::cout << "|C'| = " << gadget.big_clique.size() << " (expected " << 2 * src.partition.clique.size() + 2 * n * n
              << ")\n";
    const auto split = pigc::split_partition(h);
    std::cout << "gadget is split: " << std::boolalpha << split.has_value() << '\n';
    bool iso = true;
    for (pigc::Vertex u = 0; u < n; ++u)
        for (pigc::Vertex v = u + 1; v < n; ++v)
            iso = iso && src.graph.adjacent(u, v) == h.adjacent(gadget.copy1[u], gadget.copy1[v]) &&
                  src.graph.adjacent(u, v) == h.adjacent(gadget.copy2[u], gadget.copy2[v]);
    std::cout << "copy maps preserve adjacency: " << iso << '\n';
    return split && iso ? 0 : 1;
}
