// Caterpillar completion: prints the leaf placement and the fill edges.
#include <iostream>

#include "pigc/pigc.hpp"

int main() {
    const auto inst = pigc::caterpillar_from_buckets({2, 3, 0, 2});
    const auto& g = inst.graph;
    const auto r = pigc::caterpillar_pig_completion(g, inst.decomposition);
    const auto& place = std::get<pigc::PointPlacement>(r.certificate);

    std::cout << "spine:";
    for (auto v : place.spine) std::cout << ' ' << v;
    std::cout << "\nleaf -> point:";
    for (pigc::Vertex v = place.spine.size(); v < g.size(); ++v) std::cout << ' ' << v << "->" << place.point[v];
    std::cout << "\ncost " << r.cost << ", fill:";
    for (const auto& e : r.fill) std::cout << ' ' << e.u << '-' << e.v;
    std::cout << "\nbrute-force optimum " << pigc::brute_min_pig(g, {.max_vertices = 11, .max_fill = std::nullopt}).cost
              << '\n';
    return 0;
}
