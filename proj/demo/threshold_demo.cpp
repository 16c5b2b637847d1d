// Builds a threshold graph from a tag string, completes it and checks the
// answer against the brute-force oracle and the max-cut identity.
#include <iostream>

#include "pigc/pigc.hpp"

int main() {
    using pigc::StepKind;
    const auto inst = pigc::threshold_from_tags(
        {StepKind::Isolated, StepKind::Isolated, StepKind::Dominating, StepKind::Isolated, StepKind::Isolated,
         StepKind::Isolated, StepKind::Dominating});
    const auto& g = inst.graph;
    std::cout << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";

    const auto run = pigc::threshold_pig_completion_detailed(g);
    const auto& parts = std::get<pigc::CliqueBipartition>(run.result.certificate);
    std::cout << "greedy cost " << run.result.cost << ", S1 = {";
    for (auto v : parts.first) std::cout << ' ' << v;
    std::cout << " }, S2 = {";
    for (auto v : parts.second) std::cout << ' ' << v;
    std::cout << " }\n";

    const auto oracle = pigc::brute_min_pig(g);
    std::cout << "brute-force optimum " << oracle.cost << '\n';

    const auto identity = pigc::maxcut_identity_check(g);
    std::cout << "C(n,2) - |E| - maxcut(complement) = "
              << pigc::pairs_of(identity.vertices) - g.edge_count() - identity.max_cut_complement << '\n';
    std::cout << "completed graph is PIG: " << std::boolalpha
              << static_cast<bool>(pigc::is_proper_interval(g.with_edges(run.result.fill))) << '\n';
    return run.result.cost == oracle.cost ? 0 : 1;
}
