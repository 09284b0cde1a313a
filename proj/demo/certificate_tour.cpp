// Computes mur for a few graphs, serializes each report and replays it.

#include "murlab/murlab.hpp"

#include <iostream>

int main() {
    using namespace murlab;
    const std::vector<std::pair<const char*, Graph>> graphs = {
        {"P6", gen::path(6)},
        {"C7", gen::cycle(7)},
        {"Petersen", gen::petersen()},
        {"K2,3,4", gen::complete_multipartite({2, 3, 4})},
        {"(K4 u 3K1) v v", gen::clique_plus_isolated_join_v(4, 3)},
        {"fork", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})},
    };
    for (const auto& [name, g] : graphs) {
        Report rep;
        rep.graph = g;
        rep.result = compute_mur(g);
        const auto text = to_json(rep).dump();
        const auto back = report_from_json(nlohmann::json::parse(text));
        const auto check = replay(back);
        std::cout << name << ": " << summary(rep.result) << "\n    replay " << (check.ok ? "ok" : check.detail)
                  << ", report " << text.size() << " bytes\n";
    }
}
