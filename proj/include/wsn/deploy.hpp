#pragma once

#include <vector>

#include "wsn/config.hpp"
#include "wsn/node.hpp"
#include "wsn/rng.hpp"

namespace wsn {

// i.i.d. uniform positions over the field, ids 0..n-1, full batteries.
// Draw order is fixed (x then y, ascending id) so a seed pins the layout.
inline std::vector<NodeRecord> deploy(const SimConfig& cfg, Rng& rng) {
    std::vector<NodeRecord> nodes;
    nodes.reserve(static_cast<std::size_t>(cfg.n_nodes));
    for (int i = 0; i < cfg.n_nodes; ++i) {
        NodeRecord n;
        n.id = i;
        n.pos.x = rng.uniform() * cfg.area_width;
        n.pos.y = rng.uniform() * cfg.area_height;
        n.initial_energy = cfg.initial_energy;
        n.residual_energy = cfg.initial_energy;
        nodes.push_back(n);
    }
    return nodes;
}

}  // namespace wsn
