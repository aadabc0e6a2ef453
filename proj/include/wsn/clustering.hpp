#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "wsn/geometry.hpp"
#include "wsn/node.hpp"
#include "wsn/rng.hpp"

namespace wsn {

struct ClusterAssignment {
    std::vector<std::vector<int>> members;   // cluster -> ascending node ids
    std::vector<Position> centroids;
    std::unordered_map<int, int> cluster_of;  // node id -> cluster index

    std::size_t size() const { return members.size(); }
};

// Seeded Lloyd iteration over the alive nodes' positions; dead nodes are
// ignored. Everything that could wobble is pinned down: centroid seeding
// draws only from `rng` (k-means++ style, distance-squared weighting),
// nearest-centroid ties go to the lower cluster index, and an empty cluster
// seizes the point farthest from its own centroid (ties: lower node id).
// Runs to an assignment fixpoint or 100 iterations. Effective cluster count
// is min(k, alive nodes), so the output never contains an empty cluster.
inline ClusterAssignment partition(const std::vector<NodeRecord>& nodes, int k, Rng& rng) {
    if (k < 1) throw std::domain_error("partition: k must be >= 1");
    std::vector<int> ids;
    std::vector<Position> pts;
    for (const NodeRecord& n : nodes) {
        if (n.alive) {
            ids.push_back(n.id);
            pts.push_back(n.pos);
        }
    }
    if (ids.empty()) throw std::domain_error("partition: no alive nodes");
    const std::size_t n = ids.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n);

    // k-means++ seeding
    std::vector<Position> centroids;
    centroids.reserve(kk);
    {
        std::vector<double> d2(n, std::numeric_limits<double>::infinity());
        std::vector<char> chosen(n, 0);
        const std::size_t first = rng.below(n);
        centroids.push_back(pts[first]);
        chosen[first] = 1;
        while (centroids.size() < kk) {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                d2[i] = std::min(d2[i], squared_distance(pts[i], centroids.back()));
                if (!chosen[i]) total += d2[i];
            }
            std::size_t pick = n;
            if (total > 0.0) {
                const double r = rng.uniform() * total;
                double acc = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (chosen[i]) continue;
                    acc += d2[i];
                    if (acc > r) {
                        pick = i;
                        break;
                    }
                }
            }
            if (pick == n) {
                // all remaining candidates coincide with chosen centroids
                // (or the cumulative walk fell off the fp tail): take the
                // first unchosen point.
                for (std::size_t i = 0; i < n; ++i) {
                    if (!chosen[i]) {
                        pick = i;
                        break;
                    }
                }
            }
            centroids.push_back(pts[pick]);
            chosen[pick] = 1;
        }
    }

    std::vector<int> assign(n, -1);
    std::vector<int> prev(n, -2);
    std::vector<int> counts(kk, 0);

    auto assign_all = [&]() {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (std::size_t c = 0; c < kk; ++c) {
                const double d = squared_distance(pts[i], centroids[c]);
                if (d < best) {
                    best = d;
                    best_c = static_cast<int>(c);
                }
            }
            assign[i] = best_c;
            ++counts[best_c];
        }
    };

    auto repair_empties = [&]() {
        for (std::size_t c = 0; c < kk; ++c) {
            if (counts[c] > 0) continue;
            int donor = -1;
            double donor_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[assign[i]] < 2) continue;
                const double d = squared_distance(pts[i], centroids[assign[i]]);
                if (d > donor_d) {
                    donor_d = d;
                    donor = static_cast<int>(i);
                }
            }
            // a donor always exists: kk <= n, so if any cluster is empty
            // some other cluster holds at least two points
            --counts[assign[donor]];
            assign[donor] = static_cast<int>(c);
            counts[c] = 1;
        }
    };

    auto update_centroids = [&]() {
        std::vector<Position> sums(kk, Position{});
        for (std::size_t i = 0; i < n; ++i) {
            sums[assign[i]].x += pts[i].x;
            sums[assign[i]].y += pts[i].y;
        }
        for (std::size_t c = 0; c < kk; ++c) {
            centroids[c] = {sums[c].x / counts[c], sums[c].y / counts[c]};
        }
    };

    for (int iter = 0; iter < 100; ++iter) {
        assign_all();
        repair_empties();
        if (assign == prev) break;
        prev = assign;
        update_centroids();
    }

    ClusterAssignment out;
    out.members.resize(kk);
    for (std::size_t i = 0; i < n; ++i) {
        out.members[assign[i]].push_back(ids[i]);  // i ascends in id order
        out.cluster_of[ids[i]] = assign[i];
    }
    out.centroids = centroids;
    return out;
}

}  // namespace wsn
