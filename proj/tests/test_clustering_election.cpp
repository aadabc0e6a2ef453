#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "wsn/clustering.hpp"
#include "wsn/election.hpp"

using namespace wsn;

namespace {

std::vector<NodeRecord> make_nodes(const std::vector<Position>& positions,
                                   double energy = 0.5) {
    std::vector<NodeRecord> nodes;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        NodeRecord n;
        n.id = static_cast<int>(i);
        n.pos = positions[i];
        n.initial_energy = n.residual_energy = energy;
        nodes.push_back(n);
    }
    return nodes;
}

// Every alive node lands in exactly one cluster, members are sorted by id,
// no cluster is empty, and cluster_of agrees with the member lists.
void check_partition_invariants(const ClusterAssignment& a,
                                const std::vector<NodeRecord>& nodes) {
    std::set<int> seen;
    for (std::size_t c = 0; c < a.members.size(); ++c) {
        REQUIRE_FALSE(a.members[c].empty());
        CHECK(std::is_sorted(a.members[c].begin(), a.members[c].end()));
        for (int id : a.members[c]) {
            CHECK(nodes[id].alive);
            CHECK(seen.insert(id).second);
            CHECK(a.cluster_of.at(id) == static_cast<int>(c));
        }
    }
    std::size_t alive = 0;
    for (const NodeRecord& n : nodes) {
        if (n.alive) ++alive;
    }
    CHECK(seen.size() == alive);
}

}  // namespace

TEST_CASE("partition of a single node") {
    auto nodes = make_nodes({{40, 40}});
    Rng rng(1);
    const auto a = partition(nodes, 4, rng);
    REQUIRE(a.size() == 1);
    CHECK(a.members[0] == std::vector<int>{0});
    CHECK(a.centroids[0] == Position{40, 40});
}

TEST_CASE("partition caps cluster count at the population") {
    auto nodes = make_nodes({{1, 1}, {2, 2}, {90, 90}, {95, 95}});
    Rng rng(5);
    const auto a = partition(nodes, 6, rng);
    CHECK(a.size() == 4);
    check_partition_invariants(a, nodes);
    for (const auto& m : a.members) CHECK(m.size() == 1);
}

TEST_CASE("partition recovers well separated groups") {
    // four tight blobs near the field corners
    std::vector<Position> pts;
    const Position anchors[4] = {{10, 10}, {90, 10}, {10, 90}, {90, 90}};
    for (const Position& a : anchors) {
        pts.push_back({a.x - 1, a.y});
        pts.push_back({a.x + 1, a.y});
        pts.push_back({a.x, a.y - 1});
        pts.push_back({a.x, a.y + 1});
    }
    auto nodes = make_nodes(pts);
    Rng rng(9);
    const auto a = partition(nodes, 4, rng);
    REQUIRE(a.size() == 4);
    check_partition_invariants(a, nodes);
    // ids 0-3, 4-7, 8-11, 12-15 belong together; each cluster must hold one
    // whole blob
    for (const auto& members : a.members) {
        REQUIRE(members.size() == 4);
        const int blob = members[0] / 4;
        for (int id : members) CHECK(id / 4 == blob);
    }
}

TEST_CASE("partition ignores dead nodes") {
    auto nodes = make_nodes({{10, 10}, {20, 20}, {80, 80}, {90, 90}});
    nodes[1].alive = false;
    nodes[1].residual_energy = 0.0;
    Rng rng(3);
    const auto a = partition(nodes, 2, rng);
    check_partition_invariants(a, nodes);
    for (const auto& members : a.members) {
        for (int id : members) CHECK(id != 1);
    }
}

TEST_CASE("partition is deterministic for a fixed generator seed") {
    std::vector<Position> pts;
    Rng layout(77);
    for (int i = 0; i < 60; ++i) {
        pts.push_back({layout.uniform() * 100, layout.uniform() * 100});
    }
    auto nodes = make_nodes(pts);
    Rng r1(1234), r2(1234);
    const auto a = partition(nodes, 5, r1);
    const auto b = partition(nodes, 5, r2);
    CHECK(a.members == b.members);
    check_partition_invariants(a, nodes);
}

TEST_CASE("partition rejects bad input") {
    auto nodes = make_nodes({{1, 1}});
    Rng rng(1);
    CHECK_THROWS_AS(partition(nodes, 0, rng), std::domain_error);
    nodes[0].alive = false;
    CHECK_THROWS_AS(partition(nodes, 1, rng), std::domain_error);
}

TEST_CASE("role election ranks by score") {
    auto nodes = make_nodes({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    ValueTable values{{0, 0.6}, {1, 0.9}, {2, 0.7}, {3, 1.0}, {4, 0.8}};
    const auto roles = elect_roles({0, 1, 2, 3, 4}, values, nodes);
    CHECK(roles.ch == 3);
    CHECK(roles.chsec == 1);
    CHECK(roles.chv == 4);
    CHECK(roles.chsecv == 2);
}

TEST_CASE("role election fills what a small cluster can") {
    auto nodes = make_nodes({{0, 0}, {1, 0}, {2, 0}});
    ValueTable values{{0, 0.5}, {1, 0.7}, {2, 0.6}};

    SECTION("singleton keeps only the head") {
        const auto roles = elect_roles({1}, values, nodes);
        CHECK(roles.ch == 1);
        CHECK_FALSE(roles.chsec.has_value());
        CHECK_FALSE(roles.chv.has_value());
        CHECK_FALSE(roles.chsecv.has_value());
    }
    SECTION("three members leave the last role unfilled") {
        const auto roles = elect_roles({0, 1, 2}, values, nodes);
        CHECK(roles.ch == 1);
        CHECK(roles.chsec == 2);
        CHECK(roles.chv == 0);
        CHECK_FALSE(roles.chsecv.has_value());
    }
    SECTION("empty cluster rejected") {
        CHECK_THROWS_AS(elect_roles({}, values, nodes), std::domain_error);
    }
}

TEST_CASE("score ties break by residual energy, then id") {
    auto nodes = make_nodes({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
    ValueTable values;
    for (int i = 0; i < 6; ++i) values[i] = 0.5;

    SECTION("all-equal cluster hands roles to the lowest ids") {
        const auto roles = elect_roles({0, 1, 2, 3, 4, 5}, values, nodes);
        CHECK(roles.ch == 0);
        CHECK(roles.chsec == 1);
        CHECK(roles.chv == 2);
        CHECK(roles.chsecv == 3);
    }
    SECTION("higher residual wins the tie") {
        nodes[4].residual_energy = 0.6;
        const auto roles = elect_roles({0, 1, 2, 3, 4, 5}, values, nodes);
        CHECK(roles.ch == 4);
        CHECK(roles.chsec == 0);
    }
}

TEST_CASE("election matches a brute force re-sort") {
    Rng rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        std::vector<Position> pts;
        for (int i = 0; i < n; ++i) {
            pts.push_back({rng.uniform() * 100, rng.uniform() * 100});
        }
        auto nodes = make_nodes(pts);
        ValueTable values;
        std::vector<int> members;
        for (int i = 0; i < n; ++i) {
            nodes[i].residual_energy = 0.1 + 0.4 * rng.uniform();
            // quantized scores force plenty of ties
            values[i] = 0.05 * static_cast<double>(1 + rng.below(8));
            members.push_back(i);
        }
        auto order = members;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (values[a] != values[b]) return values[a] > values[b];
            if (nodes[a].residual_energy != nodes[b].residual_energy) {
                return nodes[a].residual_energy > nodes[b].residual_energy;
            }
            return a < b;
        });
        const auto roles = elect_roles(members, values, nodes);
        CHECK(roles.ch == order[0]);
        if (n > 1) CHECK(roles.chsec == order[1]);
        if (n > 2) CHECK(roles.chv == order[2]);
        if (n > 3) CHECK(roles.chsecv == order[3]);
    }
}

TEST_CASE("leading last round costs the next election") {
    // two identical nodes; the one that led last round scores half and loses
    auto nodes = make_nodes({{10, 50}, {10.0000001, 50}});
    SimConfig cfg;
    cfg.n_nodes = 2;
    cfg.k_clusters = 1;

    RoleTable prev;
    prev.clusters.push_back(ClusterRoles{0, {}, {}, {}});

    Rng rng(2);
    const auto round = configure_round(nodes, cfg, prev, rng);
    REQUIRE(round.roles.clusters.size() == 1);
    CHECK(round.values.at(0) == Catch::Approx(0.5 * round.values.at(1)));
    CHECK(round.roles.clusters[0].ch == 1);
}

TEST_CASE("configure_round covers alive nodes and keeps roles distinct") {
    Rng layout(55);
    std::vector<Position> pts;
    for (int i = 0; i < 40; ++i) {
        pts.push_back({layout.uniform() * 100, layout.uniform() * 100});
    }
    auto nodes = make_nodes(pts);
    nodes[7].alive = false;
    nodes[19].alive = false;
    SimConfig cfg;
    cfg.n_nodes = 40;
    cfg.k_clusters = 5;

    Rng rng(8);
    const auto round = configure_round(nodes, cfg, RoleTable{}, rng);
    check_partition_invariants(round.assignment, nodes);
    CHECK(round.values.size() == 38);

    for (std::size_t c = 0; c < round.roles.clusters.size(); ++c) {
        const ClusterRoles& rc = round.roles.clusters[c];
        std::set<int> holders{rc.ch};
        if (rc.chsec) holders.insert(*rc.chsec);
        if (rc.chv) holders.insert(*rc.chv);
        if (rc.chsecv) holders.insert(*rc.chsecv);
        // all present roles must be distinct nodes of this cluster
        std::size_t present = 1 + (rc.chsec ? 1 : 0) + (rc.chv ? 1 : 0) +
                              (rc.chsecv ? 1 : 0);
        CHECK(holders.size() == present);
        for (int id : holders) {
            CHECK(round.assignment.cluster_of.at(id) == static_cast<int>(c));
        }
    }

    SECTION("apply_roles stamps the node records") {
        auto stamped = nodes;
        apply_roles(stamped, round.assignment, round.roles);
        int heads = 0;
        for (const NodeRecord& n : stamped) {
            if (!n.alive) continue;
            REQUIRE(n.cluster_id.has_value());
            if (n.role == Role::Ch) ++heads;
        }
        CHECK(heads == static_cast<int>(round.roles.clusters.size()));
        CHECK_FALSE(stamped[7].cluster_id.has_value());
    }
}
