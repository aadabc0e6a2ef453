#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "wsn/rng.hpp"
#include "wsn/valuation.hpp"

using namespace wsn;

TEST_CASE("energy level bins") {
    CHECK(energy_level(0.0) == 0.2);
    CHECK(energy_level(0.39) == 0.2);
    CHECK(energy_level(0.40) == 0.4);
    CHECK(energy_level(0.69) == 0.4);
    CHECK(energy_level(0.70) == 0.6);
    CHECK(energy_level(1.0) == 0.6);
    CHECK_THROWS_AS(energy_level(-0.01), std::domain_error);
    CHECK_THROWS_AS(energy_level(1.01), std::domain_error);
}

TEST_CASE("distance level bins") {
    CHECK(distance_level(0.0) == 0.2);
    CHECK(distance_level(0.2) == 0.2);
    CHECK(distance_level(1.0 / 3.0) == 0.1);
    CHECK(distance_level(0.5) == 0.1);
    CHECK(distance_level(2.0 / 3.0) == 0.0);
    CHECK(distance_level(1.0) == 0.0);
    CHECK_THROWS_AS(distance_level(-0.01), std::domain_error);
    CHECK_THROWS_AS(distance_level(1.01), std::domain_error);
}

TEST_CASE("centrality and rotation factors") {
    CHECK(centrality_level(Centrality::Center) == 0.2);
    CHECK(centrality_level(Centrality::Side) == 0.1);
    CHECK(prev_ch_multiplier(false) == 1.0);
    CHECK(prev_ch_multiplier(true) == 0.5);
}

namespace {

struct ScoreRow {
    double r_frac;
    double d_frac;
    Centrality centrality;
    bool was_ch_prev;
    double expected;
};

// Every bin combination, with the expected score written out by hand.
// Probe inputs sit mid-bin: r in {0.20, 0.55, 0.85}, d in {0.10, 0.50, 0.90}.
const ScoreRow kScoreTable[36] = {
    {0.20, 0.10, Centrality::Side, false, 0.50},
    {0.20, 0.10, Centrality::Side, true, 0.25},
    {0.20, 0.10, Centrality::Center, false, 0.60},
    {0.20, 0.10, Centrality::Center, true, 0.30},
    {0.20, 0.50, Centrality::Side, false, 0.40},
    {0.20, 0.50, Centrality::Side, true, 0.20},
    {0.20, 0.50, Centrality::Center, false, 0.50},
    {0.20, 0.50, Centrality::Center, true, 0.25},
    {0.20, 0.90, Centrality::Side, false, 0.30},
    {0.20, 0.90, Centrality::Side, true, 0.15},
    {0.20, 0.90, Centrality::Center, false, 0.40},
    {0.20, 0.90, Centrality::Center, true, 0.20},
    {0.55, 0.10, Centrality::Side, false, 0.70},
    {0.55, 0.10, Centrality::Side, true, 0.35},
    {0.55, 0.10, Centrality::Center, false, 0.80},
    {0.55, 0.10, Centrality::Center, true, 0.40},
    {0.55, 0.50, Centrality::Side, false, 0.60},
    {0.55, 0.50, Centrality::Side, true, 0.30},
    {0.55, 0.50, Centrality::Center, false, 0.70},
    {0.55, 0.50, Centrality::Center, true, 0.35},
    {0.55, 0.90, Centrality::Side, false, 0.50},
    {0.55, 0.90, Centrality::Side, true, 0.25},
    {0.55, 0.90, Centrality::Center, false, 0.60},
    {0.55, 0.90, Centrality::Center, true, 0.30},
    {0.85, 0.10, Centrality::Side, false, 0.90},
    {0.85, 0.10, Centrality::Side, true, 0.45},
    {0.85, 0.10, Centrality::Center, false, 1.00},
    {0.85, 0.10, Centrality::Center, true, 0.50},
    {0.85, 0.50, Centrality::Side, false, 0.80},
    {0.85, 0.50, Centrality::Side, true, 0.40},
    {0.85, 0.50, Centrality::Center, false, 0.90},
    {0.85, 0.50, Centrality::Center, true, 0.45},
    {0.85, 0.90, Centrality::Side, false, 0.70},
    {0.85, 0.90, Centrality::Side, true, 0.35},
    {0.85, 0.90, Centrality::Center, false, 0.80},
    {0.85, 0.90, Centrality::Center, true, 0.40},
};

}  // namespace

TEST_CASE("score table over all bin combinations") {
    for (const ScoreRow& row : kScoreTable) {
        ValuationInputs in{row.r_frac, row.d_frac, row.centrality, row.was_ch_prev};
        const double got = node_value(in).score;
        INFO("r=" << row.r_frac << " d=" << row.d_frac << " c="
                  << to_string(row.centrality) << " prev=" << row.was_ch_prev);
        CHECK(got == Catch::Approx(row.expected).margin(1e-12));
    }
}

TEST_CASE("score table spans thirteen distinct values") {
    std::set<double> distinct;
    for (const ScoreRow& row : kScoreTable) distinct.insert(row.expected);
    CHECK(distinct.size() == 13);
    CHECK(*distinct.begin() == 0.15);
    CHECK(*distinct.rbegin() == 1.00);
}

TEST_CASE("worked scoring examples") {
    // mid energy, mid distance, edge of cluster, fresh node
    ValuationInputs a{0.50, 0.45, Centrality::Side, false};
    CHECK(node_value(a).score == Catch::Approx(0.60).margin(1e-12));
    // low energy, mid distance, central, led last round
    ValuationInputs b{0.30, 0.45, Centrality::Center, true};
    CHECK(node_value(b).score == Catch::Approx(0.25).margin(1e-12));
}

TEST_CASE("recent head duty halves the score exactly") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        ValuationInputs in;
        in.r_frac = rng.uniform();
        in.d_frac = rng.uniform();
        in.centrality = rng.below(2) ? Centrality::Center : Centrality::Side;
        in.was_ch_prev = false;
        const double fresh = node_value(in).score;
        in.was_ch_prev = true;
        // multiplying by 0.5 is exact in binary floating point
        CHECK(node_value(in).score == 0.5 * fresh);
    }
}

TEST_CASE("score monotonicity and range") {
    Rng rng(23);
    for (int i = 0; i < 2000; ++i) {
        ValuationInputs in;
        in.r_frac = rng.uniform();
        in.d_frac = rng.uniform();
        in.centrality = rng.below(2) ? Centrality::Center : Centrality::Side;
        in.was_ch_prev = rng.below(2) != 0;
        const double base = node_value(in).score;
        CHECK(base >= 0.15);
        CHECK(base <= 1.00);

        ValuationInputs more_energy = in;
        more_energy.r_frac =
            std::min(1.0, in.r_frac + rng.uniform() * (1.0 - in.r_frac));
        CHECK(node_value(more_energy).score >= base);

        ValuationInputs farther = in;
        farther.d_frac = std::min(1.0, in.d_frac + rng.uniform() * (1.0 - in.d_frac));
        CHECK(node_value(farther).score <= base);

        ValuationInputs central = in;
        central.centrality = Centrality::Center;
        CHECK(node_value(central).score >= base);

        ValuationInputs fresh = in;
        fresh.was_ch_prev = false;
        CHECK(node_value(fresh).score >= base);
    }
}

TEST_CASE("base station distance normalization") {
    const Position bs{100, 50};
    // farthest field corner from this BS is (0,0) or (0,100), 111.803 m out
    CHECK(normalize_bs_distance({100, 50}, bs, 100, 100) == 0.0);
    CHECK(normalize_bs_distance({0, 0}, bs, 100, 100) == Catch::Approx(1.0).margin(1e-12));
    CHECK(normalize_bs_distance({0, 100}, bs, 100, 100) ==
          Catch::Approx(1.0).margin(1e-12));
    CHECK(normalize_bs_distance({50, 50}, bs, 100, 100) ==
          Catch::Approx(0.4472135954999579).margin(1e-12));

    // centered BS: all four corners tie at the referent distance
    const Position mid{50, 50};
    CHECK(normalize_bs_distance({0, 0}, mid, 100, 100) == Catch::Approx(1.0).margin(1e-12));
    CHECK(normalize_bs_distance({100, 100}, mid, 100, 100) ==
          Catch::Approx(1.0).margin(1e-12));

    CHECK_THROWS_AS(normalize_bs_distance({0, 0}, {0, 0}, 0, 0), std::domain_error);
}

TEST_CASE("cluster centrality classification") {
    const std::vector<Position> square_plus_center = {
        {0, 0}, {10, 0}, {0, 10}, {10, 10}, {5, 5}};
    // centroid is (5,5); corners are 7.07 m out, so the center threshold is 3.54 m
    CHECK(classify_centrality({5, 5}, square_plus_center) == Centrality::Center);
    CHECK(classify_centrality({6, 5}, square_plus_center) == Centrality::Center);
    CHECK(classify_centrality({0, 0}, square_plus_center) == Centrality::Side);
    CHECK(classify_centrality({10, 10}, square_plus_center) == Centrality::Side);

    SECTION("a singleton is its own center") {
        CHECK(classify_centrality({3, 4}, {{3, 4}}) == Centrality::Center);
    }
    SECTION("empty cluster rejected") {
        CHECK_THROWS_AS(classify_centrality({0, 0}, {}), std::domain_error);
    }
}
