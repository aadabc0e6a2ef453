#pragma once

#include <cmath>
#include <cstdint>

namespace wsn {

inline double crossover_distance(double eps_fs, double eps_mp) {
    return std::sqrt(eps_fs / eps_mp);
}

// First-order radio model: a per-bit electronics cost on both ends plus a
// distance-dependent amplifier term on the transmit side, free-space d^2
// below the crossover distance d0 and multipath d^4 at or beyond it.
// The two amplifier branches agree exactly at d0.
struct RadioModel {
    double e_elec = 50e-9;       // J/bit, tx and rx electronics
    double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier
    double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier
    double d0 = crossover_distance(10e-12, 0.0013e-12);
    double e_da = 5e-9;          // J/bit per aggregated signal
    std::int64_t data_bits = 4000;
    std::int64_t ctrl_bits = 200;

    // d0 is derived state; call after changing eps_fs or eps_mp.
    void refresh_crossover() { d0 = crossover_distance(eps_fs, eps_mp); }
};

inline double tx_energy(const RadioModel& m, std::int64_t bits, double d) {
    const double b = static_cast<double>(bits);
    if (d < m.d0) {
        return m.e_elec * b + m.eps_fs * b * d * d;
    }
    return m.e_elec * b + m.eps_mp * b * d * d * d * d;
}

inline double rx_energy(const RadioModel& m, std::int64_t bits) {
    return m.e_elec * static_cast<double>(bits);
}

inline double aggregation_energy(const RadioModel& m, std::int64_t bits, int signals) {
    return m.e_da * static_cast<double>(bits) * static_cast<double>(signals);
}

}  // namespace wsn
