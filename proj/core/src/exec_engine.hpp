#pragma once

// Internal deterministic list-scheduling engine shared by the simulator,
// route_parallel and the validator's occupancy audit. Not installed.

#include <string>
#include <vector>

#include "qccd/compiler.hpp"
#include "qccd/device.hpp"

namespace qccd::detail {

struct ExecEvent {
    double start = 0.0;
    double end = 0.0;
    int crit_pred = -1;   // instruction that determined `start`, -1 if none
    double fidelity = 1.0;
    double err_background = 0.0;
    double err_motional = 0.0;
    int chain_len = 0;    // chain length seen by the instruction (0 if n/a)
    double n_bar = 0.0;   // chain energy at execution
    int location = -1;    // trap/junction node, or -1
    int segment = -1;
};

struct ExecResult {
    std::vector<ExecEvent> events;
    double makespan = 0.0;
    double log_fidelity = 0.0;  // -inf once any factor clamps to 0
    double max_energy = 0.0;
    double err_background_sum = 0.0;
    double err_motional_sum = 0.0;
    double compute_us = 0.0;      // critical-path attribution
    double communicate_us = 0.0;
    std::vector<double> leg_delay;      // per leg: delay from path acquisition
    std::vector<int> leg_wait_node;     // trap where the delayed leg waits
};

// Replays `prog` instruction by instruction; throws std::logic_error on a
// replay violation (signals a compiler bug).
ExecResult execute(const CompiledProgram& prog, const HardwareConfig& hw);

}  // namespace qccd::detail
