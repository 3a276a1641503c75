#pragma once

#include <map>
#include <string>

#include "qccd/compiler.hpp"
#include "qccd/device.hpp"

namespace qccd {

struct RunMetrics {
    double makespan_us = 0.0;
    double fidelity = 1.0;           // exp(log_fidelity)
    double log_fidelity = 0.0;
    std::map<std::string, long> op_counts;
    double max_motional_energy = 0.0;
    double err_background_sum = 0.0;  // summed two-qubit background error terms
    double err_motional_sum = 0.0;    // summed two-qubit motional error terms
    double compute_us = 0.0;          // critical-path split
    double communicate_us = 0.0;
};

// Deterministic event-driven replay. Throws std::logic_error on a replay
// violation (signals a compiler bug).
RunMetrics simulate(const CompiledProgram& prog, const HardwareConfig& hw);

// CSV rows: id,kind,start_us,end_us,location,chain_len,energy_quanta,
// fidelity,err_background,err_motional
std::string emit_trace(const CompiledProgram& prog, const HardwareConfig& hw);

std::string emit_json_metrics(const RunMetrics& m);

}  // namespace qccd
