#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qccd/device.hpp"
#include "qccd/ir.hpp"
#include "qccd/sim.hpp"

namespace qccd {

struct SweepPoint {
    std::string topology;  // "linear6", "grid2x3", or "custom"
    int capacity;
    GateImpl gate_impl;
    ReorderMethod reorder;
};

struct SweepSpec {
    Circuit circuit;
    HardwareConfig base;                    // defaults for unswept axes
    std::vector<std::string> topologies;    // e.g. {"linear6","grid2x3"}; empty = base
    std::vector<int> capacities;
    std::vector<GateImpl> gates;
    std::vector<ReorderMethod> reorders;

    std::vector<SweepPoint> points() const;  // deterministic cartesian order
};

struct SweepRow {
    SweepPoint point;
    std::string error;  // non-empty when the point failed to compile
    RunMetrics metrics;
};

// Runs every point (concurrency capped by QCCD_THREADS, default hardware
// threads); row order is the deterministic axis order regardless.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv(const std::vector<SweepRow>& rows);

HardwareConfig make_topology(const std::string& desc, const HardwareConfig& base);

}  // namespace qccd
