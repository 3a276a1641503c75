#pragma once

#include <string>
#include <vector>

#include "qccd/models.hpp"

namespace qccd {

enum class NodeKind { Trap, Junction };

struct Node {
    int id;
    NodeKind kind;
};

struct Segment {
    int id;
    int a;  // endpoint node ids, a < b
    int b;
};

struct DeviceGraph {
    std::vector<Node> nodes;
    std::vector<Segment> segments;
    std::vector<std::vector<int>> adj;      // node -> sorted neighbor node ids
    std::vector<std::vector<int>> adj_seg;  // node -> segment id per neighbor

    bool is_trap(int n) const { return nodes[n].kind == NodeKind::Trap; }
    int degree(int n) const { return static_cast<int>(adj[n].size()); }
    int segment_between(int u, int v) const;  // -1 if none
    std::vector<int> trap_ids() const;

    // Chain ends: "front" faces the smallest-id neighbor when a trap has two
    // neighbors; a degree-1 trap exits at the back. Returns true for back.
    bool exit_at_back(int trap, int toward_neighbor) const;

    void finalize();  // builds adjacency, checks invariants
};

DeviceGraph make_linear(int n_traps);
DeviceGraph make_grid(int rows, int cols);

struct HardwareConfig {
    DeviceGraph graph;
    int capacity = 25;
    GateImpl gate_impl = GateImpl::FM;
    ReorderMethod reorder = ReorderMethod::GS;
    PhysicsParams physics;
    std::string topology_desc;  // e.g. "linear6", "grid2x3"
};

// Device config JSON:
// {"topology": {"type":"linear","traps":6} | {"type":"grid","rows":2,"cols":3}
//            | {"type":"custom","nodes":[...],"segments":[[a,b],...]},
//  "capacity": 25, "gate": "FM", "reorder": "GS", "physics": {...}}
HardwareConfig parse_hardware_config(const std::string& text);
std::string emit_hardware_config(const HardwareConfig& hw);

struct Path {
    std::vector<int> nodes;  // alternating traps/junctions, endpoints included
    double cost = 0.0;       // modeled shuttle time, us
};

// Per-trap occupancy snapshot used to price intermediate-trap transit
// penalties (merge + reorder + split). Indexed by node id; 0 for junctions.
using Occupancy = std::vector<int>;

struct RouteCostModel {
    GateImpl gate_impl = GateImpl::FM;
    ReorderMethod reorder = ReorderMethod::GS;
    PhysicsParams physics;

    double cross_time(const DeviceGraph& g, int junction) const;
    // merge + reorder-to-far-end + split for a pass-through with n resident ions
    double transit_trap_time(int n_resident) const;
    double reorder_time(int distance, int n_chain) const;
};

// Minimum-modeled-time path between two traps. Deterministic tie-break toward
// smaller predecessor node ids. Empty node list when from == to.
Path shortest_shuttle_path(const DeviceGraph& g, int from_trap, int to_trap,
                           const RouteCostModel& cm, const Occupancy& occ);

}  // namespace qccd
