#pragma once

#include <string>
#include <vector>

#include "qccd/device.hpp"
#include "qccd/ir.hpp"

namespace qccd {

// Source-op tags for instructions not serving a circuit op directly.
constexpr int kTagReorder = -1;
constexpr int kTagTransit = -2;

enum class InstrKind {
    Gate1q,
    GateMS,
    Measure,
    Split,
    Move,
    Cross,
    Merge,
    SwapGS,
    SwapIS,
    Wait,
};

std::string to_string(InstrKind k);

struct Instruction {
    InstrKind kind;
    int ion = -1;     // primary ion (logical qubit id)
    int ion2 = -1;    // second ion for GateMS/SwapGS
    int node = -1;    // trap (gates, split/merge, swaps, wait) or junction (cross)
    int segment = -1; // toward/from/traversed segment
    int pos = -1;     // SwapIS: chain index of the left ion of the swapped pair
    int source_op = kTagTransit;
};

struct LayoutEntry {
    int qubit;
    int trap;
    int position;  // index in the trap's initial chain
};

// One shuttle transit between traps; `first_instr` is the instruction that
// must atomically acquire every listed segment/junction before starting.
struct TransitLeg {
    int first_instr;
    int last_instr;
    int ion;
    std::vector<int> segments;
    std::vector<int> junctions;
};

struct CompiledProgram {
    int num_qubits = 0;
    std::vector<LayoutEntry> initial_layout;
    std::vector<Instruction> instructions;
    std::vector<TransitLeg> legs;
};

struct CompileError : std::runtime_error {
    int op_id;
    CompileError(int op_id_, const std::string& msg)
        : std::runtime_error(msg), op_id(op_id_) {}
};

// Greedy first-use mapping; each trap keeps 2 buffer slots free for
// incoming shuttles. Throws CompileError on insufficient capacity.
std::vector<LayoutEntry> initial_map(const Circuit& c, const HardwareConfig& hw);

// Earliest-ready-gate scheduling with shuttle insertion along
// shortest_shuttle_path; reordering via SwapGS/SwapIS per hw.reorder.
CompiledProgram schedule(const Circuit& c, const HardwareConfig& hw,
                         const std::vector<LayoutEntry>& layout);

// Annotates transit legs with their resource reservations and inserts Wait
// markers where the earlier-gate-first priority delays a departure.
CompiledProgram route_parallel(CompiledProgram prog, const HardwareConfig& hw);

// Full pipeline: initial_map + schedule + route_parallel.
CompiledProgram compile(const Circuit& c, const HardwareConfig& hw);

struct ValidationReport {
    bool ok = true;
    std::string first_violation;  // empty when ok
};

// Symbolic replay: capacity bounds, GateMS co-location, split/merge end
// adjacency, per-qubit source order, exclusive segment/junction occupancy.
ValidationReport validate(const CompiledProgram& prog, const HardwareConfig& hw);

std::string emit_json_program(const CompiledProgram& prog);
CompiledProgram parse_json_program(const std::string& text);

}  // namespace qccd
