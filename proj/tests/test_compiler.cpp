#include <algorithm>

#include "doctest.h"
#include "qccd/compiler.hpp"
#include "qccd/device.hpp"

using namespace qccd;

namespace {

HardwareConfig make_hw(DeviceGraph g, int capacity,
                       GateImpl gate = GateImpl::FM,
                       ReorderMethod reorder = ReorderMethod::GS) {
    HardwareConfig hw;
    hw.graph = std::move(g);
    hw.capacity = capacity;
    hw.gate_impl = gate;
    hw.reorder = reorder;
    return hw;
}

int count_kind(const CompiledProgram& p, InstrKind k) {
    return static_cast<int>(std::count_if(
        p.instructions.begin(), p.instructions.end(),
        [&](const Instruction& i) { return i.kind == k; }));
}

int shuttle_count(const CompiledProgram& p) {
    return count_kind(p, InstrKind::Split) + count_kind(p, InstrKind::Move) +
           count_kind(p, InstrKind::Cross) + count_kind(p, InstrKind::Merge);
}

std::pair<int, int> placed(const std::vector<LayoutEntry>& layout, int qubit) {
    for (const auto& e : layout)
        if (e.qubit == qubit) return {e.trap, e.position};
    return {-1, -1};
}

}  // namespace

TEST_CASE("initial_map fills traps in first-use order with 2 buffer slots") {
    Circuit c;
    c.num_qubits = 5;
    for (int i = 0; i < 4; ++i) c.add_2q(i, i + 1);
    auto hw = make_hw(make_linear(2), 5);  // 3 usable slots per trap
    auto layout = initial_map(c, hw);
    CHECK(placed(layout, 0) == std::pair{0, 0});
    CHECK(placed(layout, 1) == std::pair{0, 1});
    CHECK(placed(layout, 2) == std::pair{0, 2});
    CHECK(placed(layout, 3) == std::pair{1, 0});
    CHECK(placed(layout, 4) == std::pair{1, 1});
}

TEST_CASE("initial_map on a single trap") {
    Circuit c;
    c.num_qubits = 4;
    c.add_2q(0, 1);
    c.add_2q(2, 3);
    auto layout = initial_map(c, make_hw(make_linear(1), 6));
    for (int q = 0; q < 4; ++q) {
        CHECK(placed(layout, q).first == 0);
        CHECK(placed(layout, q).second == q);
    }
}

TEST_CASE("initial_map orders by first use, not qubit index") {
    Circuit c;
    c.num_qubits = 4;
    c.add_2q(2, 3);
    c.add_2q(0, 1);
    auto layout = initial_map(c, make_hw(make_linear(2), 4));  // 2 usable
    CHECK(placed(layout, 2) == std::pair{0, 0});
    CHECK(placed(layout, 3) == std::pair{0, 1});
    CHECK(placed(layout, 0) == std::pair{1, 0});
    CHECK(placed(layout, 1) == std::pair{1, 1});
}

TEST_CASE("initial_map rejects circuits that do not fit") {
    Circuit c;
    c.num_qubits = 5;
    c.add_2q(0, 4);
    CHECK_THROWS_AS(initial_map(c, make_hw(make_linear(2), 4)), CompileError);
    // capacity 2 leaves no usable slot at all
    Circuit one;
    one.num_qubits = 1;
    one.add_1q("h", 0);
    CHECK_THROWS_AS(initial_map(one, make_hw(make_linear(1), 2)), CompileError);
}

TEST_CASE("co-located two-qubit gate compiles to a single MS gate") {
    Circuit c;
    c.num_qubits = 2;
    c.add_2q(0, 1);
    auto prog = compile(c, make_hw(make_linear(2), 4));
    REQUIRE(prog.instructions.size() == 1);
    CHECK(prog.instructions[0].kind == InstrKind::GateMS);
    CHECK(prog.legs.empty());
}

TEST_CASE("cross-trap gate emits split/move/merge then the gate") {
    Circuit c;
    c.num_qubits = 4;
    c.add_2q(0, 1);
    c.add_2q(2, 3);
    c.add_2q(1, 2);
    auto hw = make_hw(make_linear(2), 4);
    auto prog = compile(c, hw);

    std::vector<InstrKind> kinds;
    for (const auto& ins : prog.instructions)
        if (ins.kind != InstrKind::Wait) kinds.push_back(ins.kind);
    CHECK(kinds == std::vector<InstrKind>{InstrKind::GateMS, InstrKind::GateMS,
                                          InstrKind::Split, InstrKind::Move,
                                          InstrKind::Merge, InstrKind::GateMS});
    // q1 makes the trip: it sits at the exit end of trap 0 already
    REQUIRE(prog.legs.size() == 1);
    CHECK(prog.legs[0].ion == 1);
    CHECK(prog.legs[0].segments == std::vector<int>{0});
    CHECK(prog.legs[0].junctions.empty());
    CHECK(validate(prog, hw).ok);
}

TEST_CASE("pass-through of an occupied middle trap merges, reorders, splits") {
    Circuit c;
    c.num_qubits = 6;
    c.add_2q(0, 1);
    c.add_2q(2, 3);
    c.add_2q(4, 5);
    c.add_2q(0, 4);
    auto hw = make_hw(make_linear(3), 4);
    auto prog = compile(c, hw);

    // one intermediate trap => 2 splits and 2 merges on the single leg
    CHECK(count_kind(prog, InstrKind::Split) == 2);
    CHECK(count_kind(prog, InstrKind::Merge) == 2);
    CHECK(count_kind(prog, InstrKind::Move) == 2);
    CHECK(count_kind(prog, InstrKind::Cross) == 0);
    CHECK(count_kind(prog, InstrKind::GateMS) == 4);
    // cost tie: the ion from the higher-id trap travels
    REQUIRE(prog.legs.size() == 1);
    CHECK(prog.legs[0].ion == 4);
    CHECK(validate(prog, hw).ok);
}

TEST_CASE("junction routes emit cross instructions") {
    Circuit c;
    c.num_qubits = 8;
    c.add_2q(0, 1);
    c.add_2q(2, 3);
    c.add_2q(4, 5);
    c.add_2q(6, 7);
    c.add_2q(1, 6);
    auto hw = make_hw(make_grid(2, 2), 4);
    auto prog = compile(c, hw);
    CHECK(count_kind(prog, InstrKind::Cross) >= 1);
    CHECK(validate(prog, hw).ok);
}

TEST_CASE("IS reordering emits positional hops instead of swap gates") {
    Circuit c;
    c.num_qubits = 6;
    c.add_2q(0, 1);
    c.add_2q(2, 3);
    c.add_2q(4, 5);
    c.add_2q(0, 4);
    auto hw = make_hw(make_linear(3), 4, GateImpl::FM, ReorderMethod::IS);
    auto prog = compile(c, hw);
    CHECK(count_kind(prog, InstrKind::SwapGS) == 0);
    CHECK(count_kind(prog, InstrKind::SwapIS) >= 1);
    CHECK(validate(prog, hw).ok);
}

TEST_CASE("single-trap circuits never shuttle") {
    Circuit c;
    c.num_qubits = 5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) c.add_2q(i, j);
    for (int i = 0; i < 5; ++i) c.add_measure(i);
    auto hw = make_hw(make_linear(1), 8);
    auto prog = compile(c, hw);
    CHECK(shuttle_count(prog) == 0);
    CHECK(count_kind(prog, InstrKind::GateMS) == 10);
    CHECK(count_kind(prog, InstrKind::Measure) == 5);
    CHECK(validate(prog, hw).ok);
}

TEST_CASE("compilation is deterministic") {
    Circuit c;
    c.num_qubits = 6;
    c.add_2q(0, 3);
    c.add_2q(1, 4);
    c.add_2q(2, 5);
    c.add_1q("h", 0);
    c.add_2q(0, 5);
    auto hw = make_hw(make_linear(3), 4);
    auto a = emit_json_program(compile(c, hw));
    auto b = emit_json_program(compile(c, hw));
    CHECK(a == b);
}

TEST_CASE("program JSON round-trip") {
    Circuit c;
    c.num_qubits = 4;
    c.add_2q(0, 1);
    c.add_2q(2, 3);
    c.add_2q(1, 2);
    auto hw = make_hw(make_linear(2), 4);
    auto prog = compile(c, hw);
    auto rt = parse_json_program(emit_json_program(prog));
    CHECK(emit_json_program(rt) == emit_json_program(prog));
    CHECK(validate(rt, hw).ok);
}

TEST_CASE("validate flags a gate on separated ions") {
    auto hw = make_hw(make_linear(2), 4);
    CompiledProgram prog;
    prog.num_qubits = 2;
    prog.initial_layout = {{0, 0, 0}, {1, 1, 0}};
    prog.instructions.push_back({InstrKind::GateMS, 0, 1, 0, -1, -1, 0});
    auto rep = validate(prog, hw);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_violation.find("co-located") != std::string::npos);
}

TEST_CASE("validate flags a layout that exceeds capacity") {
    auto hw = make_hw(make_linear(2), 2);
    CompiledProgram prog;
    prog.num_qubits = 3;
    prog.initial_layout = {{0, 0, 0}, {1, 0, 1}, {2, 0, 2}};
    auto rep = validate(prog, hw);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("validate flags two ions in transit at one node") {
    auto hw = make_hw(make_linear(2), 4);
    CompiledProgram prog;
    prog.num_qubits = 2;
    prog.initial_layout = {{0, 0, 0}, {1, 0, 1}};
    prog.instructions.push_back({InstrKind::Split, 1, -1, 0, 0, -1, kTagTransit});
    prog.instructions.push_back({InstrKind::Split, 0, -1, 0, 0, -1, kTagTransit});
    auto rep = validate(prog, hw);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_violation.find("transit") != std::string::npos);
}

TEST_CASE("validate flags out-of-order source ops per qubit") {
    auto hw = make_hw(make_linear(1), 4);
    CompiledProgram prog;
    prog.num_qubits = 2;
    prog.initial_layout = {{0, 0, 0}, {1, 0, 1}};
    prog.instructions.push_back({InstrKind::Gate1q, 0, -1, 0, -1, -1, 1});
    prog.instructions.push_back({InstrKind::Gate1q, 0, -1, 0, -1, -1, 0});
    CHECK_FALSE(validate(prog, hw).ok);
}

TEST_CASE("compiled programs pass validation across shapes and methods") {
    for (auto reorder : {ReorderMethod::GS, ReorderMethod::IS})
        for (auto gate : {GateImpl::FM, GateImpl::AM1}) {
            Circuit c;
            c.num_qubits = 9;
            for (int i = 0; i < 8; ++i) c.add_2q(i, (i + 3) % 9);
            for (int i = 0; i < 9; ++i) c.add_measure(i);
            auto hw = make_hw(make_grid(2, 3), 4, gate, reorder);
            auto prog = compile(c, hw);
            auto rep = validate(prog, hw);
            INFO(rep.first_violation);
            CHECK(rep.ok);
        }
}
