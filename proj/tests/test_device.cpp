#include <functional>
#include <set>

#include "doctest.h"
#include "qccd/device.hpp"

using namespace qccd;

namespace {

int count_junctions(const DeviceGraph& g) {
    int n = 0;
    for (const auto& node : g.nodes)
        if (node.kind == NodeKind::Junction) ++n;
    return n;
}

}  // namespace

TEST_CASE("make_linear") {
    auto g = make_linear(6);
    CHECK(g.trap_ids().size() == 6);
    CHECK(g.segments.size() == 5);
    CHECK(count_junctions(g) == 0);

    auto g1 = make_linear(1);
    CHECK(g1.trap_ids().size() == 1);
    CHECK(g1.segments.empty());

    auto g3 = make_linear(3);
    CHECK(g3.adj[1] == std::vector<int>{0, 2});
    CHECK_THROWS(make_linear(0));
}

TEST_CASE("make_grid 2x2 matches the 4-trap/5-segment/2-junction layout") {
    auto g = make_grid(2, 2);
    CHECK(g.trap_ids().size() == 4);
    CHECK(count_junctions(g) == 2);
    CHECK(g.segments.size() == 5);
    for (const auto& n : g.nodes)
        if (n.kind == NodeKind::Junction) CHECK(g.degree(n.id) == 3);
}

TEST_CASE("make_grid 2x3") {
    auto g = make_grid(2, 3);
    CHECK(g.trap_ids().size() == 6);
    CHECK(count_junctions(g) == 4);
    CHECK(g.segments.size() == 10);
}

TEST_CASE("make_grid interior rows get X junctions") {
    auto g = make_grid(3, 2);
    // junction ids follow the traps; middle-row junction is the second one
    std::vector<int> juncs;
    for (const auto& n : g.nodes)
        if (n.kind == NodeKind::Junction) juncs.push_back(n.id);
    REQUIRE(juncs.size() == 3);
    CHECK(g.degree(juncs[0]) == 3);
    CHECK(g.degree(juncs[1]) == 4);
    CHECK(g.degree(juncs[2]) == 3);
    CHECK_THROWS(make_grid(1, 3));
    CHECK_THROWS(make_grid(3, 1));
}

TEST_CASE("grid junction degree is 4 iff the row is interior") {
    for (int rows : {2, 3, 4})
        for (int cols : {2, 3}) {
            auto g = make_grid(rows, cols);
            for (const auto& n : g.nodes) {
                if (n.kind != NodeKind::Junction) continue;
                int row = (n.id - rows * cols) / (cols - 1);
                bool interior = row > 0 && row < rows - 1;
                CHECK(g.degree(n.id) == (interior ? 4 : 3));
            }
        }
}

TEST_CASE("custom graph invariants") {
    DeviceGraph g;
    g.nodes = {{0, NodeKind::Trap}, {1, NodeKind::Junction}};
    g.segments = {{0, 0, 1}};
    CHECK_THROWS(g.finalize());  // junction degree must be 3 or 4

    DeviceGraph g2;
    g2.nodes = {{0, NodeKind::Trap}, {1, NodeKind::Trap}};
    g2.segments = {{0, 0, 1}, {1, 0, 1}};
    CHECK_THROWS(g2.finalize());  // duplicate segment

    DeviceGraph g3;
    g3.nodes = {{0, NodeKind::Trap}, {1, NodeKind::Trap}};
    g3.segments = {};
    CHECK_THROWS(g3.finalize());  // disconnected
}

TEST_CASE("shortest path on a linear device") {
    auto g = make_linear(6);
    RouteCostModel cm;
    Occupancy empty(g.nodes.size(), 0);

    auto p = shortest_shuttle_path(g, 0, 2, cm, empty);
    CHECK(p.nodes == std::vector<int>{0, 1, 2});

    auto self = shortest_shuttle_path(g, 0, 0, cm, empty);
    CHECK(self.nodes.empty());

    // occupied intermediate trap is priced (merge + reorder + split)
    Occupancy occ(g.nodes.size(), 0);
    occ[1] = 4;
    auto pr = shortest_shuttle_path(g, 0, 2, cm, occ);
    CHECK(pr.cost > p.cost);
}

TEST_CASE("shortest path through a 2x2 grid avoids traps") {
    auto g = make_grid(2, 2);
    RouteCostModel cm;
    Occupancy occ(g.nodes.size(), 5);  // all traps busy; junctions ignored
    // T(0,0)=0 to T(1,0)=2 via the two junctions
    auto p = shortest_shuttle_path(g, 0, 2, cm, occ);
    REQUIRE(p.nodes.size() == 4);
    CHECK_FALSE(g.is_trap(p.nodes[1]));
    CHECK_FALSE(g.is_trap(p.nodes[2]));
    // 3 segments + 2 Y-crossings
    CHECK(p.cost == doctest::Approx(3 * 5.0 + 2 * 100.0));
}

TEST_CASE("shortest path matches brute force on small graphs") {
    RouteCostModel cm;
    cm.gate_impl = GateImpl::AM2;

    auto brute = [&](const DeviceGraph& g, int from, int to, const Occupancy& occ) {
        double best = 1e300;
        std::vector<int> path{from};
        std::set<int> used{from};
        std::function<void(int)> dfs = [&](int u) {
            if (u == to) {
                double cost = 0.0;
                for (size_t i = 0; i + 1 < path.size(); ++i) {
                    cost += cm.physics.move_per_segment;
                    int v = path[i + 1];
                    if (v == to) continue;
                    cost += g.is_trap(v) ? cm.transit_trap_time(occ[v])
                                         : cm.cross_time(g, v);
                }
                best = std::min(best, cost);
                return;
            }
            for (int v : g.adj[u]) {
                if (used.count(v)) continue;
                used.insert(v);
                path.push_back(v);
                dfs(v);
                path.pop_back();
                used.erase(v);
            }
        };
        dfs(from);
        return best;
    };

    for (const auto& g : {make_linear(5), make_grid(2, 2)}) {
        Occupancy occ(g.nodes.size(), 0);
        for (size_t i = 0; i < occ.size(); ++i)
            if (g.is_trap(static_cast<int>(i))) occ[i] = static_cast<int>(i) % 3;
        auto traps = g.trap_ids();
        for (int a : traps)
            for (int b : traps) {
                if (a == b) continue;
                auto p = shortest_shuttle_path(g, a, b, cm, occ);
                CHECK(p.cost == doctest::Approx(brute(g, a, b, occ)).epsilon(1e-9));
            }
    }
}

TEST_CASE("hardware config JSON round-trip") {
    auto hw = parse_hardware_config(R"({
        "topology": {"type": "grid", "rows": 2, "cols": 3},
        "capacity": 17, "gate": "PM", "reorder": "IS",
        "physics": {"k1": 0.2, "gamma": 5.0,
                    "shuttle_times": {"move_per_segment": 7.5}}
    })");
    CHECK(hw.graph.trap_ids().size() == 6);
    CHECK(hw.capacity == 17);
    CHECK(hw.gate_impl == GateImpl::PM);
    CHECK(hw.reorder == ReorderMethod::IS);
    CHECK(hw.physics.k1 == doctest::Approx(0.2));
    CHECK(hw.physics.gamma == doctest::Approx(5.0));
    CHECK(hw.physics.move_per_segment == doctest::Approx(7.5));

    auto hw2 = parse_hardware_config(emit_hardware_config(hw));
    CHECK(hw2.capacity == hw.capacity);
    CHECK(hw2.graph.segments.size() == hw.graph.segments.size());
    CHECK(hw2.physics.k1 == doctest::Approx(hw.physics.k1));

    CHECK_THROWS(parse_hardware_config(R"({"topology":{"type":"ring","traps":4}})"));
    CHECK_THROWS(parse_hardware_config(R"({"capacity": 10})"));
}
