#include "qccd/device.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace qccd {

int DeviceGraph::segment_between(int u, int v) const {
    for (size_t i = 0; i < adj[u].size(); ++i)
        if (adj[u][i] == v) return adj_seg[u][i];
    return -1;
}

std::vector<int> DeviceGraph::trap_ids() const {
    std::vector<int> out;
    for (const auto& n : nodes)
        if (n.kind == NodeKind::Trap) out.push_back(n.id);
    return out;
}

bool DeviceGraph::exit_at_back(int trap, int toward_neighbor) const {
    const auto& nb = adj[trap];
    if (nb.size() == 1) return true;
    return toward_neighbor == nb.back();
}

void DeviceGraph::finalize() {
    adj.assign(nodes.size(), {});
    adj_seg.assign(nodes.size(), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& s : segments) {
        if (s.a == s.b) throw std::invalid_argument("segment endpoints must be distinct");
        auto key = std::minmax(s.a, s.b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate segment between nodes");
        adj[s.a].push_back(s.b);
        adj[s.b].push_back(s.a);
    }
    // sort neighbors, keep segment ids aligned
    for (size_t n = 0; n < nodes.size(); ++n) {
        std::sort(adj[n].begin(), adj[n].end());
        adj_seg[n].resize(adj[n].size());
        for (size_t i = 0; i < adj[n].size(); ++i) {
            for (const auto& s : segments) {
                if ((s.a == static_cast<int>(n) && s.b == adj[n][i]) ||
                    (s.b == static_cast<int>(n) && s.a == adj[n][i]))
                    adj_seg[n][i] = s.id;
            }
        }
    }
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::Junction) {
            int d = degree(n.id);
            if (d != 3 && d != 4)
                throw std::invalid_argument("junction degree must be 3 or 4");
        } else {
            if (nodes.size() > 1 && degree(n.id) < 1)
                throw std::invalid_argument("trap must have degree >= 1");
            if (degree(n.id) > 2)
                throw std::invalid_argument("trap degree > 2 is not supported");
        }
    }
    // connectivity
    if (!nodes.empty()) {
        std::vector<bool> vis(nodes.size(), false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        size_t count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (!vis[v]) {
                    vis[v] = true;
                    ++count;
                    q.push(v);
                }
        }
        if (count != nodes.size())
            throw std::invalid_argument("device graph must be connected");
    }
}

DeviceGraph make_linear(int n_traps) {
    if (n_traps < 1) throw std::invalid_argument("make_linear: need >= 1 trap");
    DeviceGraph g;
    for (int i = 0; i < n_traps; ++i) g.nodes.push_back({i, NodeKind::Trap});
    for (int i = 0; i + 1 < n_traps; ++i) g.segments.push_back({i, i, i + 1});
    g.finalize();
    return g;
}

DeviceGraph make_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("make_grid: need rows,cols >= 2");
    DeviceGraph g;
    auto trap_id = [&](int r, int c) { return r * cols + c; };
    auto junc_id = [&](int r, int c) { return rows * cols + r * (cols - 1) + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) g.nodes.push_back({trap_id(r, c), NodeKind::Trap});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            g.nodes.push_back({junc_id(r, c), NodeKind::Junction});
    int sid = 0;
    // horizontal: T(r,c) - J(r,c) - T(r,c+1)
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            g.segments.push_back({sid++, trap_id(r, c), junc_id(r, c)});
            g.segments.push_back({sid++, junc_id(r, c), trap_id(r, c + 1)});
        }
    // vertical: J(r,c) - J(r+1,c)
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            g.segments.push_back({sid++, junc_id(r, c), junc_id(r + 1, c)});
    g.finalize();
    return g;
}

double RouteCostModel::cross_time(const DeviceGraph& g, int junction) const {
    return g.degree(junction) == 4 ? physics.x_cross_time : physics.y_cross_time;
}

double RouteCostModel::reorder_time(int distance, int n_chain) const {
    if (distance <= 0) return 0.0;
    if (reorder == ReorderMethod::GS)
        return 3.0 * gate_time(gate_impl, distance, n_chain);
    return distance * (physics.split_time + physics.t_is_rotation + physics.merge_time);
}

double RouteCostModel::transit_trap_time(int n_resident) const {
    if (n_resident <= 0) return 0.0;
    // merge at entry end, reorder across the chain, split at exit end
    return physics.merge_time + reorder_time(n_resident, n_resident + 1) +
           physics.split_time;
}

Path shortest_shuttle_path(const DeviceGraph& g, int from_trap, int to_trap,
                           const RouteCostModel& cm, const Occupancy& occ) {
    if (!g.is_trap(from_trap) || !g.is_trap(to_trap))
        throw std::invalid_argument("shortest_shuttle_path: endpoints must be traps");
    Path path;
    if (from_trap == to_trap) return path;

    constexpr double kInf = 1e300;
    constexpr double kEps = 1e-9;
    size_t n = g.nodes.size();
    std::vector<double> dist(n, kInf);
    std::vector<int> parent(n, -1);
    auto node_weight = [&](int u) {
        if (g.is_trap(u)) {
            int res = u < static_cast<int>(occ.size()) ? occ[u] : 0;
            return cm.transit_trap_time(res);
        }
        return cm.cross_time(g, u);
    };
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[from_trap] = 0.0;
    pq.push({0.0, from_trap});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u] + kEps) continue;
        double leave = dist[u] + (u == from_trap ? 0.0 : node_weight(u));
        for (int v : g.adj[u]) {
            double nd = leave + cm.physics.move_per_segment;
            if (nd < dist[v] - kEps ||
                (std::abs(nd - dist[v]) <= kEps && parent[v] >= 0 && u < parent[v])) {
                dist[v] = std::min(nd, dist[v]);
                parent[v] = u;
                pq.push({nd, v});
            }
        }
    }
    if (dist[to_trap] >= kInf)
        throw std::invalid_argument("shortest_shuttle_path: endpoints disconnected");
    for (int u = to_trap; u != -1; u = parent[u]) path.nodes.push_back(u);
    std::reverse(path.nodes.begin(), path.nodes.end());
    path.cost = dist[to_trap];
    return path;
}

namespace {

PhysicsParams parse_physics(const nlohmann::json& j) {
    PhysicsParams p;
    auto get = [&](const char* key, double& field) {
        if (j.contains(key)) field = j.at(key).get<double>();
    };
    get("k1", p.k1);
    get("k2", p.k2);
    get("gamma", p.gamma);
    get("A0", p.a0);
    get("a0", p.a0);
    get("t_1q", p.t_1q);
    get("f_1q_err", p.f_1q_err);
    get("t_meas", p.t_meas);
    get("f_meas_err", p.f_meas_err);
    get("t_is_rotation", p.t_is_rotation);
    if (j.contains("shuttle_times")) {
        const auto& st = j.at("shuttle_times");
        auto gs = [&](const char* key, double& field) {
            if (st.contains(key)) field = st.at(key).get<double>();
        };
        gs("move_per_segment", p.move_per_segment);
        gs("split", p.split_time);
        gs("merge", p.merge_time);
        gs("y_cross", p.y_cross_time);
        gs("x_cross", p.x_cross_time);
    }
    p.check();
    return p;
}

}  // namespace

HardwareConfig parse_hardware_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("device JSON: ") + e.what());
    }
    HardwareConfig hw;
    if (!j.contains("topology"))
        throw std::invalid_argument("device JSON: missing $.topology");
    const auto& topo = j.at("topology");
    std::string type = topo.at("type").get<std::string>();
    if (type == "linear") {
        int traps = topo.at("traps").get<int>();
        hw.graph = make_linear(traps);
        hw.topology_desc = "linear" + std::to_string(traps);
    } else if (type == "grid") {
        int rows = topo.at("rows").get<int>();
        int cols = topo.at("cols").get<int>();
        hw.graph = make_grid(rows, cols);
        hw.topology_desc = "grid" + std::to_string(rows) + "x" + std::to_string(cols);
    } else if (type == "custom") {
        DeviceGraph g;
        int id = 0;
        for (const auto& n : topo.at("nodes")) {
            std::string kind = n.get<std::string>();
            if (kind == "trap")
                g.nodes.push_back({id, NodeKind::Trap});
            else if (kind == "junction")
                g.nodes.push_back({id, NodeKind::Junction});
            else
                throw std::invalid_argument("device JSON: node kind must be trap|junction");
            ++id;
        }
        int sid = 0;
        for (const auto& s : topo.at("segments")) {
            int a = s.at(0).get<int>();
            int b = s.at(1).get<int>();
            if (a < 0 || b < 0 || a >= id || b >= id)
                throw std::invalid_argument("device JSON: segment endpoint out of range");
            g.segments.push_back({sid++, std::min(a, b), std::max(a, b)});
        }
        g.finalize();
        hw.graph = std::move(g);
        hw.topology_desc = "custom";
    } else {
        throw std::invalid_argument("device JSON: unknown topology type " + type);
    }
    if (j.contains("capacity")) hw.capacity = j.at("capacity").get<int>();
    if (hw.capacity < 2) throw std::invalid_argument("device JSON: capacity must be >= 2");
    if (j.contains("gate")) hw.gate_impl = parse_gate_impl(j.at("gate").get<std::string>());
    if (j.contains("reorder")) hw.reorder = parse_reorder(j.at("reorder").get<std::string>());
    if (j.contains("physics")) hw.physics = parse_physics(j.at("physics"));
    return hw;
}

std::string emit_hardware_config(const HardwareConfig& hw) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json topo;
    topo["type"] = "custom";
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& n : hw.graph.nodes)
        nodes.push_back(n.kind == NodeKind::Trap ? "trap" : "junction");
    topo["nodes"] = nodes;
    auto segs = nlohmann::ordered_json::array();
    for (const auto& s : hw.graph.segments) segs.push_back({s.a, s.b});
    topo["segments"] = segs;
    j["topology"] = topo;
    j["capacity"] = hw.capacity;
    j["gate"] = to_string(hw.gate_impl);
    j["reorder"] = to_string(hw.reorder);
    const auto& p = hw.physics;
    nlohmann::ordered_json phys;
    phys["k1"] = p.k1;
    phys["k2"] = p.k2;
    phys["gamma"] = p.gamma;
    phys["A0"] = p.a0;
    phys["t_1q"] = p.t_1q;
    phys["f_1q_err"] = p.f_1q_err;
    phys["t_meas"] = p.t_meas;
    phys["f_meas_err"] = p.f_meas_err;
    phys["t_is_rotation"] = p.t_is_rotation;
    phys["shuttle_times"] = {{"move_per_segment", p.move_per_segment},
                             {"split", p.split_time},
                             {"merge", p.merge_time},
                             {"y_cross", p.y_cross_time},
                             {"x_cross", p.x_cross_time}};
    j["physics"] = phys;
    return j.dump(2) + "\n";
}

}  // namespace qccd
