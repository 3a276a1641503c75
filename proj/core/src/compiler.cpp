#include "qccd/compiler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "exec_engine.hpp"
#include "json.hpp"
#include "machine.hpp"

namespace qccd {

std::string to_string(InstrKind k) {
    switch (k) {
        case InstrKind::Gate1q: return "gate1q";
        case InstrKind::GateMS: return "gate_ms";
        case InstrKind::Measure: return "measure";
        case InstrKind::Split: return "split";
        case InstrKind::Move: return "move";
        case InstrKind::Cross: return "cross";
        case InstrKind::Merge: return "merge";
        case InstrKind::SwapGS: return "swap_gs";
        case InstrKind::SwapIS: return "swap_is";
        case InstrKind::Wait: return "wait";
    }
    return "?";
}

namespace {

InstrKind instr_kind_from(const std::string& s) {
    for (InstrKind k :
         {InstrKind::Gate1q, InstrKind::GateMS, InstrKind::Measure, InstrKind::Split,
          InstrKind::Move, InstrKind::Cross, InstrKind::Merge, InstrKind::SwapGS,
          InstrKind::SwapIS, InstrKind::Wait})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown instruction kind: " + s);
}

}  // namespace

std::vector<LayoutEntry> initial_map(const Circuit& c, const HardwareConfig& hw) {
    const int usable = hw.capacity - 2;  // 2 buffer slots per trap for shuttles
    auto traps = hw.graph.trap_ids();
    if (usable < 1 || static_cast<long>(usable) * traps.size() < c.num_qubits)
        throw CompileError(-1, "insufficient device capacity: " +
                                   std::to_string(c.num_qubits) + " qubits, " +
                                   std::to_string(std::max(usable, 0) *
                                                  static_cast<int>(traps.size())) +
                                   " usable slots");

    // order qubits by first use, ties by qubit index; never-used qubits last
    std::vector<int> first_use(c.num_qubits, std::numeric_limits<int>::max());
    for (size_t i = 0; i < c.ops.size(); ++i)
        for (int q : {c.ops[i].q0, c.ops[i].q1})
            if (q >= 0) first_use[q] = std::min(first_use[q], static_cast<int>(i));
    std::vector<int> order(c.num_qubits);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return first_use[a] < first_use[b];
    });

    std::vector<LayoutEntry> layout;
    size_t trap_idx = 0;
    int pos = 0;
    for (int q : order) {
        if (pos == usable) {
            ++trap_idx;
            pos = 0;
        }
        layout.push_back({q, traps[trap_idx], pos++});
    }
    std::sort(layout.begin(), layout.end(),
              [](const auto& a, const auto& b) { return a.qubit < b.qubit; });
    return layout;
}

namespace {

class Scheduler {
public:
    Scheduler(const Circuit& c, const HardwareConfig& hw,
              const std::vector<LayoutEntry>& layout)
        : circuit_(c), hw_(hw) {
        machine_.init(hw.graph, hw.capacity, c.num_qubits, layout);
        future_.resize(c.num_qubits);
        for (size_t i = 0; i < c.ops.size(); ++i) {
            const auto& op = c.ops[i];
            if (op.kind != OpKind::TwoQubit) continue;
            future_[op.q0].push_back({static_cast<int>(i), op.q1});
            future_[op.q1].push_back({static_cast<int>(i), op.q0});
        }
        cm_.gate_impl = hw.gate_impl;
        cm_.reorder = hw.reorder;
        cm_.physics = hw.physics;
        prog_.num_qubits = c.num_qubits;
        prog_.initial_layout = layout;
    }

    CompiledProgram run() {
        for (size_t i = 0; i < circuit_.ops.size(); ++i) {
            const auto& op = circuit_.ops[i];
            int id = static_cast<int>(i);
            switch (op.kind) {
                case OpKind::OneQubit:
                    emit({InstrKind::Gate1q, op.q0, -1, machine_.ion_trap[op.q0], -1, -1, id});
                    break;
                case OpKind::Measure:
                    emit({InstrKind::Measure, op.q0, -1, machine_.ion_trap[op.q0], -1, -1, id});
                    break;
                case OpKind::TwoQubit: {
                    ensure_colocated(op.q0, op.q1, id);
                    emit({InstrKind::GateMS, op.q0, op.q1, machine_.ion_trap[op.q0], -1, -1,
                          id});
                    break;
                }
            }
        }
        return std::move(prog_);
    }

private:
    void emit(Instruction ins) { prog_.instructions.push_back(ins); }

    // Moves `ion` from its chain position to `target` within `trap`.
    void emit_reorder(int trap, int ion, int target) {
        int pos = machine_.pos_of(ion);
        if (pos == target) return;
        if (hw_.reorder == ReorderMethod::GS) {
            int other = machine_.chains[trap][target];
            emit({InstrKind::SwapGS, ion, other, trap, -1, -1, kTagReorder});
            machine_.swap_positions(trap, pos, target);
        } else {
            while (pos < target) {
                emit({InstrKind::SwapIS, ion, -1, trap, -1, pos, kTagReorder});
                machine_.swap_positions(trap, pos, pos + 1);
                ++pos;
            }
            while (pos > target) {
                emit({InstrKind::SwapIS, ion, -1, trap, -1, pos - 1, kTagReorder});
                machine_.swap_positions(trap, pos, pos - 1);
                --pos;
            }
        }
    }

    // Modeled time of moving `ion` from `src` to `dst` and then running the
    // gate against `partner` there, for direction choice.
    double transit_cost(int ion, int partner, int src, int dst,
                        Path& path_out) const {
        auto occ = machine_.occupancy();
        Path path = shortest_shuttle_path(hw_.graph, src, dst, cm_, occ);
        double cost = path.cost;
        int exit_target = machine_.exit_pos(src, path.nodes[1]);
        int d = std::abs(machine_.pos_of(ion) - exit_target);
        cost += cm_.reorder_time(d, machine_.chain_len(src));
        if (machine_.chain_len(src) >= 2) cost += hw_.physics.split_time;
        if (machine_.chain_len(dst) >= 1) cost += hw_.physics.merge_time;
        // the gate itself: the arriving ion joins the entry end of `dst`
        int n_after = machine_.chain_len(dst) + 1;
        int prev = path.nodes[path.nodes.size() - 2];
        int gate_d = hw_.graph.exit_at_back(dst, prev)
                         ? n_after - 1 - machine_.pos_of(partner)
                         : machine_.pos_of(partner) + 1;
        cost += gate_time(hw_.gate_impl, std::min(gate_d, n_after - 1), n_after);
        path_out = std::move(path);
        return cost;
    }

    bool feasible(int src, int dst, const Path& path) const {
        if (machine_.chain_len(dst) >= hw_.capacity) return false;
        for (size_t i = 1; i + 1 < path.nodes.size(); ++i) {
            int v = path.nodes[i];
            if (hw_.graph.is_trap(v) && machine_.chain_len(v) >= hw_.capacity &&
                machine_.chain_len(v) > 0)
                return false;
        }
        return true;
    }

    // First trap along the route that has no room for a pass-through or merge.
    int blocking_trap(int dst, const Path& path) const {
        if (machine_.chain_len(dst) >= hw_.capacity) return dst;
        for (size_t i = 1; i + 1 < path.nodes.size(); ++i) {
            int v = path.nodes[i];
            if (hw_.graph.is_trap(v) && machine_.chain_len(v) >= hw_.capacity &&
                machine_.chain_len(v) > 0)
                return v;
        }
        return -1;
    }

    // Partner of `ion`'s next two-qubit gate after `op_id`, or -1.
    int next_partner(int ion, int op_id) const {
        const auto& f = future_[ion];
        auto it = std::upper_bound(
            f.begin(), f.end(), op_id,
            [](int id, const std::pair<int, int>& e) { return id < e.first; });
        return it == f.end() ? -1 : it->second;
    }

    // Moves one bystander ion from `src` to the adjacent-in-path trap `dst`;
    // the sub-path between consecutive traps contains only junctions.
    bool hop_one(int src, int dst, int qa, int qb, int op_id) {
        auto occ = machine_.occupancy();
        Path p = shortest_shuttle_path(hw_.graph, src, dst, cm_, occ);
        if (p.nodes.empty() || !feasible(src, dst, p)) return false;
        int exit_target = machine_.exit_pos(src, p.nodes[1]);
        // prefer evicting an ion whose next gate partner already lives in
        // `dst` (or that has no future 2q gate), to avoid ping-pong transits
        int evict = -1, evict_score = std::numeric_limits<int>::max();
        for (int ion : machine_.chains[src]) {
            if (ion == qa || ion == qb) continue;
            int partner = next_partner(ion, op_id);
            int affinity = 2;
            if (partner < 0)
                affinity = 1;
            else if (machine_.ion_trap[partner] == dst)
                affinity = 0;
            int score = affinity * 1000 + std::abs(machine_.pos_of(ion) - exit_target);
            if (score < evict_score) {
                evict_score = score;
                evict = ion;
            }
        }
        if (evict < 0) return false;
        emit_transit(evict, src, dst, p, op_id);
        return true;
    }

    // Modeled cost of the cheapest eviction route from `full` to a trap
    // with space, or infinity when every trap is full.
    double room_cost(int full) const {
        auto occ = machine_.occupancy();
        double best = std::numeric_limits<double>::infinity();
        for (int t : hw_.graph.trap_ids()) {
            if (t == full || machine_.chain_len(t) >= hw_.capacity) continue;
            Path p = shortest_shuttle_path(hw_.graph, full, t, cm_, occ);
            if (p.nodes.empty()) continue;
            double cost = p.cost;
            if (machine_.chain_len(t) >= 1) cost += hw_.physics.merge_time;
            best = std::min(best, cost);
        }
        return best;
    }

    // Frees one slot in `full` by cascading single-ion hops along the route
    // to the nearest trap that still has space.
    bool try_make_room(int full, int qa, int qb, int op_id) {
        auto occ = machine_.occupancy();
        double best = std::numeric_limits<double>::infinity();
        Path best_path;
        for (int t : hw_.graph.trap_ids()) {
            if (t == full || machine_.chain_len(t) >= hw_.capacity) continue;
            Path p = shortest_shuttle_path(hw_.graph, full, t, cm_, occ);
            if (p.nodes.empty()) continue;
            double cost = p.cost;
            if (machine_.chain_len(t) >= 1) cost += hw_.physics.merge_time;
            if (cost < best) {
                best = cost;
                best_path = std::move(p);
            }
        }
        if (best_path.nodes.empty()) return false;

        std::vector<int> traps;  // trap sequence along the chosen route
        for (int v : best_path.nodes)
            if (hw_.graph.is_trap(v)) traps.push_back(v);
        // first trap past `full` with space; everything before it must shift
        size_t j = 1;
        while (j + 1 < traps.size() && machine_.chain_len(traps[j]) >= hw_.capacity)
            ++j;
        for (size_t i = j; i >= 1; --i)
            if (machine_.chain_len(traps[i - 1]) > 0 &&
                !hop_one(traps[i - 1], traps[i], qa, qb, op_id))
                return false;
        return true;
    }

    void ensure_colocated(int a, int b, int op_id) {
        int rounds = 2 * static_cast<int>(hw_.graph.trap_ids().size()) + 2;
        for (int round = 0; round < rounds; ++round) {
            int ta = machine_.ion_trap[a];
            int tb = machine_.ion_trap[b];
            if (ta == tb) return;
            Path path_a, path_b;
            double cost_a = transit_cost(a, b, ta, tb, path_a);
            double cost_b = transit_cost(b, a, tb, ta, path_b);
            bool ok_a = feasible(ta, tb, path_a);
            bool ok_b = feasible(tb, ta, path_b);
            if (ok_a || ok_b) {
                bool move_a;
                if (ok_a != ok_b) {
                    move_a = ok_a;
                } else if (cost_a != cost_b) {
                    move_a = cost_a < cost_b;
                } else {
                    move_a = ta > tb;  // tie: move the ion from the higher-id trap
                }
                if (move_a)
                    emit_transit(a, ta, tb, path_a, op_id);
                else
                    emit_transit(b, tb, ta, path_b, op_id);
                return;
            }
            // both routes blocked by a full trap: clear the blocking trap
            // that is closest to free space (shortest eviction cascade)
            int cand_a = blocking_trap(tb, path_a);
            int cand_b = blocking_trap(ta, path_b);
            double room_a = cand_a >= 0 ? room_cost(cand_a)
                                        : std::numeric_limits<double>::infinity();
            double room_b = cand_b >= 0 ? room_cost(cand_b)
                                        : std::numeric_limits<double>::infinity();
            bool a_first = room_a < room_b ||
                           (room_a == room_b && cost_a <= cost_b);
            int first = a_first ? cand_a : cand_b;
            int second = a_first ? cand_b : cand_a;
            if (!(first >= 0 && try_make_room(first, a, b, op_id)) &&
                !(second >= 0 && try_make_room(second, a, b, op_id)))
                throw CompileError(op_id,
                                   "op " + std::to_string(op_id) +
                                       ": no trap has buffer space for a shuttle");
        }
        throw CompileError(op_id, "op " + std::to_string(op_id) +
                                      ": could not clear space for a shuttle");
    }

    void emit_transit(int ion, int src, int dst, const Path& path, int op_id) {
        TransitLeg leg;
        leg.ion = ion;
        for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
            leg.segments.push_back(hw_.graph.segment_between(path.nodes[i], path.nodes[i + 1]));
            if (i + 1 < path.nodes.size() - 1 && !hw_.graph.is_trap(path.nodes[i + 1]))
                leg.junctions.push_back(path.nodes[i + 1]);
        }

        // position the ion at the exit end, then depart
        int next = path.nodes[1];
        emit_reorder(src, ion, machine_.exit_pos(src, next));
        leg.first_instr = static_cast<int>(prog_.instructions.size());
        int exit_seg = hw_.graph.segment_between(src, next);
        if (machine_.chain_len(src) >= 2)
            emit({InstrKind::Split, ion, -1, src, exit_seg, -1, op_id});
        machine_.remove_ion(src, ion);

        for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
            int u = path.nodes[i];
            int v = path.nodes[i + 1];
            int seg = hw_.graph.segment_between(u, v);
            emit({InstrKind::Move, ion, -1, -1, seg, -1, op_id});
            if (v == dst) break;
            if (!hw_.graph.is_trap(v)) {
                emit({InstrKind::Cross, ion, -1, v, -1, -1, op_id});
            } else if (machine_.chain_len(v) > 0) {
                // pass-through merge, reorder to far end, split
                int entry_seg = seg;
                bool at_back = hw_.graph.exit_at_back(v, u);
                emit({InstrKind::Merge, ion, -1, v, entry_seg, -1, op_id});
                machine_.insert_ion(v, ion, at_back);
                int nxt = path.nodes[i + 2];
                emit_reorder(v, ion, machine_.exit_pos(v, nxt));
                emit({InstrKind::Split, ion, -1, v, hw_.graph.segment_between(v, nxt), -1,
                      op_id});
                machine_.remove_ion(v, ion);
            }
            // empty trap: the ion passes straight through
        }

        int prev = path.nodes[path.nodes.size() - 2];
        int entry_seg = hw_.graph.segment_between(prev, dst);
        bool at_back = hw_.graph.exit_at_back(dst, prev);
        if (machine_.chain_len(dst) > 0) {
            emit({InstrKind::Merge, ion, -1, dst, entry_seg, -1, op_id});
        }
        machine_.insert_ion(dst, ion, at_back);
        leg.last_instr = static_cast<int>(prog_.instructions.size()) - 1;
        prog_.legs.push_back(std::move(leg));
    }

    const Circuit& circuit_;
    const HardwareConfig& hw_;
    std::vector<std::vector<std::pair<int, int>>> future_;  // per-qubit (op, partner)
    detail::Machine machine_;
    RouteCostModel cm_;
    CompiledProgram prog_;
};

}  // namespace

CompiledProgram schedule(const Circuit& c, const HardwareConfig& hw,
                         const std::vector<LayoutEntry>& layout) {
    return Scheduler(c, hw, layout).run();
}

CompiledProgram compile(const Circuit& c, const HardwareConfig& hw) {
    c.check();
    auto layout = initial_map(c, hw);
    auto prog = schedule(c, hw, layout);
    return route_parallel(std::move(prog), hw);
}

ValidationReport validate(const CompiledProgram& prog, const HardwareConfig& hw) {
    ValidationReport rep;
    auto fail = [&](size_t i, const std::string& msg) {
        rep.ok = false;
        rep.first_violation = "instr " + std::to_string(i) + " (" +
                              to_string(prog.instructions[i].kind) + "): " + msg;
    };

    detail::Machine m;
    try {
        m.init(hw.graph, hw.capacity, prog.num_qubits, prog.initial_layout);
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.first_violation = std::string("layout: ") + e.what();
        return rep;
    }
    const auto& g = hw.graph;
    for (size_t t = 0; t < m.chains.size(); ++t)
        if (static_cast<int>(m.chains[t].size()) > hw.capacity) {
            rep.ok = false;
            rep.first_violation =
                "initial layout exceeds capacity at trap " + std::to_string(t);
            return rep;
        }
    std::vector<int> ion_node(prog.num_qubits, -1);  // transit position
    std::vector<int> last_source_op(prog.num_qubits, -1);
    std::vector<int> transit_at(g.nodes.size(), -1);  // node -> in-transit ion

    auto enter_transit = [&](size_t i, int ion, int node) {
        if (transit_at[node] != -1 && transit_at[node] != ion) {
            fail(i, "two ions in transit at node " + std::to_string(node));
            return false;
        }
        if (ion_node[ion] >= 0) transit_at[ion_node[ion]] = -1;
        ion_node[ion] = node;
        transit_at[node] = ion;
        return true;
    };
    auto leave_transit = [&](int ion) {
        if (ion_node[ion] >= 0) transit_at[ion_node[ion]] = -1;
        ion_node[ion] = -1;
    };

    for (size_t i = 0; i < prog.instructions.size(); ++i) {
        const auto& ins = prog.instructions[i];
        auto check_order = [&](int ion) {
            if (ins.source_op >= 0 && ins.source_op < last_source_op[ion]) {
                fail(i, "source-op order violated for qubit " + std::to_string(ion));
                return false;
            }
            if (ins.source_op >= 0) last_source_op[ion] = ins.source_op;
            return true;
        };
        switch (ins.kind) {
            case InstrKind::Gate1q:
            case InstrKind::Measure: {
                if (m.ion_trap[ins.ion] != ins.node) return fail(i, "ion not in trap"), rep;
                if (!check_order(ins.ion)) return rep;
                break;
            }
            case InstrKind::GateMS: {
                if (ins.ion == ins.ion2) return fail(i, "identical operands"), rep;
                if (m.ion_trap[ins.ion] != ins.node || m.ion_trap[ins.ion2] != ins.node)
                    return fail(i, "GateMS operands not co-located"), rep;
                if (!check_order(ins.ion) || !check_order(ins.ion2)) return rep;
                break;
            }
            case InstrKind::SwapGS: {
                if (m.ion_trap[ins.ion] != ins.node || m.ion_trap[ins.ion2] != ins.node)
                    return fail(i, "SwapGS operands not co-located"), rep;
                m.swap_positions(ins.node, m.pos_of(ins.ion), m.pos_of(ins.ion2));
                break;
            }
            case InstrKind::SwapIS: {
                if (ins.pos < 0 || ins.pos + 1 >= m.chain_len(ins.node))
                    return fail(i, "SwapIS position out of range"), rep;
                m.swap_positions(ins.node, ins.pos, ins.pos + 1);
                break;
            }
            case InstrKind::Split: {
                if (m.ion_trap[ins.ion] != ins.node) return fail(i, "ion not in trap"), rep;
                const auto& seg = hw.graph.segments[ins.segment];
                int other = seg.a == ins.node ? seg.b : seg.a;
                if (seg.a != ins.node && seg.b != ins.node)
                    return fail(i, "split segment not adjacent to trap"), rep;
                if (m.pos_of(ins.ion) != m.exit_pos(ins.node, other))
                    return fail(i, "split ion not at the exit end"), rep;
                m.remove_ion(ins.node, ins.ion);
                if (!enter_transit(i, ins.ion, ins.node)) return rep;
                break;
            }
            case InstrKind::Move: {
                if (m.ion_trap[ins.ion] != -1) {
                    // departing a trap without a split (singleton chain)
                    int t = m.ion_trap[ins.ion];
                    m.remove_ion(t, ins.ion);
                    if (!enter_transit(i, ins.ion, t)) return rep;
                }
                const auto& seg = g.segments[ins.segment];
                if (seg.a != ion_node[ins.ion] && seg.b != ion_node[ins.ion])
                    return fail(i, "move segment not adjacent to ion position"), rep;
                int dest = seg.a == ion_node[ins.ion] ? seg.b : seg.a;
                if (!enter_transit(i, ins.ion, dest)) return rep;
                // deposit when arriving at an empty trap with no merge to follow
                if (g.is_trap(ion_node[ins.ion]) && m.chain_len(ion_node[ins.ion]) == 0) {
                    bool merge_next = false;
                    for (size_t j = i + 1; j < prog.instructions.size(); ++j) {
                        const auto& nx = prog.instructions[j];
                        if (nx.ion != ins.ion && nx.ion2 != ins.ion) continue;
                        merge_next = nx.kind == InstrKind::Merge;
                        break;
                    }
                    if (!merge_next) {
                        m.insert_ion(ion_node[ins.ion], ins.ion, true);
                        leave_transit(ins.ion);
                    }
                }
                break;
            }
            case InstrKind::Cross: {
                if (ion_node[ins.ion] != ins.node)
                    return fail(i, "cross at wrong junction"), rep;
                if (g.is_trap(ins.node)) return fail(i, "cross at non-junction"), rep;
                break;
            }
            case InstrKind::Merge: {
                const auto& seg = g.segments[ins.segment];
                if (seg.a != ins.node && seg.b != ins.node)
                    return fail(i, "merge segment not adjacent to trap"), rep;
                if (ion_node[ins.ion] != ins.node)
                    return fail(i, "merge ion has not reached the trap"), rep;
                if (m.chain_len(ins.node) >= hw.capacity)
                    return fail(i, "merge exceeds trap capacity"), rep;
                int other = seg.a == ins.node ? seg.b : seg.a;
                m.insert_ion(ins.node, ins.ion, g.exit_at_back(ins.node, other));
                leave_transit(ins.ion);
                break;
            }
            case InstrKind::Wait:
                break;
        }
        for (const auto& ch : m.chains)
            if (static_cast<int>(ch.size()) > hw.capacity)
                return fail(i, "trap capacity exceeded"), rep;
    }
    for (int q = 0; q < prog.num_qubits; ++q)
        if (ion_node[q] != -1) {
            rep.ok = false;
            rep.first_violation = "qubit " + std::to_string(q) +
                                  " left in transit at end of program";
            return rep;
        }

    // Timed audit: replay the realized schedule and confirm exclusive use of
    // every segment, junction and trap gate slot.
    detail::ExecResult res;
    try {
        res = detail::execute(prog, hw);
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.first_violation = std::string("replay: ") + e.what();
        return rep;
    }
    std::map<std::pair<char, int>, std::vector<std::pair<double, double>>> busy;
    for (size_t i = 0; i < res.events.size(); ++i) {
        const auto& ins = prog.instructions[i];
        const auto& ev = res.events[i];
        if (ev.end <= ev.start) continue;
        switch (ins.kind) {
            case InstrKind::Move:
                busy[{'s', ins.segment}].push_back({ev.start, ev.end});
                break;
            case InstrKind::Cross:
                busy[{'j', ins.node}].push_back({ev.start, ev.end});
                break;
            case InstrKind::Gate1q:
            case InstrKind::GateMS:
            case InstrKind::Measure:
            case InstrKind::SwapGS:
            case InstrKind::SwapIS:
                busy[{'t', ins.node}].push_back({ev.start, ev.end});
                break;
            default:
                break;
        }
    }
    for (auto& [key, iv] : busy) {
        std::sort(iv.begin(), iv.end());
        for (size_t k = 0; k + 1 < iv.size(); ++k)
            if (iv[k + 1].first < iv[k].second - 1e-9) {
                rep.ok = false;
                rep.first_violation =
                    std::string("overlapping occupancy on ") +
                    (key.first == 's' ? "segment " : key.first == 'j' ? "junction "
                                                                      : "trap ") +
                    std::to_string(key.second);
                return rep;
            }
    }
    return rep;
}

std::string emit_json_program(const CompiledProgram& prog) {
    nlohmann::ordered_json j;
    j["num_qubits"] = prog.num_qubits;
    j["initial_layout"] = nlohmann::ordered_json::array();
    for (const auto& e : prog.initial_layout)
        j["initial_layout"].push_back(
            {{"qubit", e.qubit}, {"trap", e.trap}, {"position", e.position}});
    j["instructions"] = nlohmann::ordered_json::array();
    for (const auto& ins : prog.instructions) {
        nlohmann::ordered_json o;
        o["kind"] = to_string(ins.kind);
        if (ins.ion >= 0) o["ion"] = ins.ion;
        if (ins.ion2 >= 0) o["ion2"] = ins.ion2;
        if (ins.node >= 0) o["node"] = ins.node;
        if (ins.segment >= 0) o["segment"] = ins.segment;
        if (ins.pos >= 0) o["pos"] = ins.pos;
        o["source_op"] = ins.source_op;
        j["instructions"].push_back(o);
    }
    j["legs"] = nlohmann::ordered_json::array();
    for (const auto& leg : prog.legs)
        j["legs"].push_back({{"first_instr", leg.first_instr},
                             {"last_instr", leg.last_instr},
                             {"ion", leg.ion},
                             {"segments", leg.segments},
                             {"junctions", leg.junctions}});
    return j.dump(2) + "\n";
}

CompiledProgram parse_json_program(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("program JSON: ") + e.what());
    }
    CompiledProgram prog;
    prog.num_qubits = j.at("num_qubits").get<int>();
    for (const auto& e : j.at("initial_layout"))
        prog.initial_layout.push_back({e.at("qubit").get<int>(), e.at("trap").get<int>(),
                                       e.at("position").get<int>()});
    for (const auto& o : j.at("instructions")) {
        Instruction ins;
        ins.kind = instr_kind_from(o.at("kind").get<std::string>());
        ins.ion = o.value("ion", -1);
        ins.ion2 = o.value("ion2", -1);
        ins.node = o.value("node", -1);
        ins.segment = o.value("segment", -1);
        ins.pos = o.value("pos", -1);
        ins.source_op = o.value("source_op", kTagTransit);
        prog.instructions.push_back(ins);
    }
    for (const auto& o : j.at("legs")) {
        TransitLeg leg;
        leg.first_instr = o.at("first_instr").get<int>();
        leg.last_instr = o.at("last_instr").get<int>();
        leg.ion = o.at("ion").get<int>();
        leg.segments = o.at("segments").get<std::vector<int>>();
        leg.junctions = o.at("junctions").get<std::vector<int>>();
        prog.legs.push_back(std::move(leg));
    }
    return prog;
}

}  // namespace qccd
