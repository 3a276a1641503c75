#include "exec_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "machine.hpp"

namespace qccd::detail {

namespace {

struct Busy {
    double until = 0.0;
    int writer = -1;
};

struct Constraint {
    double at = 0.0;
    int pred = -1;

    void consider(const Busy& b) {
        if (b.until > at) {
            at = b.until;
            pred = b.writer;
        }
    }
};

}  // namespace

ExecResult execute(const CompiledProgram& prog, const HardwareConfig& hw) {
    const auto& g = hw.graph;
    const auto& p = hw.physics;
    ExecResult res;
    res.events.resize(prog.instructions.size());
    res.leg_delay.assign(prog.legs.size(), 0.0);
    res.leg_wait_node.assign(prog.legs.size(), -1);

    Machine m;
    m.init(g, hw.capacity, prog.num_qubits, prog.initial_layout);

    std::vector<Busy> trap_busy(g.nodes.size());
    std::vector<Busy> seg_busy(g.segments.size());
    std::vector<Busy> junc_busy(g.nodes.size());
    std::vector<Busy> ion_avail(prog.num_qubits);
    std::vector<double> chain_e(g.nodes.size(), 0.0);
    std::vector<double> ion_e(prog.num_qubits, 0.0);
    std::vector<int> ion_node(prog.num_qubits, -1);

    std::vector<int> leg_of_first(prog.instructions.size(), -1);
    std::vector<int> leg_of_last(prog.instructions.size(), -1);
    for (size_t l = 0; l < prog.legs.size(); ++l) {
        leg_of_first[prog.legs[l].first_instr] = static_cast<int>(l);
        leg_of_last[prog.legs[l].last_instr] = static_cast<int>(l);
    }

    auto bump_energy = [&](double e) { res.max_energy = std::max(res.max_energy, e); };
    auto add_fidelity = [&](ExecEvent& ev, double f) {
        ev.fidelity *= f;
        res.log_fidelity += f > 0.0 ? std::log(f)
                                    : -std::numeric_limits<double>::infinity();
    };
    auto check = [](bool cond, const char* msg) {
        if (!cond) throw std::logic_error(std::string("replay violation: ") + msg);
    };

    for (size_t i = 0; i < prog.instructions.size(); ++i) {
        const auto& ins = prog.instructions[i];
        ExecEvent& ev = res.events[i];
        Constraint start;
        double dur = 0.0;

        switch (ins.kind) {
            case InstrKind::Gate1q:
            case InstrKind::Measure: {
                int t = ins.node;
                check(m.ion_trap[ins.ion] == t, "gate ion not in trap");
                start.consider(trap_busy[t]);
                start.consider(ion_avail[ins.ion]);
                bool meas = ins.kind == InstrKind::Measure;
                dur = meas ? p.t_meas : p.t_1q;
                add_fidelity(ev, meas ? measure_fidelity(p) : one_qubit_fidelity(p));
                ev.chain_len = m.chain_len(t);
                ev.n_bar = chain_e[t];
                ev.location = t;
                double end = start.at + dur;
                trap_busy[t] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::GateMS: {
                int t = ins.node;
                check(m.ion_trap[ins.ion] == t && m.ion_trap[ins.ion2] == t,
                      "GateMS ions not co-located");
                start.consider(trap_busy[t]);
                start.consider(ion_avail[ins.ion]);
                start.consider(ion_avail[ins.ion2]);
                int n = m.chain_len(t);
                int d = std::abs(m.pos_of(ins.ion) - m.pos_of(ins.ion2));
                double tau = gate_time(hw.gate_impl, d, n);
                auto f = two_qubit_fidelity(tau, chain_e[t], n, p);
                add_fidelity(ev, f.fidelity);
                ev.err_background = f.err_background;
                ev.err_motional = f.err_motional;
                res.err_background_sum += f.err_background;
                res.err_motional_sum += f.err_motional;
                ev.chain_len = n;
                ev.n_bar = chain_e[t];
                ev.location = t;
                dur = tau;
                double end = start.at + dur;
                trap_busy[t] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                ion_avail[ins.ion2] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::SwapGS: {
                int t = ins.node;
                check(m.ion_trap[ins.ion] == t && m.ion_trap[ins.ion2] == t,
                      "SwapGS ions not co-located");
                start.consider(trap_busy[t]);
                start.consider(ion_avail[ins.ion]);
                start.consider(ion_avail[ins.ion2]);
                int n = m.chain_len(t);
                int pa = m.pos_of(ins.ion);
                int pb = m.pos_of(ins.ion2);
                int d = std::abs(pa - pb);
                double tau = gate_time(hw.gate_impl, d, n);
                auto f = two_qubit_fidelity(tau, chain_e[t], n, p);
                for (int k = 0; k < 3; ++k) {
                    add_fidelity(ev, f.fidelity);
                    ev.err_background += f.err_background;
                    ev.err_motional += f.err_motional;
                }
                res.err_background_sum += 3.0 * f.err_background;
                res.err_motional_sum += 3.0 * f.err_motional;
                ev.chain_len = n;
                ev.n_bar = chain_e[t];
                ev.location = t;
                dur = 3.0 * tau;
                m.swap_positions(t, pa, pb);
                double end = start.at + dur;
                trap_busy[t] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                ion_avail[ins.ion2] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::SwapIS: {
                int t = ins.node;
                int n = m.chain_len(t);
                check(ins.pos >= 0 && ins.pos + 1 < n, "SwapIS position out of range");
                start.consider(trap_busy[t]);
                start.consider(ion_avail[ins.ion]);
                dur = p.split_time + p.t_is_rotation + p.merge_time;
                if (n > 2) {
                    // isolate the adjacent pair, rotate, recombine
                    auto se = heat_split(chain_e[t], n, n - 2, p);
                    chain_e[t] = heat_merge(se.left, se.right, p);
                } else {
                    chain_e[t] += 2.0 * p.k1;  // pair is the whole chain
                }
                bump_energy(chain_e[t]);
                ev.chain_len = n;
                ev.n_bar = chain_e[t];
                ev.location = t;
                m.swap_positions(t, ins.pos, ins.pos + 1);
                double end = start.at + dur;
                trap_busy[t] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::Split: {
                int t = ins.node;
                check(m.ion_trap[ins.ion] == t, "split ion not in trap");
                start.consider(trap_busy[t]);
                start.consider(ion_avail[ins.ion]);
                if (int leg = leg_of_first[i]; leg >= 0) {
                    double base = start.at;
                    for (int s : prog.legs[leg].segments) start.consider(seg_busy[s]);
                    for (int jn : prog.legs[leg].junctions) start.consider(junc_busy[jn]);
                    res.leg_delay[leg] = start.at - base;
                    res.leg_wait_node[leg] = t;
                }
                int n = m.chain_len(t);
                check(n >= 2, "split of a singleton chain");
                auto se = heat_split(chain_e[t], n, 1, p);
                ion_e[ins.ion] = se.left;
                chain_e[t] = se.right;
                bump_energy(std::max(se.left, se.right));
                ev.chain_len = n;
                ev.n_bar = chain_e[t];
                ev.location = t;
                m.remove_ion(t, ins.ion);
                ion_node[ins.ion] = t;
                dur = p.split_time;
                double end = start.at + dur;
                trap_busy[t] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::Move: {
                if (m.ion_trap[ins.ion] != -1) {
                    // singleton chain departs without a split
                    int t = m.ion_trap[ins.ion];
                    check(m.chain_len(t) == 1, "move out of a multi-ion chain");
                    ion_e[ins.ion] = chain_e[t];
                    chain_e[t] = 0.0;
                    ion_node[ins.ion] = t;
                    m.remove_ion(t, ins.ion);
                }
                start.consider(ion_avail[ins.ion]);
                start.consider(seg_busy[ins.segment]);
                if (int leg = leg_of_first[i]; leg >= 0) {
                    double base = start.at;
                    for (int s : prog.legs[leg].segments) start.consider(seg_busy[s]);
                    for (int jn : prog.legs[leg].junctions) start.consider(junc_busy[jn]);
                    res.leg_delay[leg] = start.at - base;
                    res.leg_wait_node[leg] = ion_node[ins.ion];
                }
                const auto& seg = g.segments[ins.segment];
                check(seg.a == ion_node[ins.ion] || seg.b == ion_node[ins.ion],
                      "move from a non-adjacent node");
                ion_node[ins.ion] = seg.a == ion_node[ins.ion] ? seg.b : seg.a;
                ion_e[ins.ion] = heat_move(ion_e[ins.ion], 1, p);
                bump_energy(ion_e[ins.ion]);
                ev.segment = ins.segment;
                ev.chain_len = 1;
                ev.n_bar = ion_e[ins.ion];
                dur = p.move_per_segment;
                double end = start.at + dur;
                seg_busy[ins.segment] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                if (leg_of_last[i] >= 0) {
                    // leg ends on a bare move: the ion becomes a new chain
                    int t = ion_node[ins.ion];
                    check(g.is_trap(t) && m.chain_len(t) == 0,
                          "bare-move arrival at a non-empty trap");
                    m.insert_ion(t, ins.ion, true);
                    chain_e[t] = ion_e[ins.ion];
                    ion_e[ins.ion] = 0.0;
                }
                break;
            }
            case InstrKind::Cross: {
                check(ion_node[ins.ion] == ins.node, "cross at wrong junction");
                start.consider(ion_avail[ins.ion]);
                start.consider(junc_busy[ins.node]);
                dur = g.degree(ins.node) == 4 ? p.x_cross_time : p.y_cross_time;
                // junction transit heats like one segment
                ion_e[ins.ion] = heat_move(ion_e[ins.ion], 1, p);
                bump_energy(ion_e[ins.ion]);
                ev.chain_len = 1;
                ev.n_bar = ion_e[ins.ion];
                ev.location = ins.node;
                double end = start.at + dur;
                junc_busy[ins.node] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::Merge: {
                int t = ins.node;
                check(ion_node[ins.ion] == t, "merge ion has not reached the trap");
                check(m.chain_len(t) >= 1, "merge into an empty trap");
                check(m.chain_len(t) < hw.capacity, "merge exceeds trap capacity");
                start.consider(trap_busy[t]);
                start.consider(ion_avail[ins.ion]);
                chain_e[t] = heat_merge(chain_e[t], ion_e[ins.ion], p);
                ion_e[ins.ion] = 0.0;
                bump_energy(chain_e[t]);
                const auto& seg = g.segments[ins.segment];
                int other = seg.a == t ? seg.b : seg.a;
                m.insert_ion(t, ins.ion, g.exit_at_back(t, other));
                ev.chain_len = m.chain_len(t);
                ev.n_bar = chain_e[t];
                ev.location = t;
                dur = p.merge_time;
                double end = start.at + dur;
                trap_busy[t] = {end, static_cast<int>(i)};
                ion_avail[ins.ion] = {end, static_cast<int>(i)};
                break;
            }
            case InstrKind::Wait: {
                start.consider(ion_avail[ins.ion]);
                ev.location = ins.node;
                dur = 0.0;
                break;
            }
        }

        ev.start = start.at;
        ev.end = start.at + dur;
        ev.crit_pred = start.pred;
        res.makespan = std::max(res.makespan, ev.end);
    }

    // critical-path attribution of compute vs communicate time
    int cur = -1;
    double best = -1.0;
    for (size_t i = 0; i < res.events.size(); ++i)
        if (res.events[i].end > best) {
            best = res.events[i].end;
            cur = static_cast<int>(i);
        }
    while (cur >= 0) {
        const auto& ev = res.events[cur];
        double d = ev.end - ev.start;
        switch (prog.instructions[cur].kind) {
            case InstrKind::Gate1q:
            case InstrKind::GateMS:
            case InstrKind::Measure:
            case InstrKind::SwapGS:
                res.compute_us += d;
                break;
            default:
                res.communicate_us += d;
                break;
        }
        cur = ev.crit_pred;
    }
    return res;
}

}  // namespace qccd::detail
