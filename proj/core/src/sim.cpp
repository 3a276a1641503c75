#include "qccd/sim.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "exec_engine.hpp"
#include "json.hpp"

namespace qccd {

RunMetrics simulate(const CompiledProgram& prog, const HardwareConfig& hw) {
    auto r = detail::execute(prog, hw);
    RunMetrics m;
    m.makespan_us = r.makespan;
    m.log_fidelity = r.log_fidelity;
    m.fidelity = std::exp(r.log_fidelity);
    m.max_motional_energy = r.max_energy;
    m.err_background_sum = r.err_background_sum;
    m.err_motional_sum = r.err_motional_sum;
    m.compute_us = r.compute_us;
    m.communicate_us = r.communicate_us;
    for (const auto& ins : prog.instructions) m.op_counts[to_string(ins.kind)]++;
    return m;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string emit_trace(const CompiledProgram& prog, const HardwareConfig& hw) {
    auto r = detail::execute(prog, hw);
    std::ostringstream out;
    out << "id,kind,start_us,end_us,location,chain_len,energy_quanta,fidelity,"
           "err_background,err_motional\n";
    for (size_t i = 0; i < prog.instructions.size(); ++i) {
        const auto& ins = prog.instructions[i];
        const auto& ev = r.events[i];
        std::string loc;
        if (ev.segment >= 0)
            loc = "s" + std::to_string(ev.segment);
        else if (ev.location >= 0)
            loc = "n" + std::to_string(ev.location);
        out << i << ',' << to_string(ins.kind) << ',' << fmt(ev.start) << ','
            << fmt(ev.end) << ',' << loc << ',' << ev.chain_len << ','
            << fmt(ev.n_bar) << ',' << fmt(ev.fidelity) << ','
            << fmt(ev.err_background) << ',' << fmt(ev.err_motional) << '\n';
    }
    return out.str();
}

std::string emit_json_metrics(const RunMetrics& m) {
    nlohmann::ordered_json j;
    j["makespan_us"] = m.makespan_us;
    j["fidelity"] = m.fidelity;
    j["log_fidelity"] = std::isinf(m.log_fidelity) ? -1e308 : m.log_fidelity;
    nlohmann::ordered_json counts;
    for (const auto& [k, v] : m.op_counts) counts[k] = v;
    j["op_counts"] = counts;
    j["max_motional_energy"] = m.max_motional_energy;
    j["error_breakdown"] = {{"background", m.err_background_sum},
                            {"motional", m.err_motional_sum}};
    j["time_split"] = {{"compute_us", m.compute_us},
                       {"communicate_us", m.communicate_us}};
    return j.dump(2) + "\n";
}

// Declared in compiler.hpp; lives here to reuse the execution engine.
CompiledProgram route_parallel(CompiledProgram prog, const HardwareConfig& hw) {
    auto r = detail::execute(prog, hw);
    // collect delayed legs, insert Wait markers back to front
    std::vector<size_t> delayed;
    for (size_t l = 0; l < prog.legs.size(); ++l)
        if (r.leg_delay[l] > 0.0) delayed.push_back(l);
    std::sort(delayed.begin(), delayed.end(), [&](size_t a, size_t b) {
        return prog.legs[a].first_instr > prog.legs[b].first_instr;
    });
    for (size_t l : delayed) {
        int at = prog.legs[l].first_instr;
        Instruction w;
        w.kind = InstrKind::Wait;
        w.ion = prog.legs[l].ion;
        w.node = r.leg_wait_node[l];
        w.source_op = kTagTransit;
        prog.instructions.insert(prog.instructions.begin() + at, w);
        for (auto& leg : prog.legs) {
            if (leg.first_instr >= at) ++leg.first_instr;
            if (leg.last_instr >= at) ++leg.last_instr;
        }
    }
    return prog;
}

}  // namespace qccd
