#include "qccd/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <sstream>
#include <thread>

#include "qccd/compiler.hpp"

namespace qccd {

HardwareConfig make_topology(const std::string& desc, const HardwareConfig& base) {
    HardwareConfig hw = base;
    std::smatch m;
    if (std::regex_match(desc, m, std::regex("linear(\\d+)"))) {
        hw.graph = make_linear(std::stoi(m[1]));
        hw.topology_desc = desc;
    } else if (std::regex_match(desc, m, std::regex("grid(\\d+)x(\\d+)"))) {
        hw.graph = make_grid(std::stoi(m[1]), std::stoi(m[2]));
        hw.topology_desc = desc;
    } else {
        throw std::invalid_argument("unknown topology: " + desc +
                                    " (expected linearN or gridRxC)");
    }
    return hw;
}

std::vector<SweepPoint> SweepSpec::points() const {
    auto topos = topologies.empty() ? std::vector<std::string>{base.topology_desc}
                                    : topologies;
    auto caps = capacities.empty() ? std::vector<int>{base.capacity} : capacities;
    auto gs = gates.empty() ? std::vector<GateImpl>{base.gate_impl} : gates;
    auto rs = reorders.empty() ? std::vector<ReorderMethod>{base.reorder} : reorders;
    std::vector<SweepPoint> pts;
    for (const auto& t : topos)
        for (int c : caps)
            for (auto g : gs)
                for (auto r : rs) pts.push_back({t, c, g, r});
    return pts;
}

namespace {

SweepRow run_point(const Circuit& circuit, const SweepSpec& spec, const SweepPoint& pt) {
    SweepRow row;
    row.point = pt;
    try {
        HardwareConfig hw = pt.topology == spec.base.topology_desc
                                ? spec.base
                                : make_topology(pt.topology, spec.base);
        hw.capacity = pt.capacity;
        hw.gate_impl = pt.gate_impl;
        hw.reorder = pt.reorder;
        auto prog = compile(circuit, hw);
        row.metrics = simulate(prog, hw);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int sweep_threads() {
    if (const char* env = std::getenv("QCCD_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    auto pts = spec.points();
    std::vector<SweepRow> rows(pts.size());
    int n_threads = std::min<int>(sweep_threads(), static_cast<int>(pts.size()));
    if (n_threads <= 1) {
        for (size_t i = 0; i < pts.size(); ++i)
            rows[i] = run_point(spec.circuit, spec, pts[i]);
        return rows;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < n_threads; ++t)
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < pts.size(); i = next.fetch_add(1))
                rows[i] = run_point(spec.circuit, spec, pts[i]);
        });
    for (auto& w : workers) w.join();
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "topology,capacity,gate,reorder,error,makespan_us,fidelity,log_fidelity,"
           "max_motional_energy,err_background,err_motional,compute_us,communicate_us,"
           "ms_gates,splits,merges,moves,crosses,swaps_gs,swaps_is,waits\n";
    for (const auto& r : rows) {
        out << r.point.topology << ',' << r.point.capacity << ','
            << to_string(r.point.gate_impl) << ',' << to_string(r.point.reorder) << ','
            << '"' << r.error << '"' << ',';
        if (!r.error.empty()) {
            out << ",,,,,,,,,,,,,,\n";
            continue;
        }
        const auto& m = r.metrics;
        auto count = [&](const char* k) {
            auto it = m.op_counts.find(k);
            return it == m.op_counts.end() ? 0L : it->second;
        };
        out << fmt(m.makespan_us) << ',' << fmt(m.fidelity) << ','
            << fmt(m.log_fidelity) << ',' << fmt(m.max_motional_energy) << ','
            << fmt(m.err_background_sum) << ',' << fmt(m.err_motional_sum) << ','
            << fmt(m.compute_us) << ',' << fmt(m.communicate_us) << ','
            << count("gate_ms") << ',' << count("split") << ',' << count("merge") << ','
            << count("move") << ',' << count("cross") << ',' << count("swap_gs") << ','
            << count("swap_is") << ',' << count("wait") << '\n';
    }
    return out.str();
}

}  // namespace qccd
