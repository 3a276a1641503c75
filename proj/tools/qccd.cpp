#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qccd/bench.hpp"
#include "qccd/compiler.hpp"
#include "qccd/device.hpp"
#include "qccd/qasm.hpp"
#include "qccd/sim.hpp"
#include "qccd/sweep.hpp"

namespace {

constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

qccd::Circuit load_circuit(const std::string& path) {
    auto text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return qccd::parse_json_circuit(text);
    return qccd::parse_qasm(text);
}

qccd::HardwareConfig load_device(const std::string& path, const std::string& gate,
                                 const std::string& reorder, int capacity) {
    qccd::HardwareConfig hw;
    if (!path.empty()) {
        hw = qccd::parse_hardware_config(read_file(path));
    } else {
        hw.graph = qccd::make_linear(6);
        hw.topology_desc = "linear6";
    }
    if (!gate.empty()) hw.gate_impl = qccd::parse_gate_impl(gate);
    if (!reorder.empty()) hw.reorder = qccd::parse_reorder(reorder);
    if (capacity > 0) hw.capacity = capacity;
    return hw;
}

qccd::BenchSpec bench_from_json(const nlohmann::json& j) {
    qccd::BenchSpec spec;
    spec.family = qccd::parse_bench_family(j.at("family").get<std::string>());
    spec.n = j.at("n").get<int>();
    if (j.contains("secret")) {
        for (char ch : j.at("secret").get<std::string>()) spec.secret.push_back(ch == '1');
    }
    if (j.contains("layers")) spec.layers = j.at("layers").get<int>();
    if (j.contains("depth")) spec.depth = j.at("depth").get<int>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<uint64_t>();
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"QCCD trapped-ion architecture compiler and simulator"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a benchmark circuit");
    std::string family, secret, out_path, format = "qasm";
    int n = 0, layers = 1, depth = 1;
    uint64_t seed = 0;
    bool seed_set = false;
    gen_cmd->add_option("--family", family, "qft|bv|qaoa_nn|random_nn")->required();
    gen_cmd->add_option("-n,--qubits", n, "number of qubits")->required();
    gen_cmd->add_option("--secret", secret, "BV secret bitstring (default all ones)");
    gen_cmd->add_option("--layers", layers, "QAOA layers");
    gen_cmd->add_option("--depth", depth, "RandomNN depth");
    gen_cmd->add_option("--seed", seed, "RandomNN seed")->each([&](const std::string&) {
        seed_set = true;
    });
    gen_cmd->add_option("--format", format, "qasm|json");
    gen_cmd->add_option("-o,--output", out_path, "output path (default stdout)");

    // compile
    auto* compile_cmd = app.add_subcommand("compile", "compile a circuit for a device");
    std::string circuit_path, device_path, gate, reorder;
    int capacity = 0;
    std::string prog_out;
    compile_cmd->add_option("--circuit", circuit_path, "QASM or JSON circuit")->required();
    compile_cmd->add_option("--device", device_path, "device config JSON");
    compile_cmd->add_option("--gate", gate, "AM1|AM2|PM|FM");
    compile_cmd->add_option("--reorder", reorder, "GS|IS");
    compile_cmd->add_option("--capacity", capacity, "trap capacity override");
    compile_cmd->add_option("-o,--output", prog_out, "compiled program JSON path");

    // sim
    auto* sim_cmd = app.add_subcommand("sim", "compile and simulate a circuit");
    std::string sim_circuit, sim_device, sim_gate, sim_reorder, sim_out, trace_path,
        prog_path;
    int sim_capacity = 0;
    sim_cmd->add_option("--circuit", sim_circuit, "QASM or JSON circuit");
    sim_cmd->add_option("--program", prog_path, "precompiled program JSON");
    sim_cmd->add_option("--device", sim_device, "device config JSON");
    sim_cmd->add_option("--gate", sim_gate, "AM1|AM2|PM|FM");
    sim_cmd->add_option("--reorder", sim_reorder, "GS|IS");
    sim_cmd->add_option("--capacity", sim_capacity, "trap capacity override");
    sim_cmd->add_option("--trace", trace_path, "write per-instruction trace CSV");
    sim_cmd->add_option("-o,--output", sim_out, "metrics JSON path (default stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a design-space sweep");
    std::string sweep_spec_path, sweep_out;
    sweep_cmd->add_option("--sweep", sweep_spec_path, "sweep spec JSON")->required();
    sweep_cmd->add_option("-o,--output", sweep_out, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    if (gen_cmd->parsed()) {
        qccd::BenchSpec spec;
        spec.family = qccd::parse_bench_family(family);
        spec.n = n;
        for (char ch : secret) spec.secret.push_back(ch == '1');
        spec.layers = layers;
        spec.depth = depth;
        spec.seed = seed;
        if (spec.family == qccd::BenchFamily::RandomNN && !seed_set)
            throw std::invalid_argument("random_nn requires --seed");
        auto c = qccd::gen(spec);
        write_output(out_path, format == "json" ? qccd::emit_json_circuit(c)
                                                : qccd::emit_qasm(c));
        return 0;
    }
    if (compile_cmd->parsed()) {
        auto c = load_circuit(circuit_path);
        auto hw = load_device(device_path, gate, reorder, capacity);
        auto prog = qccd::compile(c, hw);
        auto rep = qccd::validate(prog, hw);
        if (!rep.ok) {
            std::cerr << "internal error: compiled program failed validation: "
                      << rep.first_violation << "\n";
            return kExitInternal;
        }
        write_output(prog_out, qccd::emit_json_program(prog));
        return 0;
    }
    if (sim_cmd->parsed()) {
        if (sim_circuit.empty() == prog_path.empty())
            throw std::invalid_argument("sim needs exactly one of --circuit or --program");
        auto hw = load_device(sim_device, sim_gate, sim_reorder, sim_capacity);
        qccd::CompiledProgram prog;
        if (!prog_path.empty())
            prog = qccd::parse_json_program(read_file(prog_path));
        else
            prog = qccd::compile(load_circuit(sim_circuit), hw);
        auto rep = qccd::validate(prog, hw);
        if (!rep.ok) {
            std::cerr << "program failed validation: " << rep.first_violation << "\n";
            return prog_path.empty() ? kExitInternal : kExitUser;
        }
        auto metrics = qccd::simulate(prog, hw);
        if (!trace_path.empty()) write_output(trace_path, qccd::emit_trace(prog, hw));
        write_output(sim_out, qccd::emit_json_metrics(metrics));
        return 0;
    }
    if (sweep_cmd->parsed()) {
        auto j = nlohmann::json::parse(read_file(sweep_spec_path));
        qccd::SweepSpec spec;
        if (j.at("circuit").is_string())
            spec.circuit = load_circuit(j.at("circuit").get<std::string>());
        else
            spec.circuit = qccd::gen(bench_from_json(j.at("circuit")));
        if (j.contains("device"))
            spec.base = qccd::parse_hardware_config(read_file(j.at("device").get<std::string>()));
        else {
            spec.base.graph = qccd::make_linear(6);
            spec.base.topology_desc = "linear6";
        }
        if (j.contains("axes")) {
            const auto& ax = j.at("axes");
            if (ax.contains("topology"))
                spec.topologies = ax.at("topology").get<std::vector<std::string>>();
            if (ax.contains("capacity"))
                spec.capacities = ax.at("capacity").get<std::vector<int>>();
            if (ax.contains("gate"))
                for (const auto& s : ax.at("gate"))
                    spec.gates.push_back(qccd::parse_gate_impl(s.get<std::string>()));
            if (ax.contains("reorder"))
                for (const auto& s : ax.at("reorder"))
                    spec.reorders.push_back(qccd::parse_reorder(s.get<std::string>()));
        }
        std::cerr << "sweep: " << spec.points().size() << " design points\n";
        auto rows = qccd::run_sweep(spec);
        std::string out = sweep_out;
        if (out.empty() && j.contains("output")) out = j.at("output").get<std::string>();
        write_output(out, qccd::sweep_csv(rows));
        return 0;
    }
    return kExitUser;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    }
}
