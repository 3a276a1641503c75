#include "qccd/ir.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qccd {

void Circuit::add_1q(const std::string& label, int q) {
    ops.push_back({OpKind::OneQubit, label, q, -1});
}

void Circuit::add_2q(int a, int b) {
    ops.push_back({OpKind::TwoQubit, "", a, b});
}

void Circuit::add_measure(int q) {
    ops.push_back({OpKind::Measure, "", q, -1});
}

void Circuit::check() const {
    std::vector<bool> measured(num_qubits, false);
    for (size_t i = 0; i < ops.size(); ++i) {
        const auto& op = ops[i];
        auto check_q = [&](int q) {
            if (q < 0 || q >= num_qubits)
                throw std::invalid_argument("op " + std::to_string(i) +
                                            ": qubit index out of range");
            if (measured[q])
                throw std::invalid_argument("op " + std::to_string(i) +
                                            ": qubit used after measurement");
        };
        check_q(op.q0);
        if (op.kind == OpKind::TwoQubit) {
            check_q(op.q1);
            if (op.q0 == op.q1)
                throw std::invalid_argument("op " + std::to_string(i) +
                                            ": two-qubit op needs distinct operands");
        } else if (op.q1 != -1) {
            throw std::invalid_argument("op " + std::to_string(i) +
                                        ": unexpected second operand");
        }
        if (op.kind == OpKind::Measure) measured[op.q0] = true;
    }
}

DependencyDag build_dag(const Circuit& c) {
    DependencyDag dag;
    dag.preds.resize(c.ops.size());
    dag.succs.resize(c.ops.size());
    std::vector<int> last(c.num_qubits, -1);
    for (size_t i = 0; i < c.ops.size(); ++i) {
        const auto& op = c.ops[i];
        std::set<int> p;
        for (int q : {op.q0, op.q1}) {
            if (q < 0) continue;
            if (last[q] >= 0) p.insert(last[q]);
            last[q] = static_cast<int>(i);
        }
        for (int j : p) {
            dag.preds[i].push_back(j);
            dag.succs[j].push_back(static_cast<int>(i));
        }
    }
    return dag;
}

namespace {

const char* kind_name(OpKind k) {
    switch (k) {
        case OpKind::OneQubit: return "1q";
        case OpKind::TwoQubit: return "2q";
        case OpKind::Measure: return "measure";
    }
    return "?";
}

}  // namespace

Circuit parse_json_circuit(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("num_qubits") || !j.contains("ops"))
        throw std::invalid_argument(
            "circuit JSON: expected object with num_qubits and ops at $");
    Circuit c;
    if (!j["num_qubits"].is_number_integer())
        throw std::invalid_argument("circuit JSON: $.num_qubits must be an integer");
    c.num_qubits = j["num_qubits"].get<int>();
    if (c.num_qubits < 0)
        throw std::invalid_argument("circuit JSON: $.num_qubits must be >= 0");
    if (!j["ops"].is_array())
        throw std::invalid_argument("circuit JSON: $.ops must be an array");
    for (size_t i = 0; i < j["ops"].size(); ++i) {
        const auto& op = j["ops"][i];
        std::string path = "$.ops[" + std::to_string(i) + "]";
        if (!op.is_object() || !op.contains("kind") || !op.contains("qubits"))
            throw std::invalid_argument("circuit JSON: " + path +
                                        " needs kind and qubits");
        std::string kind = op["kind"].get<std::string>();
        const auto& qs = op["qubits"];
        if (!qs.is_array())
            throw std::invalid_argument("circuit JSON: " + path + ".qubits must be an array");
        std::vector<int> qubits;
        for (const auto& q : qs) qubits.push_back(q.get<int>());
        if (kind == "1q") {
            if (qubits.size() != 1)
                throw std::invalid_argument("circuit JSON: " + path + ": 1q op needs 1 qubit");
            c.add_1q(op.value("label", "u"), qubits[0]);
        } else if (kind == "2q") {
            if (qubits.size() != 2 || qubits[0] == qubits[1])
                throw std::invalid_argument("circuit JSON: " + path +
                                            ": 2q op needs 2 distinct qubits");
            c.add_2q(qubits[0], qubits[1]);
        } else if (kind == "measure") {
            if (qubits.size() != 1)
                throw std::invalid_argument("circuit JSON: " + path +
                                            ": measure needs 1 qubit");
            c.add_measure(qubits[0]);
        } else {
            throw std::invalid_argument("circuit JSON: " + path + ".kind unknown: " + kind);
        }
    }
    c.check();
    return c;
}

std::string emit_json_circuit(const Circuit& c) {
    nlohmann::ordered_json j;
    j["num_qubits"] = c.num_qubits;
    j["ops"] = nlohmann::ordered_json::array();
    for (const auto& op : c.ops) {
        nlohmann::ordered_json o;
        o["kind"] = kind_name(op.kind);
        if (op.kind == OpKind::OneQubit) o["label"] = op.label;
        if (op.kind == OpKind::TwoQubit)
            o["qubits"] = {op.q0, op.q1};
        else
            o["qubits"] = {op.q0};
        j["ops"].push_back(o);
    }
    return j.dump(2) + "\n";
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits << "];\n";
    bool has_measure = false;
    for (const auto& op : c.ops)
        if (op.kind == OpKind::Measure) has_measure = true;
    if (has_measure) out << "creg c[" << c.num_qubits << "];\n";
    for (const auto& op : c.ops) {
        switch (op.kind) {
            case OpKind::OneQubit:
                out << op.label << " q[" << op.q0 << "];\n";
                break;
            case OpKind::TwoQubit:
                out << "cx q[" << op.q0 << "],q[" << op.q1 << "];\n";
                break;
            case OpKind::Measure:
                out << "measure q[" << op.q0 << "] -> c[" << op.q0 << "];\n";
                break;
        }
    }
    return out.str();
}

bool operator==(const CircuitOp& a, const CircuitOp& b) {
    return a.kind == b.kind && a.label == b.label && a.q0 == b.q0 && a.q1 == b.q1;
}

bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits == b.num_qubits && a.ops == b.ops;
}

}  // namespace qccd
