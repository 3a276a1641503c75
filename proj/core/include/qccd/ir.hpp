#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qccd {

enum class OpKind { OneQubit, TwoQubit, Measure };

struct CircuitOp {
    OpKind kind;
    std::string label;      // 1q gate name; empty for 2q/measure
    int q0 = -1;
    int q1 = -1;            // second operand, TwoQubit only

    bool touches(int q) const { return q == q0 || q == q1; }
};

struct Circuit {
    int num_qubits = 0;
    std::vector<CircuitOp> ops;

    void add_1q(const std::string& label, int q);
    void add_2q(int a, int b);
    void add_measure(int q);
    void check() const;  // throws std::invalid_argument on invariant violation
};

// Per-op predecessor/successor sets from qubit-operand overlap
// (per-qubit last-writer chaining; transitive edges omitted).
struct DependencyDag {
    std::vector<std::vector<int>> preds;
    std::vector<std::vector<int>> succs;
};

DependencyDag build_dag(const Circuit& c);

// JSON circuit schema: {"num_qubits": n, "ops": [{"kind":"1q"|"2q"|"measure",
// "label": "...", "qubits": [...]}, ...]}
Circuit parse_json_circuit(const std::string& text);
std::string emit_json_circuit(const Circuit& c);

std::string emit_qasm(const Circuit& c);

bool operator==(const CircuitOp& a, const CircuitOp& b);
bool operator==(const Circuit& a, const Circuit& b);

}  // namespace qccd
