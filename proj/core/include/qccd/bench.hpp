#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qccd/ir.hpp"

namespace qccd {

enum class BenchFamily { QFT, BV, QAOA_NN, RandomNN };

BenchFamily parse_bench_family(const std::string& s);
std::string to_string(BenchFamily f);

struct BenchSpec {
    BenchFamily family;
    int n = 0;                   // qubits (BV adds one ancilla)
    std::vector<bool> secret;    // BV; defaults to all-ones of length n
    int layers = 1;              // QAOA_NN
    int depth = 1;               // RandomNN
    uint64_t seed = 0;           // RandomNN, mandatory for reproducibility
};

// QFT(n): n(n-1)/2 TwoQubit ops (one per controlled phase) in textbook order.
// BV(n,s): H layer, one TwoQubit(q_i, ancilla) per set bit, H layer, measures;
//   circuit has n+1 qubits (ancilla last).
// QAOA_NN(n,p): p layers of TwoQubit(i,i+1) plus a 1q mixer layer.
// RandomNN(n,depth,seed): alternating even/odd nearest-neighbor brickwork
//   with seeded random 1q gates before each layer.
Circuit gen(const BenchSpec& spec);

}  // namespace qccd
