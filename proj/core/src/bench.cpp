#include "qccd/bench.hpp"

#include <random>
#include <stdexcept>

namespace qccd {

BenchFamily parse_bench_family(const std::string& s) {
    if (s == "qft" || s == "QFT") return BenchFamily::QFT;
    if (s == "bv" || s == "BV") return BenchFamily::BV;
    if (s == "qaoa" || s == "qaoa_nn" || s == "QAOA_NN") return BenchFamily::QAOA_NN;
    if (s == "random" || s == "random_nn" || s == "RandomNN") return BenchFamily::RandomNN;
    throw std::invalid_argument("unknown benchmark family: " + s);
}

std::string to_string(BenchFamily f) {
    switch (f) {
        case BenchFamily::QFT: return "qft";
        case BenchFamily::BV: return "bv";
        case BenchFamily::QAOA_NN: return "qaoa_nn";
        case BenchFamily::RandomNN: return "random_nn";
    }
    return "?";
}

namespace {

Circuit gen_qft(int n) {
    Circuit c;
    c.num_qubits = n;
    for (int i = 0; i < n; ++i) {
        c.add_1q("h", i);
        for (int j = i + 1; j < n; ++j) c.add_2q(j, i);  // controlled phase
    }
    return c;
}

Circuit gen_bv(int n, const std::vector<bool>& secret) {
    Circuit c;
    c.num_qubits = n + 1;  // ancilla last
    int anc = n;
    c.add_1q("h", anc);
    c.add_1q("z", anc);
    for (int i = 0; i < n; ++i) c.add_1q("h", i);
    for (int i = 0; i < n; ++i)
        if (secret[i]) c.add_2q(i, anc);
    for (int i = 0; i < n; ++i) c.add_1q("h", i);
    for (int i = 0; i < n; ++i) c.add_measure(i);
    return c;
}

Circuit gen_qaoa_nn(int n, int layers) {
    Circuit c;
    c.num_qubits = n;
    for (int i = 0; i < n; ++i) c.add_1q("h", i);
    for (int l = 0; l < layers; ++l) {
        for (int i = 0; i + 1 < n; ++i) c.add_2q(i, i + 1);
        for (int i = 0; i < n; ++i) c.add_1q("rx", i);  // mixer
    }
    return c;
}

Circuit gen_random_nn(int n, int depth, uint64_t seed) {
    Circuit c;
    c.num_qubits = n;
    std::mt19937_64 rng(seed);
    const char* pool[] = {"sx", "sy", "t"};
    std::uniform_int_distribution<int> pick(0, 2);
    for (int layer = 0; layer < depth; ++layer) {
        for (int i = 0; i < n; ++i) c.add_1q(pool[pick(rng)], i);
        int start = layer % 2;  // even/odd brickwork
        for (int i = start; i + 1 < n; i += 2) c.add_2q(i, i + 1);
    }
    return c;
}

}  // namespace

Circuit gen(const BenchSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("benchmark needs n >= 2");
    switch (spec.family) {
        case BenchFamily::QFT:
            return gen_qft(spec.n);
        case BenchFamily::BV: {
            auto secret = spec.secret;
            if (secret.empty()) secret.assign(spec.n, true);
            if (static_cast<int>(secret.size()) != spec.n)
                throw std::invalid_argument("BV secret length must equal n");
            return gen_bv(spec.n, secret);
        }
        case BenchFamily::QAOA_NN:
            if (spec.layers < 1) throw std::invalid_argument("QAOA needs layers >= 1");
            return gen_qaoa_nn(spec.n, spec.layers);
        case BenchFamily::RandomNN:
            if (spec.depth < 1) throw std::invalid_argument("RandomNN needs depth >= 1");
            return gen_random_nn(spec.n, spec.depth, spec.seed);
    }
    throw std::logic_error("gen: bad family");
}

}  // namespace qccd
