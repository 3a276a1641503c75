#include <algorithm>

#include "doctest.h"
#include "qccd/bench.hpp"
#include "qccd/qasm.hpp"

using namespace qccd;

namespace {

long count_2q(const Circuit& c) {
    return std::count_if(c.ops.begin(), c.ops.end(), [](const CircuitOp& op) {
        return op.kind == OpKind::TwoQubit;
    });
}

}  // namespace

TEST_CASE("qft has n(n-1)/2 two-qubit ops") {
    for (int n : {2, 3, 8, 64}) {
        auto c = gen({.family = BenchFamily::QFT, .n = n});
        CHECK(c.num_qubits == n);
        CHECK(count_2q(c) == static_cast<long>(n) * (n - 1) / 2);
    }
    // textbook order: the first controlled phase couples qubits 1 and 0
    auto c = gen({.family = BenchFamily::QFT, .n = 4});
    auto first = std::find_if(c.ops.begin(), c.ops.end(), [](const CircuitOp& op) {
        return op.kind == OpKind::TwoQubit;
    });
    REQUIRE(first != c.ops.end());
    CHECK(first->q0 == 1);
    CHECK(first->q1 == 0);
}

TEST_CASE("bv has one entangling op per set secret bit") {
    auto all = gen({.family = BenchFamily::BV, .n = 64});
    CHECK(all.num_qubits == 65);  // ancilla
    CHECK(count_2q(all) == 64);

    auto c = gen({.family = BenchFamily::BV,
                  .n = 5,
                  .secret = {true, false, true, false, true}});
    CHECK(c.num_qubits == 6);
    CHECK(count_2q(c) == 3);
    for (const auto& op : c.ops)
        if (op.kind == OpKind::TwoQubit) CHECK(op.q1 == 5);  // always the ancilla
    // every data qubit is measured
    long measures = std::count_if(c.ops.begin(), c.ops.end(), [](const CircuitOp& op) {
        return op.kind == OpKind::Measure;
    });
    CHECK(measures == 5);
}

TEST_CASE("qaoa_nn has p(n-1) two-qubit ops on the nearest-neighbor chain") {
    auto c = gen({.family = BenchFamily::QAOA_NN, .n = 4, .layers = 1});
    CHECK(count_2q(c) == 3);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& op : c.ops)
        if (op.kind == OpKind::TwoQubit) pairs.push_back({op.q0, op.q1});
    CHECK(pairs == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    for (int p : {2, 3})
        CHECK(count_2q(gen({.family = BenchFamily::QAOA_NN, .n = 10, .layers = p})) ==
              p * 9);
}

TEST_CASE("random_nn brickwork alternates even and odd pairs") {
    auto c = gen({.family = BenchFamily::RandomNN, .n = 6, .depth = 4, .seed = 7});
    // even layers pair (0,1)(2,3)(4,5) = 3 ops; odd layers (1,2)(3,4) = 2 ops
    CHECK(count_2q(c) == 2 * 3 + 2 * 2);
    for (const auto& op : c.ops)
        if (op.kind == OpKind::TwoQubit) CHECK(op.q1 == op.q0 + 1);
}

TEST_CASE("random_nn is seed-deterministic") {
    auto a = gen({.family = BenchFamily::RandomNN, .n = 8, .depth = 6, .seed = 11});
    auto b = gen({.family = BenchFamily::RandomNN, .n = 8, .depth = 6, .seed = 11});
    auto c = gen({.family = BenchFamily::RandomNN, .n = 8, .depth = 6, .seed = 12});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("generated circuits pass their own checks and round-trip qasm") {
    for (auto spec : {BenchSpec{.family = BenchFamily::QFT, .n = 8},
                      BenchSpec{.family = BenchFamily::BV, .n = 6},
                      BenchSpec{.family = BenchFamily::QAOA_NN, .n = 6, .layers = 2},
                      BenchSpec{.family = BenchFamily::RandomNN,
                                .n = 6,
                                .depth = 3,
                                .seed = 3}}) {
        auto c = gen(spec);
        CHECK_NOTHROW(c.check());
        CHECK(parse_qasm(emit_qasm(c)) == c);
    }
}

TEST_CASE("family names parse and print") {
    CHECK(parse_bench_family("qft") == BenchFamily::QFT);
    CHECK(parse_bench_family("bv") == BenchFamily::BV);
    CHECK(parse_bench_family("qaoa") == BenchFamily::QAOA_NN);
    CHECK(parse_bench_family("random") == BenchFamily::RandomNN);
    CHECK_THROWS(parse_bench_family("qpe"));
    CHECK(to_string(BenchFamily::QFT) == "qft");
}

TEST_CASE("gen validates its arguments") {
    CHECK_THROWS(gen({.family = BenchFamily::QFT, .n = 1}));
    CHECK_THROWS(gen({.family = BenchFamily::BV, .n = 0}));
    CHECK_THROWS(
        gen({.family = BenchFamily::BV, .n = 3, .secret = {true, false}}));
    CHECK_THROWS(gen({.family = BenchFamily::QAOA_NN, .n = 4, .layers = 0}));
    CHECK_THROWS(gen({.family = BenchFamily::RandomNN, .n = 4, .depth = 0}));
}
