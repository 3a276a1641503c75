#pragma once

#include <stdexcept>
#include <string>

namespace qccd {

enum class GateImpl { AM1, AM2, PM, FM };
enum class ReorderMethod { GS, IS };

GateImpl parse_gate_impl(const std::string& s);
ReorderMethod parse_reorder(const std::string& s);
std::string to_string(GateImpl g);
std::string to_string(ReorderMethod r);

// Times in microseconds, rates in 1/second, energies in motional quanta.
struct PhysicsParams {
    double k1 = 0.1;            // quanta added per split/merge event
    double k2 = 0.01;           // quanta per segment shuttled
    double gamma = 10.0;        // background heating rate, 1/s
    double a0 = 1.8e-4;         // laser-instability scale, A = a0 * N/ln(N)
    double t_1q = 10.0;         // us
    double f_1q_err = 1e-5;
    double t_meas = 100.0;      // us
    double f_meas_err = 1e-3;
    double t_is_rotation = 80.0;  // physical-swap 180deg rotation, us
    double move_per_segment = 5.0;
    double split_time = 80.0;
    double merge_time = 80.0;
    double y_cross_time = 100.0;
    double x_cross_time = 120.0;

    void check() const;  // throws std::invalid_argument on bad ranges
};

// Two-qubit MS gate duration. d is positional separation inside the chain
// (adjacent ions: d = 1), N is the chain length. FM depends only on N.
double gate_time(GateImpl impl, int d, int n_chain);

enum class ShuttleOp { Move, Split, Merge, CrossY, CrossX };

double shuttle_op_time(ShuttleOp op, int n_segments, const PhysicsParams& p);

// Chain heating bookkeeping. Energies are deterministic real-valued quanta.
struct SplitEnergy {
    double left;
    double right;
};

SplitEnergy heat_split(double e, int n_total, int n_left, const PhysicsParams& p);
double heat_merge(double e1, double e2, const PhysicsParams& p);
double heat_move(double e, int n_segments, const PhysicsParams& p);

struct GateFidelity {
    double fidelity;        // clamped to [0, 1]
    double err_background;  // gamma * tau term (pre-clamp)
    double err_motional;    // A(N) * (2 n_bar + 1) term (pre-clamp)
};

// F = 1 - gamma*tau - a0*(N/ln N)*(2 n_bar + 1), clamped below at 0.
GateFidelity two_qubit_fidelity(double tau_us, double n_bar, int n_chain,
                                const PhysicsParams& p);

double one_qubit_fidelity(const PhysicsParams& p);
double measure_fidelity(const PhysicsParams& p);

}  // namespace qccd
