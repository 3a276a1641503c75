#include "qccd/models.hpp"

#include <algorithm>
#include <cmath>

namespace qccd {

GateImpl parse_gate_impl(const std::string& s) {
    if (s == "AM1") return GateImpl::AM1;
    if (s == "AM2") return GateImpl::AM2;
    if (s == "PM") return GateImpl::PM;
    if (s == "FM") return GateImpl::FM;
    throw std::invalid_argument("unknown gate implementation: " + s);
}

ReorderMethod parse_reorder(const std::string& s) {
    if (s == "GS") return ReorderMethod::GS;
    if (s == "IS") return ReorderMethod::IS;
    throw std::invalid_argument("unknown reorder method: " + s);
}

std::string to_string(GateImpl g) {
    switch (g) {
        case GateImpl::AM1: return "AM1";
        case GateImpl::AM2: return "AM2";
        case GateImpl::PM: return "PM";
        case GateImpl::FM: return "FM";
    }
    return "?";
}

std::string to_string(ReorderMethod r) {
    return r == ReorderMethod::GS ? "GS" : "IS";
}

void PhysicsParams::check() const {
    auto nonneg = [](double v, const char* name) {
        if (!(v >= 0.0))
            throw std::invalid_argument(std::string(name) + " must be >= 0");
    };
    nonneg(k1, "k1");
    nonneg(k2, "k2");
    nonneg(gamma, "gamma");
    nonneg(a0, "a0");
    nonneg(t_1q, "t_1q");
    nonneg(t_meas, "t_meas");
    nonneg(t_is_rotation, "t_is_rotation");
    nonneg(move_per_segment, "move_per_segment");
    nonneg(split_time, "split_time");
    nonneg(merge_time, "merge_time");
    nonneg(y_cross_time, "y_cross_time");
    nonneg(x_cross_time, "x_cross_time");
    if (!(f_1q_err >= 0.0 && f_1q_err < 1.0))
        throw std::invalid_argument("f_1q_err must be in [0,1)");
    if (!(f_meas_err >= 0.0 && f_meas_err < 1.0))
        throw std::invalid_argument("f_meas_err must be in [0,1)");
}

double gate_time(GateImpl impl, int d, int n_chain) {
    if (n_chain < 2) throw std::invalid_argument("gate_time: chain length must be >= 2");
    if (d < 1 || d >= n_chain)
        throw std::invalid_argument("gate_time: separation d must satisfy 1 <= d < N");
    switch (impl) {
        case GateImpl::AM1: return 100.0 * d - 22.0;
        case GateImpl::AM2: return 38.0 * d + 10.0;
        case GateImpl::PM: return 5.0 * d + 160.0;
        case GateImpl::FM: return std::max(13.33 * n_chain - 54.0, 100.0);
    }
    throw std::logic_error("gate_time: bad impl");
}

double shuttle_op_time(ShuttleOp op, int n_segments, const PhysicsParams& p) {
    switch (op) {
        case ShuttleOp::Move:
            if (n_segments < 1)
                throw std::invalid_argument("shuttle_op_time: Move needs >= 1 segment");
            return p.move_per_segment * n_segments;
        case ShuttleOp::Split: return p.split_time;
        case ShuttleOp::Merge: return p.merge_time;
        case ShuttleOp::CrossY: return p.y_cross_time;
        case ShuttleOp::CrossX: return p.x_cross_time;
    }
    throw std::logic_error("shuttle_op_time: bad op");
}

SplitEnergy heat_split(double e, int n_total, int n_left, const PhysicsParams& p) {
    if (n_left < 1 || n_left >= n_total)
        throw std::invalid_argument("heat_split: need 1 <= n_left < n_total");
    // Energy divides proportionally to sub-chain size; each part gains k1.
    double left = e * n_left / n_total + p.k1;
    double right = e * (n_total - n_left) / n_total + p.k1;
    return {left, right};
}

double heat_merge(double e1, double e2, const PhysicsParams& p) {
    return e1 + e2 + p.k1;
}

double heat_move(double e, int n_segments, const PhysicsParams& p) {
    if (n_segments < 0) throw std::invalid_argument("heat_move: n_segments < 0");
    return e + p.k2 * n_segments;
}

GateFidelity two_qubit_fidelity(double tau_us, double n_bar, int n_chain,
                                const PhysicsParams& p) {
    if (n_chain < 2) throw std::invalid_argument("two_qubit_fidelity: N < 2");
    double background = p.gamma * (tau_us * 1e-6);
    double scale = p.a0 * (static_cast<double>(n_chain) / std::log(n_chain));
    double motional = scale * (2.0 * n_bar + 1.0);
    double f = 1.0 - background - motional;
    return {std::clamp(f, 0.0, 1.0), background, motional};
}

double one_qubit_fidelity(const PhysicsParams& p) { return 1.0 - p.f_1q_err; }
double measure_fidelity(const PhysicsParams& p) { return 1.0 - p.f_meas_err; }

}  // namespace qccd
