#pragma once

// Internal symbolic machine state shared by the compiler, validator and
// execution engine. Not installed.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qccd/compiler.hpp"
#include "qccd/device.hpp"

namespace qccd::detail {

struct Machine {
    const DeviceGraph* g = nullptr;
    int capacity = 0;
    std::vector<std::vector<int>> chains;  // node id -> ordered ions (front..back)
    std::vector<int> ion_trap;             // qubit -> trap id, -1 in transit

    void init(const DeviceGraph& graph, int cap, int num_qubits,
              const std::vector<LayoutEntry>& layout) {
        g = &graph;
        capacity = cap;
        chains.assign(graph.nodes.size(), {});
        ion_trap.assign(num_qubits, -1);
        std::vector<LayoutEntry> sorted = layout;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.trap != b.trap ? a.trap < b.trap : a.position < b.position;
        });
        for (const auto& e : sorted) {
            if (static_cast<int>(chains[e.trap].size()) != e.position)
                throw std::invalid_argument("layout positions must be contiguous per trap");
            chains[e.trap].push_back(e.qubit);
            ion_trap[e.qubit] = e.trap;
        }
    }

    int pos_of(int ion) const {
        int t = ion_trap[ion];
        const auto& ch = chains[t];
        for (size_t i = 0; i < ch.size(); ++i)
            if (ch[i] == ion) return static_cast<int>(i);
        throw std::logic_error("ion not in its chain");
    }

    int chain_len(int trap) const { return static_cast<int>(chains[trap].size()); }

    // Chain index an ion must occupy to exit toward `neighbor`.
    int exit_pos(int trap, int neighbor) const {
        return g->exit_at_back(trap, neighbor) ? chain_len(trap) - 1 : 0;
    }

    void swap_positions(int trap, int i, int j) {
        std::swap(chains[trap][i], chains[trap][j]);
    }

    void remove_ion(int trap, int ion) {
        auto& ch = chains[trap];
        ch.erase(std::find(ch.begin(), ch.end(), ion));
        ion_trap[ion] = -1;
    }

    void insert_ion(int trap, int ion, bool at_back) {
        auto& ch = chains[trap];
        if (at_back)
            ch.push_back(ion);
        else
            ch.insert(ch.begin(), ion);
        ion_trap[ion] = trap;
    }

    Occupancy occupancy() const {
        Occupancy occ(chains.size(), 0);
        for (size_t i = 0; i < chains.size(); ++i)
            occ[i] = static_cast<int>(chains[i].size());
        return occ;
    }
};

}  // namespace qccd::detail
