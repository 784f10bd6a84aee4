#pragma once

#include <string>
#include <vector>

#include "qvertex/kseries.hpp"
#include "qvertex/partition.hpp"

namespace qvertex {

// One-loop (M-gon) toric model: framing factor and Kahler name per edge.
// Edges may share a name (local P^2: three edges, one name "Q"); edges sharing
// a name must carry the same framing factor so Kahler substitutions stay
// well defined.
struct LoopModel {
    int M = 0;
    std::vector<long long> gamma;
    std::vector<std::string> kahler;

    void validate() const;
    std::vector<std::string> distinct_names() const;
    long long gamma_total() const;
    // gamma for a given name (validated equal across that name's edges)
    long long gamma_of(const std::string& name) const;

    static LoopModel p2() { return LoopModel{3, {1, 1, 1}, {"Q", "Q", "Q"}}; }
    static LoopModel minus2(int M) {
        LoopModel m;
        m.M = M;
        for (int i = 1; i <= M; ++i) {
            m.gamma.push_back(-2);
            m.kahler.push_back(M == 1 ? "Q1" : "Q" + std::to_string(i));
        }
        return m;
    }
};

// open amplitude Z_{lambda^1,...,lambda^M}(Q_i, gamma_i), truncated at total
// Kahler weight <= D
KSeries open_amplitude(const std::vector<Partition>& lambdas, const LoopModel& model,
                       const Frac& D);
// one outer brane: lambda on the first leg, all other legs empty
KSeries one_brane(const Partition& lambda, const LoopModel& model, const Frac& D);
// closed-string partition function: all legs empty
KSeries closed_string(const LoopModel& model, const Frac& D);

} // namespace qvertex
