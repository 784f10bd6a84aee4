#pragma once

#include <map>

#include "qvertex/glue.hpp"
#include "qvertex/kseries.hpp"
#include "qvertex/partition.hpp"

namespace qvertex {

// Schur-coefficient stream of an open-string series: lambda -> KSeries
using SchurSeries = std::map<Partition, KSeries>;

// Total partition function as a finite Xi-Laurent window of flux sectors.
struct FluxSeries {
    std::map<int, SchurSeries> sectors; // N -> coefficients of Xi^{-N}
    int n_max = 0;
    Frac bound{0};
    int l_max = 0;

    const KSeries* find(int N, const Partition& lam) const;
    // assemble the Xi-Laurent series of one Schur coefficient
    XiSeries xi_coefficient(const Partition& lam) const;
};

// the sector prefactor monomial (prod of the model's distinct Kahler names)^{N^2/2}
KMonomial sector_prefactor_monomial(const LoopModel& model, int N);
// q-exponent of the sector prefactor at fixed lambda:
// -N|lambda| + (gamma + 2M) N(4N^2-1)/24
Frac sector_prefactor_qexp(const LoopModel& model, const Partition& lam, int N);

// Z^{(N)}_lambda: Kahler-shifted open amplitude with the flux prefactor.
// Returns the zero series (with a warning flag) when the prefactor weight
// alone exceeds the truncation bound.
KSeries sector_coefficient(const Partition& lam, int N, const LoopModel& model, const Frac& D,
                           bool* truncated_out = nullptr);

// all sectors |N| <= n_max, all |lambda| <= l_max
FluxSeries total_partition(const LoopModel& model, const Frac& D, int l_max, int n_max);

// default N window: largest N whose prefactor weight fits under D
int default_n_max(const LoopModel& model, const Frac& D);

} // namespace qvertex
