#pragma once

#include <map>
#include <vector>

#include "qvertex/partition.hpp"
#include "qvertex/qrat.hpp"

namespace qvertex {

// Littlewood-Richardson coefficient c^{lambda}_{mu nu}
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// s_{lambda/mu} = sum_nu c^{lambda}_{mu nu} s_nu ; empty when mu is not contained
std::map<Partition, long long> skew_expand(const Partition& lam, const Partition& mu);

// Principal alphabet x_i = q^{sign*(mu_i - i + shift)} for i >= 1 (mu_i = 0 past
// the length); sign=-1 mirrors q -> q^{-1} (e.g. q^{-rho} = {q^{1/2}, q^{3/2}, ...}
// is Alphabet{(), 1/2, -1}). Power sums exist in closed form.
struct Alphabet {
    Partition mu;
    Frac shift;
    int sign = 1;

    bool operator<(const Alphabet& o) const {
        if (mu != o.mu) return mu < o.mu;
        if (shift != o.shift) return shift < o.shift;
        return sign < o.sign;
    }
};

// exact closed form of p_k at the alphabet
QRat power_sum_at(const Alphabet& a, long long k);
// complete homogeneous h_n at the alphabet (Newton's identities; memoized)
QRat homogeneous_at(const Alphabet& a, long long n);
// (skew) Schur functions at the alphabet via Jacobi-Trudi determinants
QRat schur_at(const Partition& nu, const Alphabet& a);
QRat skew_schur_at(const Partition& lam, const Partition& eta, const Alphabet& a);

// determinant of a small QRat matrix (cofactor expansion)
QRat qrat_det(const std::vector<std::vector<QRat>>& m);

} // namespace qvertex
