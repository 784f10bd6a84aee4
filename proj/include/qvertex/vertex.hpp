#pragma once

#include <array>

#include "qvertex/partition.hpp"
#include "qvertex/qrat.hpp"

namespace qvertex {

struct Framing {
    std::array<long long, 3> a{0, 0, 0};
};

// W_mu(q) = q^{kappa/4} prod_{i<j} [mu_i-mu_j+j-i]/[j-i] prod_i prod_{v<=mu_i} 1/[v-i+l]
QRat w_one(const Partition& mu);
// W_{mu,nu}(q) = q^{|nu|/2} W_mu(q) s_nu(q^{mu_1-1}, q^{mu_2-2}, ...)
QRat w_two(const Partition& mu, const Partition& nu);

// topological vertex, two independent implementations:
// the W_{mu,nu}/Littlewood-Richardson definition ...
QRat vertex_sum(const Partition& mu1, const Partition& mu2, const Partition& mu3);
// ... and the skew-Schur principal-specialization form
QRat vertex_schur(const Partition& mu1, const Partition& mu2, const Partition& mu3);
// production entry point (memoized vertex_schur)
QRat vertex(const Partition& mu1, const Partition& mu2, const Partition& mu3);

QRat framed_vertex(const Partition& mu1, const Partition& mu2, const Partition& mu3,
                   const Framing& fr);

// Bogoliubov coefficients A^{ij}_{mn}(q; a) of the framed one-vertex state;
// i, j in 1..3 with the cyclic conventions A^{34} = A^{31}, A^{10} = A^{13}
QRat adkmv_coeff(int i, int j, long long m, long long n, const Framing& fr);

// all sub-partitions of lambda (Young-diagram containment), graded order
std::vector<Partition> subpartitions(const Partition& lam);

} // namespace qvertex
