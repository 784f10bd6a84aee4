#include "qvertex/flux.hpp"

namespace qvertex {

const KSeries* FluxSeries::find(int N, const Partition& lam) const {
    auto its = sectors.find(N);
    if (its == sectors.end()) return nullptr;
    auto itl = its->second.find(lam);
    if (itl == its->second.end()) return nullptr;
    return &itl->second;
}

XiSeries FluxSeries::xi_coefficient(const Partition& lam) const {
    XiSeries x(n_max, bound);
    for (const auto& [N, coeffs] : sectors) {
        auto it = coeffs.find(lam);
        if (it != coeffs.end()) x.set_sector(N, it->second);
    }
    return x;
}

KMonomial sector_prefactor_monomial(const LoopModel& model, int N) {
    KMonomial m;
    Frac e(1ll * N * N, 2);
    for (const auto& name : model.distinct_names()) m = m * KMonomial::name_pow(name, e);
    return m;
}

Frac sector_prefactor_qexp(const LoopModel& model, const Partition& lam, int N) {
    long long g = model.gamma_total();
    Frac e = Frac(-(long long)N * lam.size());
    e += Frac((g + 2ll * model.M) * N * (4ll * N * N - 1), 24);
    return e;
}

KSeries sector_coefficient(const Partition& lam, int N, const LoopModel& model, const Frac& D,
                           bool* truncated_out) {
    model.validate();
    if (truncated_out) *truncated_out = false;
    if (N == 0) return one_brane(lam, model, D);

    KMonomial pref = sector_prefactor_monomial(model, N);
    Frac pw = pref.weight();
    if (pw > D) {
        if (truncated_out) *truncated_out = true;
        return KSeries(D); // sector starts above the truncation bound
    }
    // open series at reduced depth, then Kahler substitution Q_i -> q^{(gamma_i+2)N} Q_i
    KSeries z = one_brane(lam, model, D - pw);
    for (const auto& name : model.distinct_names())
        z = z.subst_shift(name, Frac((model.gamma_of(name) + 2) * (long long)N));

    QRat c = QRat::q_pow(sector_prefactor_qexp(model, lam, N));
    long long g = model.gamma_total();
    c = c * QRat(Gauss::minus_one_pow(Frac(g * (long long)N * N, 2)));
    return z.shifted(pref).scaled(c).truncated(D);
}

int default_n_max(const LoopModel& model, const Frac& D) {
    int n = 0;
    while (sector_prefactor_monomial(model, n + 1).weight() <= D) ++n;
    return n;
}

FluxSeries total_partition(const LoopModel& model, const Frac& D, int l_max, int n_max) {
    FluxSeries out;
    out.n_max = n_max;
    out.bound = D;
    out.l_max = l_max;
    for (int N = -n_max; N <= n_max; ++N) {
        SchurSeries coeffs;
        for (const auto& lam : partitions_up_to(l_max)) {
            KSeries z = sector_coefficient(lam, N, model, D);
            if (!z.is_zero()) coeffs.emplace(lam, z);
        }
        out.sectors.emplace(N, std::move(coeffs));
    }
    return out;
}

} // namespace qvertex
