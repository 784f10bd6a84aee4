#include "qvertex/vertex.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qvertex/symfunc.hpp"

namespace qvertex {

QRat w_one(const Partition& mu) {
    int l = mu.length();
    QRat r = QRat::q_pow(Frac(mu.kappa(), 4));
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            r = r * bracket(mu.part(i) - mu.part(j) + j - i) / bracket(j - i);
    for (int i = 1; i <= l; ++i)
        for (int v = 1; v <= mu.part(i); ++v) r = r / bracket(v - i + l);
    return r;
}

QRat w_two(const Partition& mu, const Partition& nu) {
    QRat s = schur_at(nu, Alphabet{mu, Frac(0), 1});
    return QRat::q_pow(Frac(nu.size(), 2)) * w_one(mu) * s;
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    for (int n = 0; n <= lam.size(); ++n)
        for (const auto& p : partitions_of(n))
            if (lam.contains(p)) out.push_back(p);
    return out;
}

QRat vertex_sum(const Partition& mu1, const Partition& mu2, const Partition& mu3) {
    Partition mu2t = mu2.transpose();
    Partition mu3t = mu3.transpose();
    QRat pre = QRat::q_pow(Frac(mu2.kappa(), 2) + Frac(mu3.kappa(), 2));
    QRat wmu2 = w_one(mu2);
    QRat acc(0);
    for (const auto& rho1 : subpartitions(mu1)) {
        int d = mu1.size() - rho1.size();
        if (mu3t.size() < d) continue;
        for (const auto& rho3t : subpartitions(mu3t)) {
            if (mu3t.size() - rho3t.size() != d) continue;
            // c^{mu1 mu3t}_{rho1 rho3t} = sum_eta c^{mu1}_{eta rho1} c^{mu3t}_{eta rho3t}
            long long c = 0;
            for (const auto& eta : partitions_of(d))
                c += lr_coefficient(mu1, eta, rho1) * lr_coefficient(mu3t, eta, rho3t);
            if (c == 0) continue;
            acc += QRat(c) * w_two(mu2t, rho1) * w_two(mu2, rho3t);
        }
    }
    return pre * acc / wmu2;
}

QRat vertex_schur(const Partition& mu1, const Partition& mu2, const Partition& mu3) {
    Partition mu2t = mu2.transpose();
    Partition mu3t = mu3.transpose();
    // rho = (-1/2, -3/2, ...): q^{mu+rho} is Alphabet{mu, 1/2, +1},
    // q^{-rho} = {q^{1/2}, q^{3/2}, ...} is Alphabet{empty, 1/2, -1}
    Alphabet qmrho{Partition(), Frac(1, 2), -1};
    Alphabet a2t{mu2t, Frac(1, 2), 1};
    Alphabet a2{mu2, Frac(1, 2), 1};
    QRat sign = (mu2.size() % 2 == 0) ? QRat(1) : QRat(-1);
    QRat pre = sign * QRat::q_pow(Frac(mu3.kappa(), 2)) * schur_at(mu2t, qmrho);
    QRat acc(0);
    for (const auto& eta : subpartitions(mu1)) {
        if (!mu3t.contains(eta)) continue;
        acc += skew_schur_at(mu1, eta, a2t) * skew_schur_at(mu3t, eta, a2);
    }
    return pre * acc;
}

namespace {
std::map<std::tuple<Partition, Partition, Partition>, QRat> vertex_memo;
std::mutex vertex_mutex;
} // namespace

QRat vertex(const Partition& mu1, const Partition& mu2, const Partition& mu3) {
    std::tuple<Partition, Partition, Partition> key{mu1, mu2, mu3};
    {
        std::lock_guard<std::mutex> lock(vertex_mutex);
        auto it = vertex_memo.find(key);
        if (it != vertex_memo.end()) return it->second;
    }
    QRat v = vertex_schur(mu1, mu2, mu3);
    {
        std::lock_guard<std::mutex> lock(vertex_mutex);
        vertex_memo[key] = v;
    }
    return v;
}

QRat framed_vertex(const Partition& mu1, const Partition& mu2, const Partition& mu3,
                   const Framing& fr) {
    Frac e = Frac(fr.a[0] * mu1.kappa() + fr.a[1] * mu2.kappa() + fr.a[2] * mu3.kappa(), 2);
    return QRat::q_pow(e) * vertex(mu1, mu2, mu3);
}

QRat adkmv_coeff(int i, int j, long long m, long long n, const Framing& fr) {
    if (i < 1 || i > 3) throw std::domain_error("adkmv_coeff: leg index out of range");
    // cyclic conventions
    if (j == 4) j = 1;
    if (j == 0) j = 3;
    if (j < 1 || j > 3) throw std::domain_error("adkmv_coeff: leg index out of range");
    auto aa = [&](int leg) { return fr.a[leg - 1]; };
    QRat sign = (n % 2 == 0) ? QRat(1) : QRat(-1);
    if (i == j) {
        Frac e((2 * aa(i) + 1) * (m * (m + 1) - n * (n + 1)), 4);
        return sign * QRat::q_pow(e) /
               (bracket(m + n + 1) * bracket_factorial(m) * bracket_factorial(n));
    }
    bool forward = (j == i % 3 + 1); // j = i+1 cyclically
    Frac e(0);
    QRat sum(0);
    if (forward) {
        e = Frac((2 * aa(i) + 1) * m * (m + 1) - (2 * aa(j) + 1) * n * (n + 1), 4) + Frac(1, 6);
        for (long long l = 0; l <= std::min(m, n); ++l) {
            sum += QRat::q_pow(Frac((l + 1) * (m + n - l), 2)) /
                   (bracket_factorial(m - l) * bracket_factorial(n - l));
        }
        return sign * QRat::q_pow(e) * sum;
    }
    // j = i-1 cyclically
    e = Frac((2 * aa(i) + 1) * m * (m + 1) - (2 * aa(j) + 1) * n * (n + 1), 4) - Frac(1, 6);
    for (long long l = 0; l <= std::min(m, n); ++l) {
        sum += QRat::q_pow(Frac(-(l + 1) * (m + n - l), 2)) /
               (bracket_factorial(m - l) * bracket_factorial(n - l));
    }
    return -sign * QRat::q_pow(e) * sum;
}

} // namespace qvertex
