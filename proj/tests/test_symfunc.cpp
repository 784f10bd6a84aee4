#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qvertex/symfunc.hpp"

using namespace qvertex;

namespace {

// --- independent oracles (test-only) ---------------------------------------

// monomial expansion of s_lam over variables x_1..x_k, via SSYT enumeration
using Mono = std::vector<int>;
void ssyt_run(const Partition& lam, int k, std::vector<std::vector<int>>& fill, int row, int col,
              std::map<Mono, long long>& out) {
    if (row >= lam.length()) {
        Mono content(k, 0);
        for (const auto& r : fill)
            for (int v : r) content[v - 1]++;
        out[content]++;
        return;
    }
    if (col >= lam.part(row + 1)) {
        ssyt_run(lam, k, fill, row + 1, 0, out);
        return;
    }
    int lo = 1, hi = k;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);                       // rows weakly increase
    if (row > 0 && col < lam.part(row)) lo = std::max(lo, fill[row - 1][col] + 1); // cols strictly
    for (int v = lo; v <= hi; ++v) {
        fill[row][col] = v;
        ssyt_run(lam, k, fill, row, col + 1, out);
    }
}

std::map<Mono, long long> schur_monomials(const Partition& lam, int k) {
    std::map<Mono, long long> out;
    if (lam.length() > k) return out;
    std::vector<std::vector<int>> fill(lam.length());
    for (int i = 0; i < lam.length(); ++i) fill[i].assign(lam.part(i + 1), 0);
    if (lam.empty()) {
        out[Mono(k, 0)] = 1;
        return out;
    }
    ssyt_run(lam, k, fill, 0, 0, out);
    return out;
}

std::map<Mono, long long> mono_mul(const std::map<Mono, long long>& a,
                                   const std::map<Mono, long long>& b) {
    std::map<Mono, long long> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    return out;
}

// evaluate s_nu at the explicit first T variables of an alphabet, exactly
QRat schur_at_finite(const Partition& nu, const Alphabet& a, int T) {
    // h_n(x_1..x_T) by the standard one-variable-at-a-time recurrence
    int N = nu.size();
    std::vector<QRat> h(N + 1, QRat(0));
    h[0] = QRat(1);
    for (int i = 1; i <= T; ++i) {
        Frac e = (Frac(a.mu.part(i)) - Frac(i) + a.shift) * Frac(a.sign);
        QRat x = QRat::q_pow(e);
        for (int n = 1; n <= N; ++n) h[n] += x * h[n - 1];
    }
    int l = nu.length();
    if (l == 0) return QRat(1);
    std::vector<std::vector<QRat>> m(l, std::vector<QRat>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int d = nu.part(i) - i + j;
            m[i - 1][j - 1] = (d < 0 || d > N) ? QRat(0) : h[d];
        }
    return qrat_det(m);
}

} // namespace

TEST_CASE("lr coefficients, small values") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({1})) == 0);
    // c^{lam}_{empty, lam} = 1
    for (const auto& lam : partitions_up_to(6))
        CHECK(lr_coefficient(lam, Partition(), lam) == 1);
    // classical: c^{(4,2)}_{(2,1),(2,1)} = 1, c^{(3,2,1)}_{(2,1),(2,1)} = 2
    CHECK(lr_coefficient(Partition({4, 2}), Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
}

TEST_CASE("lr symmetry in mu, nu") {
    for (const auto& mu : partitions_up_to(4))
        for (const auto& nu : partitions_up_to(4))
            for (const auto& lam : partitions_of(mu.size() + nu.size()))
                CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
}

TEST_CASE("lr against brute-force monomial multiplication") {
    for (const auto& mu : partitions_up_to(3)) {
        for (const auto& nu : partitions_up_to(3)) {
            int k = mu.size() + nu.size();
            if (k == 0) continue;
            auto prod = mono_mul(schur_monomials(mu, k), schur_monomials(nu, k));
            std::map<Mono, long long> viaLR;
            for (const auto& lam : partitions_of(k)) {
                long long c = lr_coefficient(lam, mu, nu);
                if (c == 0) continue;
                for (const auto& [m, v] : schur_monomials(lam, k)) viaLR[m] += c * v;
            }
            CHECK(prod == viaLR);
        }
    }
}

TEST_CASE("skew expansion") {
    auto e = skew_expand(Partition({2, 1}), Partition({1}));
    CHECK(e.size() == 2);
    CHECK(e[Partition({2})] == 1);
    CHECK(e[Partition({1, 1})] == 1);

    for (const auto& lam : partitions_up_to(4)) {
        auto fx = skew_expand(lam, lam);
        CHECK(fx.size() == 1);
        CHECK(fx[Partition()] == 1);
    }
    CHECK(skew_expand(Partition({1}), Partition({2})).empty());
}

TEST_CASE("power sums at principal alphabets") {
    // mu = empty, shift 1/2, k=1: q^{-1/2}/(1-q^{-1})
    QRat p = power_sum_at(Alphabet{Partition(), Frac(1, 2), 1}, 1);
    CHECK(p == geom_qsum(Frac(-1, 2), Frac(-1)));

    // mu=(1), c=0, k=1: 1 + q^{-2}/(1-q^{-1})
    QRat p2 = power_sum_at(Alphabet{Partition({1}), Frac(0), 1}, 1);
    CHECK(p2 == QRat(1) + geom_qsum(Frac(-2), Frac(-1)));

    // mu = empty, c=0, k=2: q^{-2}/(1-q^{-2})
    QRat p3 = power_sum_at(Alphabet{Partition(), Frac(0), 1}, 2);
    CHECK(p3 == geom_qsum(Frac(-1), Frac(-1), 2));
}

TEST_CASE("schur at alphabets, closed forms") {
    Alphabet qmrho{Partition(), Frac(1, 2), -1}; // {q^{1/2}, q^{3/2}, ...}
    CHECK(schur_at(Partition(), qmrho) == QRat(1));

    // s_(1) = q^{1/2}/(1-q)
    QLaurent d;
    d.add_term(Frac(0), Gauss(1));
    d.add_term(Frac(1), Gauss(-1));
    CHECK(schur_at(Partition({1}), qmrho) == QRat(QLaurent::q_pow(Frac(1, 2)), d));
}

TEST_CASE("specialization truncation oracle, q-order 20, T=40") {
    // closed form vs explicit 40-variable evaluation through |exponent| <= 20
    Frac window(20);
    for (const auto& mu : partitions_up_to(3)) {
        for (const auto& nu : partitions_up_to(4)) {
            if (nu.empty()) continue;
            // mirrored alphabet (ascending exponents)
            Alphabet up{mu, Frac(1, 2), -1};
            QLaurent closed = schur_at(nu, up).expand(window, true);
            QRat fin = schur_at_finite(nu, up, 40);
            QLaurent finite_trunc;
            CHECK(fin.den().is_one());
            for (const auto& [e, c] : fin.num().terms())
                if (e <= window) finite_trunc.add_term(e, c);
            CHECK(closed == finite_trunc);
        }
    }
    // one descending-direction case (integer-shift alphabet of W_{mu,nu})
    Alphabet down{Partition({2, 1}), Frac(0), 1};
    Partition nu({2, 1});
    QLaurent closed = schur_at(nu, down).expand(window, false);
    QRat fin = schur_at_finite(nu, down, 40);
    QLaurent finite_trunc;
    for (const auto& [e, c] : fin.num().terms())
        if (Frac(0) - window <= e) finite_trunc.add_term(e, c);
    CHECK(closed == finite_trunc);
}

TEST_CASE("skew schur factorization identity") {
    // skew_schur_at(lam/eta, A) = sum_nu c^lam_{eta nu} schur_at(nu, A), |lam| <= 5
    Alphabet a{Partition({1}), Frac(1, 2), 1};
    for (const auto& lam : partitions_up_to(5)) {
        for (const auto& eta : partitions_up_to(lam.size())) {
            if (!lam.contains(eta)) continue;
            QRat lhs = skew_schur_at(lam, eta, a);
            QRat rhs(0);
            for (const auto& [nu, c] : skew_expand(lam, eta)) rhs += QRat(c) * schur_at(nu, a);
            CHECK(lhs == rhs);
        }
    }
}
