#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qvertex/kseries.hpp"

using namespace qvertex;

namespace {

KMonomial Q(const Frac& e) { return KMonomial::name_pow("Q", e); }

KSeries one_plus_Q(const Frac& bound, long long sign) {
    KSeries s(QRat(1), bound);
    s.add_term(Q(Frac(1)), QRat(sign));
    return s;
}

} // namespace

TEST_CASE("kseries_mul truncation") {
    // (1+Q)(1-Q) at D=1 -> 1
    KSeries a = one_plus_Q(Frac(1), 1), b = one_plus_Q(Frac(1), -1);
    KSeries p = a * b;
    CHECK(p.coeff(KMonomial()) == QRat(1));
    CHECK(p.coeff(Q(Frac(1))).is_zero());

    // Q^{1/2} * Q^{1/2} = Q
    KSeries h = KSeries::monomial(Q(Frac(1, 2)), QRat(1), Frac(2));
    CHECK((h * h).coeff(Q(Frac(1))) == QRat(1));

    // geometric check: (1-Q) * sum_{i<=D} Q^i = 1 at weight D
    Frac D(4);
    KSeries geo(D);
    for (long long i = 0; i <= 4; ++i) geo.add_term(Q(Frac(i)), QRat(1));
    KSeries prod = one_plus_Q(D, -1) * geo;
    CHECK(prod == KSeries(QRat(1), D));
}

TEST_CASE("kseries associativity and commutativity up to truncation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> coef(-2, 2);
    std::uniform_int_distribution<long long> he(0, 4); // half-exponents
    auto rnd = [&](const Frac& bound) {
        KSeries s(bound);
        for (int t = 0; t < 4; ++t) {
            KMonomial m = Q(Frac(he(rng), 2)) * KMonomial::name_pow("P", Frac(he(rng), 2));
            s.add_term(m, QRat(coef(rng)));
        }
        return s;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Frac D(3);
        KSeries a = rnd(D), b = rnd(D), c = rnd(D);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("kseries inverse and exp") {
    Frac D(3);
    KSeries s(QRat(1), D);
    s.add_term(Q(Frac(1)), bracket(1).inv());
    s.add_term(Q(Frac(1, 2)), QRat(2));
    KSeries inv = s.inverse();
    CHECK(s * inv == KSeries(QRat(1), D));

    KSeries l(D);
    l.add_term(Q(Frac(1)), QRat(3));
    l.add_term(Q(Frac(1, 2)), bracket(2));
    KSeries e = l.exp();
    // exp(l) * exp(-l) = 1
    CHECK(e * (-l).exp() == KSeries(QRat(1), D));
}

TEST_CASE("kseries substitution Q -> q^s Q") {
    Frac D(2);
    KSeries s(QRat(1), D);
    s.add_term(Q(Frac(1)), QRat(5));
    s.add_term(Q(Frac(2)), QRat(7));
    KSeries t = s.subst_shift("Q", Frac(3));
    CHECK(t.coeff(KMonomial()) == QRat(1));
    CHECK(t.coeff(Q(Frac(1))) == QRat(5) * QRat::q_pow(Frac(3)));
    CHECK(t.coeff(Q(Frac(2))) == QRat(7) * QRat::q_pow(Frac(6)));
}

TEST_CASE("xiseries product and inverse") {
    Frac D(2);
    int W = 2;
    XiSeries a(W, D);
    KSeries c0(QRat(1), D);
    c0.add_term(Q(Frac(1)), QRat(-3));
    a.set_sector(0, c0);
    a.set_sector(1, KSeries::monomial(Q(Frac(1, 2)), QRat::i_unit(), D));
    a.set_sector(-1, KSeries::monomial(Q(Frac(1, 2)), -QRat::i_unit(), D));

    XiSeries inv = a.inverse();
    XiSeries prod = a * inv;
    XiSeries one = XiSeries::constant(KSeries(QRat(1), D), W);
    CHECK(prod == one);
}
