#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvertex/frac.hpp"
#include "qvertex/gauss.hpp"

namespace qvertex {

// Finite Laurent object in q with exact rational exponents: sum c_e * q^e.
class QLaurent {
public:
    using TermMap = std::map<Frac, Gauss>;

    QLaurent() = default;
    explicit QLaurent(long long c) { if (c != 0) terms_[Frac(0)] = Gauss(c); }
    explicit QLaurent(const Gauss& c) { if (!c.is_zero()) terms_[Frac(0)] = c; }

    static QLaurent monomial(const Gauss& c, const Frac& e) {
        QLaurent r;
        if (!c.is_zero()) r.terms_[e] = c;
        return r;
    }
    static QLaurent q_pow(const Frac& e) { return monomial(Gauss(1), e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }

    void add_term(const Frac& e, const Gauss& c);

    Frac min_exp() const;
    Frac max_exp() const;
    Gauss coeff(const Frac& e) const;
    const Gauss& leading_low() const; // coefficient at min_exp

    QLaurent shifted(const Frac& e) const;        // * q^e
    QLaurent scaled(const Gauss& c) const;        // * scalar
    QLaurent subst_q_inverse() const;             // q -> 1/q

    friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator+=(const QLaurent& b) { *this = *this + b; return *this; }
    QLaurent& operator-=(const QLaurent& b) { *this = *this - b; return *this; }
    QLaurent& operator*=(const QLaurent& b) { *this = *this * b; return *this; }
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }
    bool operator<(const QLaurent& o) const {
        return std::lexicographical_compare(
            terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return x.second < y.second;
            });
    }

    std::string str() const;

private:
    TermMap terms_; // no zero coefficients stored
};

// gcd of two Laurent objects viewed as polynomials after exponent clearing;
// result normalized (lowest exponent 0, lowest coefficient 1).
QLaurent laurent_gcd(const QLaurent& a, const QLaurent& b);
// exact division (throws if not divisible)
QLaurent laurent_div_exact(const QLaurent& a, const QLaurent& b);

// Exact rational function in q: num/den of QLaurent values, canonical form:
// den has minimal exponent 0 and its lowest coefficient is 1.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long long c) : num_(c), den_(1) {}
    QRat(const Gauss& c) : num_(c), den_(1) {}
    QRat(const QLaurent& n) : num_(n), den_(1) {}
    QRat(const QLaurent& n, const QLaurent& d);

    static QRat q_pow(const Frac& e) { return QRat(QLaurent::q_pow(e)); }
    static QRat i_unit() { return QRat(Gauss::i_unit()); }

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat inv() const;
    QRat pow(long long k) const;
    QRat subst_q_inverse() const;

    QRat& operator+=(const QRat& b) { *this = *this + b; return *this; }
    QRat& operator-=(const QRat& b) { *this = *this - b; return *this; }
    QRat& operator*=(const QRat& b) { *this = *this * b; return *this; }
    QRat& operator/=(const QRat& b) { *this = *this / b; return *this; }

    // decidable equality (by cross multiplication)
    friend bool operator==(const QRat& a, const QRat& b);
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }
    bool operator<(const QRat& o) const; // arbitrary total order for map keys

    // q-series expansion from the low-exponent end (ascending=true) or the
    // high end (descending), through |exponent| <= limit.
    QLaurent expand(const Frac& limit, bool ascending = true) const;

    std::string str() const;

private:
    void canonicalize();
    void reduce();
    QLaurent num_, den_;
};

// q^{k/2} - q^{-k/2}
QRat bracket(long long k);
// [m]! = prod_{k=1}^m [k], [0]! = 1
QRat bracket_factorial(long long m);
// closed form of sum_{i>=0} q^{k(e0 + i s)} = q^{k e0} / (1 - q^{k s}); s != 0
QRat geom_qsum(const Frac& e0, const Frac& s, long long k = 1);

} // namespace qvertex
