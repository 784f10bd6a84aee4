#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvertex/qrat.hpp"

namespace qvertex {

// Monomial in named Kahler parameters with rational exponents
// (non-negative, denominator dividing 2). Weight = sum of exponents.
struct KMonomial {
    std::map<std::string, Frac> exps;

    KMonomial() = default;
    static KMonomial name_pow(const std::string& name, const Frac& e);

    bool is_unit() const { return exps.empty(); }
    Frac weight() const;
    KMonomial operator*(const KMonomial& o) const;
    // division; may produce negative exponents in intermediates of
    // normalization adapters -- callers must restore non-negativity
    KMonomial operator/(const KMonomial& o) const;
    KMonomial pow(const Frac& k) const;

    bool operator<(const KMonomial& o) const { return exps < o.exps; }
    bool operator==(const KMonomial& o) const { return exps == o.exps; }
    bool operator!=(const KMonomial& o) const { return !(*this == o); }

    std::string str() const;
};

// Truncated series sum_m c_m * m over Kahler monomials with total weight <= bound.
class KSeries {
public:
    using TermMap = std::map<KMonomial, QRat>;

    KSeries() : bound_(0) {}
    explicit KSeries(const Frac& bound) : bound_(bound) {}
    KSeries(const QRat& c, const Frac& bound);

    static KSeries monomial(const KMonomial& m, const QRat& c, const Frac& bound);

    const TermMap& terms() const { return terms_; }
    const Frac& bound() const { return bound_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const KMonomial& m, const QRat& c); // drops terms above bound
    QRat coeff(const KMonomial& m) const;
    KSeries truncated(const Frac& new_bound) const;

    KSeries operator+(const KSeries& o) const;
    KSeries operator-(const KSeries& o) const;
    KSeries operator-() const;
    KSeries operator*(const KSeries& o) const;
    KSeries scaled(const QRat& c) const;
    KSeries& operator+=(const KSeries& o) { *this = *this + o; return *this; }
    KSeries& operator-=(const KSeries& o) { *this = *this - o; return *this; }
    KSeries& operator*=(const KSeries& o) { *this = *this * o; return *this; }
    bool operator==(const KSeries& o) const { return terms_ == o.terms_; }
    bool operator!=(const KSeries& o) const { return !(*this == o); }

    // multiplicative inverse of a series with invertible weight-0 part,
    // by weight-graded recursion
    KSeries inverse() const;
    // exp of a series with no weight-0 part
    KSeries exp() const;

    // multiply every coefficient by q^{s * exponent(name)}; implements the
    // Kahler substitution name -> q^s * name
    KSeries subst_shift(const std::string& name, const Frac& s) const;
    // drop all strictly positive-weight terms (evaluation at Q=0)
    KSeries weight_zero_part() const;
    // multiply by a single monomial (weights shift accordingly; bound kept)
    KSeries shifted(const KMonomial& m) const;

    std::string str() const;

private:
    TermMap terms_;
    Frac bound_;
};

// Finite Xi-Laurent window of KSeries: sum_{|N| <= window} sec_N * Xi^{-N}.
class XiSeries {
public:
    XiSeries() : window_(0), bound_(0) {}
    XiSeries(int window, const Frac& bound) : window_(window), bound_(bound) {}
    static XiSeries constant(const KSeries& s, int window);

    int window() const { return window_; }
    const Frac& bound() const { return bound_; }
    const std::map<int, KSeries>& sectors() const { return sectors_; }
    bool is_zero() const;

    void set_sector(int n, const KSeries& s);
    KSeries sector(int n) const; // zero series if absent

    XiSeries operator+(const XiSeries& o) const;
    XiSeries operator-(const XiSeries& o) const;
    XiSeries operator*(const XiSeries& o) const; // clipped to min window
    XiSeries scaled(const QRat& c) const;
    XiSeries scaled_k(const KSeries& c) const;
    XiSeries& operator+=(const XiSeries& o) { *this = *this + o; return *this; }
    XiSeries& operator-=(const XiSeries& o) { *this = *this - o; return *this; }
    bool operator==(const XiSeries& o) const;
    bool operator!=(const XiSeries& o) const { return !(*this == o); }

    // inverse of a series whose Xi^0 sector has invertible weight-0 part
    XiSeries inverse() const;
    XiSeries truncated(const Frac& new_bound) const;

    std::string str() const;

private:
    std::map<int, KSeries> sectors_; // key N means coefficient of Xi^{-N}
    int window_;
    Frac bound_;
};

} // namespace qvertex
