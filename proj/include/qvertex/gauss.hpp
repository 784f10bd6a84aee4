#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

#include "qvertex/frac.hpp"

namespace qvertex {

// Element of Q(i): re + im*i with arbitrary-precision rational parts.
struct Gauss {
    mpq_class re, im;

    Gauss() : re(0), im(0) {}
    Gauss(long long v) : re(static_cast<long>(v)), im(0) {}
    Gauss(const mpq_class& r) : re(r), im(0) {}
    Gauss(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
    Gauss(const Frac& f) : re(mpq_class(static_cast<long>(f.n), static_cast<long>(f.d))), im(0) { re.canonicalize(); }

    static Gauss i_unit() { return Gauss(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return Gauss(a.re + b.re, a.im + b.im); }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return Gauss(a.re - b.re, a.im - b.im); }
    friend Gauss operator-(const Gauss& a) { return Gauss(-a.re, -a.im); }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gauss conj() const { return Gauss(re, -im); }
    mpq_class norm() const { return re * re + im * im; }
    Gauss inv() const {
        mpq_class n = norm();
        if (n == 0) throw std::domain_error("Gauss: inverse of zero");
        return Gauss(re / n, -im / n);
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inv(); }
    Gauss& operator+=(const Gauss& b) { re += b.re; im += b.im; return *this; }
    Gauss& operator-=(const Gauss& b) { re -= b.re; im -= b.im; return *this; }
    Gauss& operator*=(const Gauss& b) { *this = *this * b; return *this; }

    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    // arbitrary total order (for use as map keys)
    int cmp(const Gauss& o) const {
        int c = ::cmp(re, o.re);
        if (c != 0) return c;
        return ::cmp(im, o.im);
    }
    friend bool operator<(const Gauss& a, const Gauss& b) { return a.cmp(b) < 0; }

    // (-1)^e for rational e with denominator 1 or 2; branch (-1)^{1/2} = +i.
    static Gauss minus_one_pow(const Frac& e) {
        if (e.d == 1) return (e.n % 2 == 0) ? Gauss(1) : Gauss(-1);
        if (e.d == 2) {
            long long k = ((e.n % 4) + 4) % 4; // i^k
            switch (k) {
                case 0: return Gauss(1);
                case 1: return Gauss::i_unit();
                case 2: return Gauss(-1);
                default: return Gauss(mpq_class(0), mpq_class(-1));
            }
        }
        throw std::domain_error("minus_one_pow: exponent denominator must divide 2, got " + e.str());
    }

    std::string str() const {
        std::string s = re.get_str();
        if (im != 0) {
            std::string is = im.get_str();
            if (is[0] != '-') s += "+";
            s += is + "*i";
        }
        return s;
    }
};

} // namespace qvertex
