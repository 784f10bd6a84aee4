#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qvertex {

// Small exact rational used for exponents (of q and of Kahler parameters).
// Numerators/denominators stay tiny in this domain, so long long suffices;
// comparisons go through __int128 to dodge overflow.
struct Frac {
    long long n = 0;
    long long d = 1;

    Frac() = default;
    Frac(long long num) : n(num), d(1) {}
    Frac(long long num, long long den) : n(num), d(den) {
        if (d == 0) throw std::domain_error("Frac: zero denominator");
        normalize();
    }

    void normalize() {
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }

    bool is_zero() const { return n == 0; }
    bool is_integer() const { return d == 1; }

    friend Frac operator+(const Frac& a, const Frac& b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Frac operator-(const Frac& a, const Frac& b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
    friend Frac operator-(const Frac& a) { Frac r; r.n = -a.n; r.d = a.d; return r; }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.n * b.n, a.d * b.d); }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.n == 0) throw std::domain_error("Frac: division by zero");
        return Frac(a.n * b.d, a.d * b.n);
    }
    Frac& operator+=(const Frac& b) { *this = *this + b; return *this; }
    Frac& operator-=(const Frac& b) { *this = *this - b; return *this; }
    Frac& operator*=(const Frac& b) { *this = *this * b; return *this; }

    friend bool operator==(const Frac& a, const Frac& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return (__int128)a.n * b.d < (__int128)b.n * a.d;
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    std::string str() const {
        if (d == 1) return std::to_string(n);
        return std::to_string(n) + "/" + std::to_string(d);
    }

    static Frac parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return Frac(std::stoll(s));
        return Frac(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
    }
};

inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace qvertex
