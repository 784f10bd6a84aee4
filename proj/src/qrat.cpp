#include "qvertex/qrat.hpp"

#include <algorithm>
#include <sstream>

namespace qvertex {

// ---------------------------------------------------------------- QLaurent

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Frac(0) && terms_.begin()->second == Gauss(1);
}

void QLaurent::add_term(const Frac& e, const Gauss& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Frac QLaurent::min_exp() const {
    if (terms_.empty()) throw std::domain_error("QLaurent: min_exp of zero");
    return terms_.begin()->first;
}

Frac QLaurent::max_exp() const {
    if (terms_.empty()) throw std::domain_error("QLaurent: max_exp of zero");
    return terms_.rbegin()->first;
}

Gauss QLaurent::coeff(const Frac& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Gauss() : it->second;
}

const Gauss& QLaurent::leading_low() const {
    if (terms_.empty()) throw std::domain_error("QLaurent: leading term of zero");
    return terms_.begin()->second;
}

QLaurent QLaurent::shifted(const Frac& e) const {
    QLaurent r;
    for (const auto& [ex, c] : terms_) r.terms_.emplace(ex + e, c);
    return r;
}

QLaurent QLaurent::scaled(const Gauss& c) const {
    QLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [ex, v] : terms_) r.terms_.emplace(ex, v * c);
    return r;
}

QLaurent QLaurent::subst_q_inverse() const {
    QLaurent r;
    for (const auto& [ex, c] : terms_) r.terms_.emplace(-ex, c);
    return r;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

QLaurent operator-(const QLaurent& a) {
    return a.scaled(Gauss(-1));
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!e.is_zero()) os << "*q^" << (e.d == 1 ? e.str() : "(" + e.str() + ")");
    }
    return os.str();
}

// ------------------------------------------------- dense polynomial helpers

namespace {

struct DensePoly {
    std::vector<Gauss> c; // c[i] coefficient of x^i
    int deg() const {
        for (int i = (int)c.size() - 1; i >= 0; --i)
            if (!c[i].is_zero()) return i;
        return -1;
    }
    void trim() { c.resize(deg() + 1); }
    bool is_zero() const { return deg() < 0; }
};

long long exponent_lcm(const QLaurent& a) {
    long long L = 1;
    for (const auto& [e, c] : a.terms()) L = lcm_ll(L, e.d);
    return L;
}

// view a (shifted) Laurent object as a dense polynomial in x = q^{1/L}
DensePoly to_dense(const QLaurent& a, long long L, const Frac& shift) {
    DensePoly p;
    for (const auto& [e, c] : a.terms()) {
        Frac idx = (e - shift) * Frac(L);
        if (!idx.is_integer() || idx.n < 0) throw std::logic_error("to_dense: bad exponent clearing");
        if ((std::size_t)idx.n >= p.c.size()) p.c.resize(idx.n + 1);
        p.c[idx.n] = c;
    }
    return p;
}

QLaurent from_dense(const DensePoly& p, long long L) {
    QLaurent r;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (!p.c[i].is_zero()) r.add_term(Frac((long long)i, L), p.c[i]);
    return r;
}

void make_monic_low(DensePoly& p) {
    int lo = -1;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (!p.c[i].is_zero()) { lo = (int)i; break; }
    if (lo < 0) return;
    if (lo > 0) p.c.erase(p.c.begin(), p.c.begin() + lo);
    Gauss inv = p.c[0].inv();
    for (auto& g : p.c)
        if (!g.is_zero()) g *= inv;
}

// remainder of a by b over the field Q(i); b nonzero
DensePoly poly_mod(DensePoly a, const DensePoly& b) {
    a.trim();
    int db = b.deg();
    Gauss lead_inv = b.c[db].inv();
    while (a.deg() >= db) {
        int da = a.deg();
        Gauss f = a.c[da] * lead_inv;
        for (int i = 0; i <= db; ++i) {
            if (b.c[i].is_zero()) continue;
            a.c[da - db + i] -= f * b.c[i];
        }
        a.trim();
    }
    return a;
}

DensePoly poly_divide_exact(DensePoly a, const DensePoly& b) {
    a.trim();
    int db = b.deg();
    Gauss lead_inv = b.c[db].inv();
    DensePoly q;
    if (a.deg() >= db) q.c.resize(a.deg() - db + 1);
    while (a.deg() >= db) {
        int da = a.deg();
        Gauss f = a.c[da] * lead_inv;
        q.c[da - db] = f;
        for (int i = 0; i <= db; ++i) {
            if (b.c[i].is_zero()) continue;
            a.c[da - db + i] -= f * b.c[i];
        }
        a.trim();
    }
    if (!a.is_zero()) throw std::domain_error("laurent_div_exact: not divisible");
    return q;
}

} // namespace

QLaurent laurent_gcd(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() && b.is_zero()) return QLaurent();
    if (a.is_zero() || b.is_zero()) {
        const QLaurent& nz = a.is_zero() ? b : a;
        QLaurent r = nz.shifted(-nz.min_exp());
        return r.scaled(r.leading_low().inv());
    }
    long long L = lcm_ll(exponent_lcm(a), exponent_lcm(b));
    DensePoly pa = to_dense(a, L, a.min_exp());
    DensePoly pb = to_dense(b, L, b.min_exp());
    while (!pb.is_zero()) {
        DensePoly r = poly_mod(pa, pb);
        pa = std::move(pb);
        pb = std::move(r);
        make_monic_low(pb); // unit normalization; keeps coefficients tame
        // strip trailing x powers is handled by make_monic_low (low side)
    }
    make_monic_low(pa);
    return from_dense(pa, L);
}

QLaurent laurent_div_exact(const QLaurent& a, const QLaurent& b) {
    if (b.is_zero()) throw std::domain_error("laurent_div_exact: division by zero");
    if (a.is_zero()) return QLaurent();
    long long L = lcm_ll(exponent_lcm(a), exponent_lcm(b));
    Frac sa = a.min_exp(), sb = b.min_exp();
    DensePoly pa = to_dense(a, L, sa);
    DensePoly pb = to_dense(b, L, sb);
    DensePoly q = poly_divide_exact(pa, pb);
    return from_dense(q, L).shifted(sa - sb);
}

// ------------------------------------------------------------------- QRat

QRat::QRat(const QLaurent& n, const QLaurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    canonicalize();
}

void QRat::reduce() {
    if (num_.is_zero() || den_.size() == 1 || num_.size() == 1) return;
    QLaurent g = laurent_gcd(num_, den_);
    if (g.size() > 1) {
        num_ = laurent_div_exact(num_, g);
        den_ = laurent_div_exact(den_, g);
    }
}

void QRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = QLaurent(1);
        return;
    }
    reduce();
    Frac e0 = den_.min_exp();
    if (!e0.is_zero()) {
        num_ = num_.shifted(-e0);
        den_ = den_.shifted(-e0);
    }
    Gauss c = den_.leading_low();
    if (!(c == Gauss(1))) {
        Gauss ci = c.inv();
        num_ = num_.scaled(ci);
        den_ = den_.scaled(ci);
    }
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QRat r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

QRat operator-(const QRat& a, const QRat& b) {
    return a + (-b);
}

QRat operator-(const QRat& a) {
    QRat r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

QRat operator*(const QRat& a, const QRat& b) {
    QRat r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("QRat: division by zero");
    QRat r;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.canonicalize();
    return r;
}

QRat QRat::inv() const {
    if (is_zero()) throw std::domain_error("QRat: inverse of zero");
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

QRat QRat::pow(long long k) const {
    if (k == 0) return QRat(1);
    if (k < 0) return inv().pow(-k);
    QRat base = *this, acc(1);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

QRat QRat::subst_q_inverse() const {
    QRat r;
    r.num_ = num_.subst_q_inverse();
    r.den_ = den_.subst_q_inverse();
    r.canonicalize();
    return r;
}

bool operator==(const QRat& a, const QRat& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool QRat::operator<(const QRat& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

QLaurent QRat::expand(const Frac& limit, bool ascending) const {
    if (!ascending) {
        QRat flipped = subst_q_inverse();
        return flipped.expand(limit, true).subst_q_inverse();
    }
    // den has min exponent 0 and lowest coefficient 1
    QLaurent rem = num_;
    QLaurent out;
    while (!rem.is_zero()) {
        Frac e = rem.min_exp();
        if (e > limit) break;
        Gauss c = rem.leading_low();
        out.add_term(e, c);
        rem = rem - den_.shifted(e).scaled(c);
    }
    return out;
}

std::string QRat::str() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.str() + ")";
    if (!den_.is_one()) s += " / (" + den_.str() + ")";
    return s;
}

QRat bracket(long long k) {
    if (k < 1) throw std::domain_error("bracket: k must be >= 1");
    QLaurent n;
    n.add_term(Frac(k, 2), Gauss(1));
    n.add_term(Frac(-k, 2), Gauss(-1));
    return QRat(n);
}

QRat bracket_factorial(long long m) {
    if (m < 0) throw std::domain_error("bracket_factorial: m must be >= 0");
    QRat r(1);
    for (long long k = 1; k <= m; ++k) r = r * bracket(k);
    return r;
}

QRat geom_qsum(const Frac& e0, const Frac& s, long long k) {
    if (s.is_zero()) throw std::domain_error("geom_qsum: zero step diverges");
    if (k < 1) throw std::domain_error("geom_qsum: k must be >= 1");
    QLaurent den(1);
    den.add_term(s * Frac(k), Gauss(-1));
    return QRat(QLaurent::q_pow(e0 * Frac(k)), den);
}

} // namespace qvertex
