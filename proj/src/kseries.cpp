#include "qvertex/kseries.hpp"

#include <sstream>

namespace qvertex {

// ------------------------------------------------------------- KMonomial

KMonomial KMonomial::name_pow(const std::string& name, const Frac& e) {
    KMonomial m;
    if (!e.is_zero()) m.exps[name] = e;
    return m;
}

Frac KMonomial::weight() const {
    Frac w(0);
    for (const auto& [n, e] : exps) w += e;
    return w;
}

KMonomial KMonomial::operator*(const KMonomial& o) const {
    KMonomial r = *this;
    for (const auto& [n, e] : o.exps) {
        auto it = r.exps.find(n);
        if (it == r.exps.end()) {
            r.exps.emplace(n, e);
        } else {
            it->second += e;
            if (it->second.is_zero()) r.exps.erase(it);
        }
    }
    return r;
}

KMonomial KMonomial::operator/(const KMonomial& o) const {
    KMonomial inv;
    for (const auto& [n, e] : o.exps) inv.exps[n] = -e;
    return *this * inv;
}

KMonomial KMonomial::pow(const Frac& k) const {
    KMonomial r;
    if (k.is_zero()) return r;
    for (const auto& [n, e] : exps) r.exps[n] = e * k;
    return r;
}

std::string KMonomial::str() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, e] : exps) {
        if (!first) os << "*";
        first = false;
        os << n;
        if (e != Frac(1)) os << "^" << (e.d == 1 ? e.str() : "(" + e.str() + ")");
    }
    return os.str();
}

// --------------------------------------------------------------- KSeries

KSeries::KSeries(const QRat& c, const Frac& bound) : bound_(bound) {
    if (!c.is_zero()) terms_[KMonomial()] = c;
}

KSeries KSeries::monomial(const KMonomial& m, const QRat& c, const Frac& bound) {
    KSeries r(bound);
    r.add_term(m, c);
    return r;
}

void KSeries::add_term(const KMonomial& m, const QRat& c) {
    if (c.is_zero() || m.weight() > bound_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QRat KSeries::coeff(const KMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QRat(0) : it->second;
}

KSeries KSeries::truncated(const Frac& new_bound) const {
    KSeries r(new_bound);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

KSeries KSeries::operator+(const KSeries& o) const {
    KSeries r(bound_ < o.bound_ ? bound_ : o.bound_);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

KSeries KSeries::operator-(const KSeries& o) const {
    return *this + (-o);
}

KSeries KSeries::operator-() const {
    KSeries r(bound_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

KSeries KSeries::operator*(const KSeries& o) const {
    KSeries r(bound_ < o.bound_ ? bound_ : o.bound_);
    for (const auto& [ma, ca] : terms_) {
        Frac wa = ma.weight();
        if (wa > r.bound_) continue;
        for (const auto& [mb, cb] : o.terms_) {
            if (wa + mb.weight() > r.bound_) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

KSeries KSeries::scaled(const QRat& c) const {
    KSeries r(bound_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

KSeries KSeries::inverse() const {
    QRat c0 = coeff(KMonomial());
    if (c0.is_zero()) throw std::domain_error("KSeries: inverse needs invertible constant term");
    // group terms by weight
    std::map<Frac, std::vector<std::pair<KMonomial, QRat>>> by_weight;
    for (const auto& [m, c] : terms_)
        if (!m.is_unit()) by_weight[m.weight()].push_back({m, c});
    QRat c0i = c0.inv();
    KSeries inv(bound_);
    inv.add_term(KMonomial(), c0i);
    // process target weights in increasing order, solving c0 * inv_w = -(sum_{w'<w} a_{w-w'} inv_{w'})
    // iterate: repeatedly multiply accumulated inverse by residual terms
    // simple graded fixpoint: inv_{k+1} = c0i * (1 - (this - c0)*inv_k) accumulate
    // use Newton-free direct recursion over weights:
    std::map<Frac, KSeries> inv_parts; // weight -> partial series of that weight
    inv_parts[Frac(0)] = KSeries::monomial(KMonomial(), c0i, bound_);
    // collect all achievable weights up to bound from sums of term weights
    // do a straightforward loop: maintain full inverse so far, and correct weight by weight.
    // Since weights lie in (1/2)Z_{>=0}, iterate w = 1/2, 1, 3/2, ...
    for (long long halfw = 1; Frac(halfw, 2) <= bound_; ++halfw) {
        Frac w(halfw, 2);
        // coefficient of weight w in (this * inv) must vanish
        KSeries conv(bound_);
        for (const auto& [wa, terms] : by_weight) {
            if (wa > w) break;
            auto itp = inv_parts.find(w - wa);
            if (itp == inv_parts.end()) continue;
            for (const auto& [m, c] : terms) conv += itp->second.shifted(m).scaled(c);
        }
        if (conv.is_zero()) continue;
        KSeries part = conv.scaled(-c0i);
        inv_parts[w] = part;
        inv += part;
    }
    return inv;
}

KSeries KSeries::exp() const {
    if (!coeff(KMonomial()).is_zero())
        throw std::domain_error("KSeries: exp needs vanishing constant term");
    KSeries acc(QRat(1), bound_);
    KSeries powr(QRat(1), bound_);
    QRat factorial(1);
    // weights >= 1/2 per factor, so at most 2*bound powers contribute
    long long maxk = 2 * (bound_.n / bound_.d + 1) + 2;
    for (long long k = 1; k <= maxk; ++k) {
        powr = powr * (*this);
        if (powr.is_zero()) break;
        factorial *= QRat(k);
        acc += powr.scaled(factorial.inv());
    }
    return acc;
}

KSeries KSeries::subst_shift(const std::string& name, const Frac& s) const {
    KSeries r(bound_);
    for (const auto& [m, c] : terms_) {
        auto it = m.exps.find(name);
        if (it == m.exps.end() || s.is_zero()) {
            r.add_term(m, c);
        } else {
            r.add_term(m, c * QRat::q_pow(s * it->second));
        }
    }
    return r;
}

KSeries KSeries::weight_zero_part() const {
    KSeries r(bound_);
    r.add_term(KMonomial(), coeff(KMonomial()));
    return r;
}

KSeries KSeries::shifted(const KMonomial& m) const {
    KSeries r(bound_ + m.weight());
    for (const auto& [mm, c] : terms_) r.add_term(mm * m, c);
    return r;
}

std::string KSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << m.str() << " * " << c.str();
    }
    return os.str();
}

// --------------------------------------------------------------- XiSeries

XiSeries XiSeries::constant(const KSeries& s, int window) {
    XiSeries r(window, s.bound());
    r.set_sector(0, s);
    return r;
}

bool XiSeries::is_zero() const {
    for (const auto& [n, s] : sectors_)
        if (!s.is_zero()) return false;
    return true;
}

void XiSeries::set_sector(int n, const KSeries& s) {
    if (std::abs(n) > window_) return;
    if (s.is_zero()) {
        sectors_.erase(n);
    } else {
        sectors_[n] = s.truncated(bound_);
    }
}

KSeries XiSeries::sector(int n) const {
    auto it = sectors_.find(n);
    return it == sectors_.end() ? KSeries(bound_) : it->second;
}

XiSeries XiSeries::operator+(const XiSeries& o) const {
    XiSeries r(std::min(window_, o.window_), bound_ < o.bound_ ? bound_ : o.bound_);
    for (int n = -r.window_; n <= r.window_; ++n) {
        KSeries s = sector(n).truncated(r.bound_) + o.sector(n).truncated(r.bound_);
        r.set_sector(n, s);
    }
    return r;
}

XiSeries XiSeries::operator-(const XiSeries& o) const {
    return *this + o.scaled(QRat(-1));
}

XiSeries XiSeries::operator*(const XiSeries& o) const {
    XiSeries r(std::min(window_, o.window_), bound_ < o.bound_ ? bound_ : o.bound_);
    for (const auto& [na, sa] : sectors_) {
        for (const auto& [nb, sb] : o.sectors_) {
            int n = na + nb;
            if (std::abs(n) > r.window_) continue;
            KSeries prod = sa.truncated(r.bound_) * sb.truncated(r.bound_);
            if (prod.is_zero()) continue;
            r.set_sector(n, r.sector(n) + prod);
        }
    }
    return r;
}

XiSeries XiSeries::scaled(const QRat& c) const {
    XiSeries r(window_, bound_);
    for (const auto& [n, s] : sectors_) r.set_sector(n, s.scaled(c));
    return r;
}

XiSeries XiSeries::scaled_k(const KSeries& c) const {
    XiSeries r(window_, bound_ < c.bound() ? bound_ : c.bound());
    for (const auto& [n, s] : sectors_) r.set_sector(n, s * c);
    return r;
}

bool XiSeries::operator==(const XiSeries& o) const {
    int w = std::max(window_, o.window_);
    for (int n = -w; n <= w; ++n)
        if (sector(n) != o.sector(n)) return false;
    return true;
}

XiSeries XiSeries::inverse() const {
    // weight-graded inversion; Xi^0 sector has invertible weight-0 part,
    // all other sectors carry strictly positive weight
    KSeries c0 = sector(0).weight_zero_part();
    QRat c0r = c0.coeff(KMonomial());
    if (c0r.is_zero()) throw std::domain_error("XiSeries: inverse needs invertible constant term");
    for (const auto& [n, s] : sectors_) {
        if (n == 0) continue;
        if (!s.weight_zero_part().is_zero())
            throw std::domain_error("XiSeries: nonzero-weight-0 term in sector " + std::to_string(n));
    }
    QRat c0i = c0r.inv();
    // higher parts H := this - c0; inverse = sum_k (-1)^k c0i^{k+1} H^k, graded by weight
    XiSeries H = *this;
    H.set_sector(0, sector(0) - c0);
    XiSeries term(window_, bound_);
    term.set_sector(0, KSeries(c0i, bound_));
    XiSeries acc = term;
    long long maxk = 2 * (bound_.n / bound_.d + 1) + 2;
    for (long long k = 1; k <= maxk; ++k) {
        term = term * H;
        term = term.scaled(-c0i);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

XiSeries XiSeries::truncated(const Frac& new_bound) const {
    XiSeries r(window_, new_bound);
    for (const auto& [n, s] : sectors_) r.set_sector(n, s.truncated(new_bound));
    return r;
}

std::string XiSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, s] : sectors_) {
        if (!first) os << "\n";
        first = false;
        os << "Xi^" << -n << " : " << s.str();
    }
    if (first) return "0";
    return os.str();
}

} // namespace qvertex
