#include "qvertex/symfunc.hpp"

#include <mutex>
#include <tuple>

namespace qvertex {

namespace {

// Backtracking count of LR skew tableaux of shape lam/mu with content nu:
// semistandard filling whose reverse reading word (rows right to left, top to
// bottom) is a lattice word.
struct LRCounter {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    int nrows, nvals;
    std::vector<std::vector<int>> fill; // fill[i][j]: value at row i+1, col j+1; 0 = outside/unset
    std::vector<int> count;             // per value, along the reading word
    long long total = 0;

    LRCounter(const Partition& l, const Partition& m, const Partition& n)
        : lam(l), mu(m), nu(n), nrows(l.length()), nvals(n.length()) {
        fill.assign(nrows, {});
        for (int i = 0; i < nrows; ++i) fill[i].assign(lam.part(i + 1), 0);
        count.assign(nvals + 1, 0);
    }

    int value_at(int row, int col) const { // 1-based; 0 if outside skew shape
        if (row < 1 || row > nrows) return 0;
        if (col <= mu.part(row) || col > lam.part(row)) return 0;
        return fill[row - 1][col - 1];
    }

    void run(int row, int col) { // col scans right to left within the row
        if (row > nrows) {
            ++total;
            return;
        }
        if (col <= mu.part(row)) {
            run(row + 1, lam.part(row + 1));
            return;
        }
        for (int v = 1; v <= nvals; ++v) {
            if (count[v] >= nu.part(v)) continue;
            if (v > 1 && count[v] >= count[v - 1]) continue; // lattice word prefix
            int right = value_at(row, col + 1);
            if (right != 0 && v > right) continue; // rows weakly increase
            int above = value_at(row - 1, col);
            if (row > 1 && col > mu.part(row - 1) && col <= lam.part(row - 1)) {
                if (above == 0 || v <= above) continue; // columns strictly increase
            }
            fill[row - 1][col - 1] = v;
            ++count[v];
            run(row, col - 1);
            --count[v];
            fill[row - 1][col - 1] = 0;
        }
    }
};

std::map<std::tuple<Partition, Partition, Partition>, long long> lr_memo;
std::mutex lr_mutex;

} // namespace

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!lam.contains(mu)) return 0;
    // symmetry in (mu, nu): canonical key order
    const Partition& a = (mu < nu) ? mu : nu;
    const Partition& b = (mu < nu) ? nu : mu;
    std::tuple<Partition, Partition, Partition> key{lam, a, b};
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    LRCounter counter(lam, mu, nu);
    counter.run(1, lam.part(1));
    long long v = counter.total;
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        lr_memo[key] = v;
    }
    return v;
}

std::map<Partition, long long> skew_expand(const Partition& lam, const Partition& mu) {
    std::map<Partition, long long> out;
    if (!lam.contains(mu)) return out;
    int d = lam.size() - mu.size();
    for (const auto& nu : partitions_of(d)) {
        long long c = lr_coefficient(lam, mu, nu);
        if (c != 0) out[nu] = c;
    }
    return out;
}

QRat power_sum_at(const Alphabet& a, long long k) {
    if (k < 1) throw std::domain_error("power_sum_at: k must be >= 1");
    int l = a.mu.length();
    QRat s(0);
    for (int i = 1; i <= l; ++i) {
        Frac e = (Frac(a.mu.part(i)) - Frac(i) + a.shift) * Frac(a.sign);
        s += QRat::q_pow(e * Frac(k));
    }
    // tail: i > l, exponents sign*(shift - i), step -sign
    s += geom_qsum((a.shift - Frac(l + 1)) * Frac(a.sign), Frac(-a.sign), k);
    return s;
}

namespace {

std::map<std::pair<Alphabet, long long>, QRat> h_memo;
std::mutex h_mutex;

} // namespace

QRat homogeneous_at(const Alphabet& a, long long n) {
    if (n < 0) return QRat(0);
    if (n == 0) return QRat(1);
    {
        std::lock_guard<std::mutex> lock(h_mutex);
        auto it = h_memo.find({a, n});
        if (it != h_memo.end()) return it->second;
    }
    // n h_n = sum_{k=1}^{n} p_k h_{n-k}
    QRat acc(0);
    for (long long k = 1; k <= n; ++k) acc += power_sum_at(a, k) * homogeneous_at(a, n - k);
    QRat r = acc * QRat(n).inv();
    {
        std::lock_guard<std::mutex> lock(h_mutex);
        h_memo[{a, n}] = r;
    }
    return r;
}

QRat qrat_det(const std::vector<std::vector<QRat>>& m) {
    std::size_t n = m.size();
    if (n == 0) return QRat(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    QRat det(0);
    std::vector<std::vector<QRat>> minor(n - 1, std::vector<QRat>(n - 1));
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        QRat cof = m[0][c] * qrat_det(minor);
        det = (c % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

QRat skew_schur_at(const Partition& lam, const Partition& eta, const Alphabet& a) {
    if (!lam.contains(eta)) return QRat(0);
    int n = lam.length();
    if (n == 0) return QRat(1);
    std::vector<std::vector<QRat>> m(n, std::vector<QRat>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1][j - 1] = homogeneous_at(a, (long long)lam.part(i) - eta.part(j) - i + j);
    return qrat_det(m);
}

QRat schur_at(const Partition& nu, const Alphabet& a) {
    return skew_schur_at(nu, Partition(), a);
}

} // namespace qvertex
