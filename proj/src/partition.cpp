#include "qvertex/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qvertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim spaces
        std::size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = tok.find_last_not_of(" \t");
        parts.push_back(std::stoi(tok.substr(a, b - a + 1)));
    }
    return Partition(parts);
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (parts_.empty()) return Partition();
    t.resize(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= j) ++cnt;
        t[j - 1] = cnt;
    }
    return Partition(t);
}

long long Partition::kappa() const {
    long long k = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        long long li = parts_[i];
        k += li * (li - 2 * (long long)(i + 1) + 1);
    }
    return k;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return parts_ > o.parts_; // within a grade: reverse-lexicographic, matching enumeration
}

std::string Partition::str() const {
    if (parts_.empty()) return "(empty)";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

int Frobenius::size() const {
    int s = 0;
    for (std::size_t i = 0; i < arms.size(); ++i) s += arms[i] + legs[i] + 1;
    return s;
}

std::string Frobenius::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < arms.size(); ++i) {
        if (i) os << ",";
        os << arms[i];
    }
    os << "|";
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i) os << ",";
        os << legs[i];
    }
    os << ")";
    return os.str();
}

Frobenius frobenius_of(const Partition& p) {
    Frobenius f;
    Partition t = p.transpose();
    for (int i = 1; i <= p.length(); ++i) {
        if (p.part(i) < i) break;
        f.arms.push_back(p.part(i) - i);
        f.legs.push_back(t.part(i) - i);
    }
    return f;
}

Partition partition_of(const Frobenius& f) {
    int k = f.hook_count();
    for (int i = 1; i < k; ++i) {
        if (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1])
            throw std::domain_error("Frobenius: arms/legs must strictly decrease");
    }
    // rows 1..k: lambda_i = m_i + i ; columns determined by legs
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) parts.push_back(f.arms[i] + i + 1);
    // rows below the diagonal: row i (> k) has lambda_i = #{j : n_j >= i - j...}
    // reconstruct via the transpose built from legs
    std::vector<int> tparts;
    for (int i = 0; i < k; ++i) tparts.push_back(f.legs[i] + i + 1);
    // lambda_i for i > k equals number of columns j with (transpose part) >= i
    int maxrow = tparts.empty() ? 0 : tparts[0];
    for (int i = k + 1; i <= maxrow; ++i) {
        int cnt = 0;
        for (int j = 0; j < k; ++j)
            if (tparts[j] >= i) ++cnt;
        parts.push_back(cnt);
    }
    return Partition(parts);
}

Partition hook_partition(int m, int n) {
    std::vector<int> parts{m + 1};
    for (int i = 0; i < n; ++i) parts.push_back(1);
    return Partition(parts);
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int D) {
    std::vector<Partition> out;
    for (int n = 0; n <= D; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

} // namespace qvertex
