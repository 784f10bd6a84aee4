#pragma once

#include <string>
#include <vector>

#include "qvertex/frac.hpp"

namespace qvertex {

// Integer partition, weakly decreasing positive parts; empty partition allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text); // "2,1"; "" is empty

    const std::vector<int>& parts() const { return parts_; }
    int size() const;            // |lambda|
    int length() const { return (int)parts_.size(); }
    int part(int i) const {      // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;
    long long kappa() const; // sum lambda_i (lambda_i - 2i + 1)
    bool contains(const Partition& mu) const; // mu subset of lambda (Young diagrams)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const; // graded, then lexicographic

    std::string str() const; // "2,1" / "(empty)"

private:
    std::vector<int> parts_;
};

// Frobenius coordinates (m_1,...,m_k | n_1,...,n_k), strictly decreasing arms/legs.
struct Frobenius {
    std::vector<int> arms, legs;

    int hook_count() const { return (int)arms.size(); }
    int size() const;
    std::string str() const;
    bool operator==(const Frobenius& o) const { return arms == o.arms && legs == o.legs; }
};

Frobenius frobenius_of(const Partition& p);
Partition partition_of(const Frobenius& f);
// the hook partition (m|n) = (m+1, 1^n)
Partition hook_partition(int m, int n);

// all partitions of n, in the canonical enumeration order (lexicographically
// decreasing by parts, largest first part first)
std::vector<Partition> partitions_of(int n);
// all partitions with |lambda| <= D, graded by size then the order above
std::vector<Partition> partitions_up_to(int D);

} // namespace qvertex
