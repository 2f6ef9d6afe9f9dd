#pragma once

#include <qh/exact/laurent.hpp>

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace qh {

// Integer partition stored as weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    // Sorts the parts; throws InvalidPartition on a non-positive part.
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

using MultiPartition = std::vector<Partition>;

Partition conjugate(const Partition& lambda);
// <lambda, mu> = sum_k lambda'_k mu'_k
int pairing(const Partition& lambda, const Partition& mu);
int multiplicity(const Partition& lambda, int k);
// prod over distinct part sizes k of prod_{j=1}^{m_k} (1 - t^{2j})
LaurentPoly hook_factor(const Partition& lambda);

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

} // namespace qh
