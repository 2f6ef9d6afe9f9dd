#include <qh/exact/partition.hpp>
#include <qh/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace qh {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0)
            throw InvalidPartition("parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty())
        return {};
    std::vector<int> conj(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int k = 0; k < part; ++k)
            ++conj[static_cast<std::size_t>(k)];
    return Partition(std::move(conj));
}

int pairing(const Partition& lambda, const Partition& mu) {
    const Partition lc = conjugate(lambda);
    const Partition mc = conjugate(mu);
    const int n = std::min(lc.length(), mc.length());
    int acc = 0;
    for (int k = 0; k < n; ++k)
        acc += lc[k] * mc[k];
    return acc;
}

int multiplicity(const Partition& lambda, int k) {
    return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), k));
}

LaurentPoly hook_factor(const Partition& lambda) {
    LaurentPoly acc = LaurentPoly::constant(Var::t, 1);
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int m = static_cast<int>(j - i);
        for (int r = 1; r <= m; ++r) {
            LaurentPoly f = LaurentPoly::constant(Var::t, 1);
            f -= LaurentPoly::monomial(Var::t, 1, 2 * r);
            acc = acc * f;
        }
        i = j;
    }
    return acc;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace qh
