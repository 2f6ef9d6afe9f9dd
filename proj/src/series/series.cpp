#include <qh/series.hpp>

#include <mutex>

namespace qh {

GradingCap::GradingCap(DimVector max) : max_(std::move(max)) {
    for (int x : max_)
        if (x < 0)
            throw InvalidArgument("grading cap entries must be non-negative");
    strides_.resize(static_cast<std::size_t>(max_.size()));
    for (int i = 0; i < max_.size(); ++i) {
        strides_[static_cast<std::size_t>(i)] = size_;
        size_ *= max_[i] + 1;
    }
    totals_.resize(static_cast<std::size_t>(size_));
    levels_.assign(static_cast<std::size_t>(max_.total()) + 1, {});
    for (std::int64_t idx = 0; idx < size_; ++idx) {
        int t = 0;
        std::int64_t rest = idx;
        for (int i = 0; i < max_.size(); ++i) {
            t += static_cast<int>(rest % (max_[i] + 1));
            rest /= max_[i] + 1;
        }
        totals_[static_cast<std::size_t>(idx)] = t;
        levels_[static_cast<std::size_t>(t)].push_back(idx);
    }
}

std::int64_t GradingCap::index(const DimVector& v) const {
    if (!contains(v))
        throw CapMismatch("degree " + v.to_string() + " outside cap " + max_.to_string());
    std::int64_t idx = 0;
    for (int i = 0; i < v.size(); ++i)
        idx += v[i] * strides_[static_cast<std::size_t>(i)];
    return idx;
}

DimVector GradingCap::key(std::int64_t index) const {
    std::vector<int> v(static_cast<std::size_t>(max_.size()));
    for (int i = 0; i < max_.size(); ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<int>(index % (max_[i] + 1));
        index /= max_[i] + 1;
    }
    return DimVector(std::move(v));
}

int moebius(int n) {
    static std::mutex m;
    static std::vector<int> table{0, 1};
    std::lock_guard lock(m);
    if (n < 1)
        throw InvalidArgument("moebius needs n >= 1");
    if (n >= static_cast<int>(table.size())) {
        const int size = std::max(n + 1, 2 * static_cast<int>(table.size()));
        table.assign(static_cast<std::size_t>(size), 1);
        table[0] = 0;
        std::vector<bool> composite(static_cast<std::size_t>(size), false);
        for (int p = 2; p < size; ++p) {
            if (composite[static_cast<std::size_t>(p)])
                continue;
            for (int k = p; k < size; k += p) {
                if (k > p)
                    composite[static_cast<std::size_t>(k)] = true;
                table[static_cast<std::size_t>(k)] *= -1;
            }
            const long sq = static_cast<long>(p) * p;
            for (long k = sq; k < size; k += sq)
                table[static_cast<std::size_t>(k)] = 0;
        }
    }
    return table[static_cast<std::size_t>(n)];
}

} // namespace qh
