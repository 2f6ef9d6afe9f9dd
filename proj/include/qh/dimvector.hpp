#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace qh {

// Vertex-indexed vector of non-negative integers.
class DimVector {
public:
    DimVector() = default;
    DimVector(std::initializer_list<int> entries) : v_(entries) {}
    explicit DimVector(std::vector<int> entries) : v_(std::move(entries)) {}
    static DimVector zeros(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    int total() const {
        int s = 0;
        for (int x : v_)
            s += x;
        return s;
    }
    bool is_zero() const { return total() == 0; }
    // Componentwise <=.
    bool fits_in(const DimVector& cap) const {
        if (cap.size() != size())
            return false;
        for (int i = 0; i < size(); ++i)
            if (v_[static_cast<std::size_t>(i)] > cap[i])
                return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i)
            s += (i ? "," : "") + std::to_string(v_[i]);
        return s;
    }

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

private:
    std::vector<int> v_;
};

// Parses "2,1,1"; throws ParseError on malformed or negative entries.
DimVector parse_dim_vector(const std::string& csv);

} // namespace qh
