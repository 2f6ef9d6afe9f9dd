#pragma once

#include <qh/dimvector.hpp>
#include <qh/exact/partition.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qh {

// Directed multigraph on vertices 0..n-1; loops and repeated edges allowed.
class Quiver {
public:
    using Edge = std::pair<int, int>;

    Quiver() = default;
    // Throws IndexOutOfRange for an endpoint outside 0..n-1.
    Quiver(int vertices, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int loop_count() const;
    bool has_loops() const { return loop_count() > 0; }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Partitions of a common integer n, one per puncture, plus the genus.
struct ParabolicType {
    int genus = 0;
    std::vector<Partition> punctures;

    // Size n shared by all punctures. Throws InvalidPartition when there are no
    // punctures, when they disagree, or when the genus is negative.
    int rank() const;
};

// Parses "2,1;1,1,1" into a list of partitions.
std::vector<Partition> parse_punctures(const std::string& spec);

// Complex dimension of M(v, w):
//   2 sum_i v_i w_i - 2 sum_i v_i^2 + 2 sum_{(i,j) in E} v_i v_j
int dim_quiver_variety(const Quiver& quiver, const DimVector& v, const DimVector& w);

struct CrabQuiver {
    Quiver quiver;
    DimVector dims;
};

// g loops on vertex 0 (dimension n); leg j hangs off the centre with
// dimensions n - mu_1, n - mu_1 - mu_2, ... , stopping before the first zero.
// Leg edges point from each leg vertex towards the centre.
CrabQuiver crab_quiver(int genus, const std::vector<Partition>& punctures);
CrabQuiver crab_quiver(const ParabolicType& mu);

// Quiver text format: "vertices N" then "edge I J" lines, '#' comments.
Quiver parse_quiver(const std::string& text);
Quiver read_quiver_file(const std::string& path);
std::string format_quiver(const Quiver& quiver);

} // namespace qh
