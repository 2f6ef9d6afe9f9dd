#include <qh/errors.hpp>
#include <qh/quiver.hpp>

#include <fstream>
#include <sstream>

namespace qh {

DimVector parse_dim_vector(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad dimension vector entry '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size() || x < 0)
            throw ParseError("bad dimension vector entry '" + item + "'");
        out.push_back(x);
    }
    if (out.empty())
        throw ParseError("empty dimension vector");
    return DimVector(std::move(out));
}

Quiver::Quiver(int vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
    if (n_ < 0)
        throw InvalidArgument("negative vertex count");
    for (const auto& [i, j] : edges_)
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw IndexOutOfRange("edge " + std::to_string(i) + " " + std::to_string(j) +
                                  " outside 0.." + std::to_string(n_ - 1));
}

int Quiver::loop_count() const {
    int c = 0;
    for (const auto& [i, j] : edges_)
        c += i == j;
    return c;
}

int ParabolicType::rank() const {
    if (genus < 0)
        throw InvalidPartition("negative genus");
    if (punctures.empty())
        throw InvalidPartition("at least one puncture is required");
    const int n = punctures.front().size();
    if (n < 1)
        throw InvalidPartition("punctures must be partitions of n >= 1");
    for (const auto& p : punctures)
        if (p.size() != n)
            throw InvalidPartition("puncture " + p.to_string() + " is not a partition of " +
                                   std::to_string(n));
    return n;
}

std::vector<Partition> parse_punctures(const std::string& spec) {
    std::vector<Partition> out;
    std::stringstream ss(spec);
    std::string block;
    while (std::getline(ss, block, ';')) {
        std::vector<int> parts;
        for (int x : parse_dim_vector(block)) {
            if (x <= 0)
                throw ParseError("partition parts must be positive in '" + block + "'");
            parts.push_back(x);
        }
        out.emplace_back(std::move(parts));
    }
    if (out.empty())
        throw ParseError("empty parabolic type");
    return out;
}

int dim_quiver_variety(const Quiver& quiver, const DimVector& v, const DimVector& w) {
    const int n = quiver.vertex_count();
    if (v.size() != n || w.size() != n)
        throw ShapeMismatch("dimension vectors must have " + std::to_string(n) + " entries");
    int d = 0;
    for (int i = 0; i < n; ++i)
        d += 2 * v[i] * w[i] - 2 * v[i] * v[i];
    for (const auto& [i, j] : quiver.edges())
        d += 2 * v[i] * v[j];
    return d;
}

CrabQuiver crab_quiver(int genus, const std::vector<Partition>& punctures) {
    return crab_quiver(ParabolicType{genus, punctures});
}

CrabQuiver crab_quiver(const ParabolicType& mu) {
    const int n = mu.rank();
    std::vector<int> dims{n};
    std::vector<Quiver::Edge> edges(static_cast<std::size_t>(mu.genus), Quiver::Edge{0, 0});
    for (const auto& lambda : mu.punctures) {
        int previous = 0;
        int remaining = n;
        for (int part : lambda.parts()) {
            remaining -= part;
            if (remaining == 0)
                break;
            const int vertex = static_cast<int>(dims.size());
            dims.push_back(remaining);
            edges.emplace_back(vertex, previous);
            previous = vertex;
        }
    }
    const int count = static_cast<int>(dims.size());
    return {Quiver(count, std::move(edges)), DimVector(std::move(dims))};
}

Quiver parse_quiver(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int vertices = -1;
    std::vector<Quiver::Edge> edges;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue;
        if (word == "vertices") {
            if (vertices >= 0)
                fail("duplicate 'vertices' header");
            if (!(ls >> vertices) || vertices < 0)
                fail("expected a non-negative vertex count");
        } else if (word == "edge") {
            if (vertices < 0)
                fail("'edge' before 'vertices'");
            int i = 0;
            int j = 0;
            if (!(ls >> i >> j))
                fail("expected 'edge I J'");
            if (i < 0 || j < 0 || i >= vertices || j >= vertices)
                throw IndexOutOfRange("line " + std::to_string(line_no) + ": edge " +
                                      std::to_string(i) + " " + std::to_string(j) +
                                      " outside 0.." + std::to_string(vertices - 1));
            edges.emplace_back(i, j);
        } else {
            fail("unknown directive '" + word + "'");
        }
        std::string extra;
        if (ls >> extra)
            fail("trailing text '" + extra + "'");
    }
    if (vertices < 0)
        throw ParseError("missing 'vertices' header");
    return Quiver(vertices, std::move(edges));
}

Quiver read_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open quiver file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_quiver(ss.str());
}

std::string format_quiver(const Quiver& quiver) {
    std::string out = "vertices " + std::to_string(quiver.vertex_count()) + "\n";
    for (const auto& [i, j] : quiver.edges())
        out += "edge " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

} // namespace qh
