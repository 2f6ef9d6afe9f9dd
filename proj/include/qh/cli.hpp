#pragma once

#include <qh/dimvector.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qh {

enum class OutputFormat { text, json, csv };

struct RunConfig {
    std::string command;  // betti, kac, charvar, predict, oracle, crab
    std::string verb;     // sub-verb of predict and oracle
    std::string quiver_path;
    std::string manifest_path;
    std::optional<DimVector> v;
    std::optional<DimVector> w;
    std::optional<DimVector> cap;
    std::optional<int> genus;
    std::optional<int> k;
    std::optional<int> d;
    std::string mu;
    std::vector<int> qs;
    std::vector<std::string> show;
    OutputFormat format = OutputFormat::text;
    int threads = 0;          // 0 keeps the runtime default
    std::int64_t budget = 0;  // 0 selects the per-command default
};

// Executes one configured command. Returns 0 on success, 1 on a domain error
// (diagnostic on err), 2 when a correctness alarm fired.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line into a RunConfig and runs it. Usage errors exit 1.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Resolves a quiver path, falling back to the bundled data directory.
std::string resolve_data_path(const std::string& path);

} // namespace qh
