#pragma once

#include <qh/cli.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace qh::cli {

using nlohmann::json;

struct Output {
    json results = json::object();
    std::vector<std::string> text;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool table_in_text = true;
    json alarms = json::array();

    void alarm(const std::string& kind, const std::string& message) {
        alarms.push_back({{"kind", kind}, {"message", message}});
    }
};

Output betti(const RunConfig& config);
Output kac(const RunConfig& config);
Output charvar(const RunConfig& config);
Output predict(const RunConfig& config);
Output oracle(const RunConfig& config);
Output crab(const RunConfig& config);

} // namespace qh::cli
