// CLI command implementations. Each returns the JSON report; the dispatcher
// maps thrown errors onto exit codes.
#pragma once

#include <json.hpp>

#include <string>

namespace qkw::cli {

using json = nlohmann::ordered_json;

struct CommonArgs {
    std::string shape;
    int qorder = 6;
    bool nonequivariant = false;
    long long budget = 10'000'000;
    std::size_t cap = 100000;
};

json cmd_present(const CommonArgs& args, const std::string& form);
json cmd_nf(const CommonArgs& args, const std::string& expr, bool quantum);
json cmd_member(const CommonArgs& args, const std::string& expr, const std::string& mode);
json cmd_rank(const CommonArgs& args);
json cmd_minpoly(const CommonArgs& args, const std::string& expr);
json cmd_structure(const CommonArgs& args);
json cmd_schubert(const CommonArgs& args, const std::string& w);
json cmd_divgen(const CommonArgs& args, int cap);

// The golden assertion suite; `pass` reflects every check.
json run_paper_check(int qorder, long long budget);

}  // namespace qkw::cli
