#pragma once

#include "qwmix/walk.hpp"

#include <json.hpp>

#include <string>

namespace qwmix::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";

struct AnalyzeOptions {
    std::string grid = "0:2*pi:0.001";
    ScanOptions scan;
    std::size_t max_listed_times = 16;
};

Json cmd_analyze(const std::string& graphspec, const AnalyzeOptions& opts = {});
Json cmd_mix_check(const std::string& graphspec, const std::string& time_expr, double tol = 1e-9);
Json cmd_srg_classify(int n, int k, int lambda, int mu);
Json cmd_rule_out(const std::string& graphspec);
Json cmd_eps_search(int p, long long alpha_max);

/// Real numbers rounded to 12 significant digits; non-finite values become null.
Json number(double v);

/// Compact JSON with insertion-ordered keys, one trailing newline.
std::string dump(const Json& j);
/// Indented "key: value" listing for terminals.
std::string pretty(const Json& j);

/// Reads QWMIX_SIZE_CAP, if set, into the graph size cap.
void apply_size_cap_from_env();

} // namespace qwmix::report
