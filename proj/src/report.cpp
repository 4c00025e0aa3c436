#include "qwmix/report.hpp"

#include "qwmix/bipartite.hpp"
#include "qwmix/cycles_eps.hpp"
#include "qwmix/errors.hpp"
#include "qwmix/graph_spec.hpp"
#include "qwmix/spectral.hpp"
#include "qwmix/srg.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qwmix::report {

namespace {

Json time_json(const Time& t)
{
    Json j;
    j["expr"] = t.expr;
    j["value"] = number(t.value);
    return j;
}

Json srg_json(const SrgParams& p)
{
    return Json{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

Json graph_json(const Graph& g)
{
    Json j;
    j["label"] = g.label;
    j["n"] = g.n();
    const auto k = is_regular(g);
    j["regular"] = k ? Json(*k) : Json(nullptr);
    j["bipartite"] = bipartition(g).has_value();
    const auto p = srg_params(g);
    j["srg"] = p ? srg_json(*p) : Json(nullptr);
    return j;
}

Json obstructions_json(const std::vector<Obstruction>& obs)
{
    Json arr = Json::array();
    for (const auto& o : obs) arr.push_back(Json{{"code", to_string(o.code)}, {"detail", o.detail}, {"paper_case", o.paper_case}});
    return arr;
}

Json header(const std::string& command, Json args)
{
    Json j;
    j["command"] = command;
    j["args"] = std::move(args);
    j["version"] = tool_version;
    return j;
}

void pretty_into(std::ostringstream& out, const Json& j, int indent, const std::string& key)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        if (!key.empty()) out << pad << key << ":\n";
        for (const auto& [k, v] : j.items()) pretty_into(out, v, key.empty() ? indent : indent + 1, k);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        out << pad << key << ":\n";
        for (std::size_t i = 0; i < j.size(); ++i) pretty_into(out, j[i], indent + 1, "[" + std::to_string(i) + "]");
    } else {
        out << pad << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

Json number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string pretty(const Json& j)
{
    std::ostringstream out;
    pretty_into(out, j, 0, "");
    return out.str();
}

void apply_size_cap_from_env()
{
    if (const char* env = std::getenv("QWMIX_SIZE_CAP")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1) throw InvalidArgument("QWMIX_SIZE_CAP must be a positive integer");
        set_size_cap(static_cast<int>(cap));
    }
}

Json cmd_analyze(const std::string& graphspec, const AnalyzeOptions& opts)
{
    const Graph g = parse_graph_spec(graphspec);
    const TimeGrid grid = parse_grid(opts.grid);

    Json j = header("analyze", Json::array({graphspec}));
    j["graph"] = graph_json(g);

    const auto poly = char_poly_exact(g);
    Json coeffs = Json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
    j["char_poly"] = {{"ascending", coeffs}, {"text", poly.to_string()}};
    const bool integral = integral_spectrum(g);
    j["integral_spectrum"] = integral;

    // When the spectrum is known to be integral, print the integers rather than solver noise.
    const auto dec = eigendecompose(g);
    Json spectrum = Json::array();
    for (int k = 0; k < dec.size(); ++k) {
        const Json theta = integral ? Json(std::lround(dec.thetas(k))) : number(dec.thetas(k));
        spectrum.push_back(Json{{"theta", theta}, {"mult", dec.mults[static_cast<std::size_t>(k)]}});
    }
    j["spectrum"] = spectrum;

    const auto obs = rule_out_mixing(g);
    j["obstructions"] = obstructions_json(obs);

    std::vector<std::string> reasons;
    for (const auto& o : obs) reasons.emplace_back(to_string(o.code));
    const auto scan = mixing_scan(g, grid, opts.scan, reasons);

    Json s;
    s["verdict"] = to_string(scan.verdict);
    Json times = Json::array();
    Json flat = Json::array();
    for (std::size_t i = 0; i < scan.hits.size() && i < opts.max_listed_times; ++i) {
        times.push_back(scan.hits[i].time.expr);
        flat.push_back(number(scan.hits[i].flatness));
    }
    s["times"] = times;
    s["flatness"] = flat;
    s["hit_count"] = scan.hits.size();
    s["reasons"] = scan.reasons;
    s["best"] = {{"time", time_json(scan.best.time)}, {"flatness", number(scan.best.flatness)}};
    s["grid"] = {{"spec", opts.grid},
                 {"points", scan.grid_points},
                 {"min_flatness", number(scan.grid_min.flatness)},
                 {"argmin", number(scan.grid_min.time.value)},
                 {"clear_of_floor", scan.grid_clear(opts.scan)}};
    s["candidates"] = scan.candidate_points;
    s["tol"] = number(opts.scan.tol);
    s["grid_floor"] = number(opts.scan.grid_floor);
    j["scan"] = s;
    return j;
}

Json cmd_mix_check(const std::string& graphspec, const std::string& time_expr, double tol)
{
    const Graph g = parse_graph_spec(graphspec);
    const Time t = parse_time(time_expr);
    const double f = flatness(transition(eigendecompose(g), t.value));

    Json j = header("mix-check", Json::array({graphspec, time_expr}));
    j["graph"] = {{"label", g.label}, {"n", g.n()}};
    j["time"] = time_json(t);
    j["tol"] = number(tol);
    j["flatness"] = number(f);
    j["flat"] = f <= tol;
    return j;
}

Json cmd_srg_classify(int n, int k, int lambda, int mu)
{
    const SrgParams p{n, k, lambda, mu};
    const auto verdict = srg_mixing_verdict(p);
    const auto ev = srg_eigenvalues(p);

    Json j = header("srg-classify", Json::array({n, k, lambda, mu}));
    j["params"] = srg_json(p);
    j["eigenvalues"] = {{"k", number(ev.k)}, {"theta", number(ev.theta)}, {"tau", number(ev.tau)}};
    if (verdict.family) {
        j["family"] = to_string(verdict.family->family);
        j["theta"] = verdict.family->theta;
        j["on_complement"] = verdict.family->on_complement;
    } else {
        j["family"] = nullptr;
        j["theta"] = nullptr;
        j["on_complement"] = nullptr;
    }
    j["verdict"] = to_string(verdict.kind);
    Json times = Json::array();
    for (const auto& t : verdict.times) times.push_back(time_json(t));
    j["times"] = times;
    j["paper_case"] = verdict.paper_case;
    j["conference_like"] = verdict.conference_like;
    return j;
}

Json cmd_rule_out(const std::string& graphspec)
{
    const Graph g = parse_graph_spec(graphspec);
    Json j = header("rule-out", Json::array({graphspec}));
    j["graph"] = graph_json(g);
    j["obstructions"] = obstructions_json(rule_out_mixing(g));
    return j;
}

Json cmd_eps_search(int p, long long alpha_max)
{
    const auto r = eps_search(p, alpha_max);
    Json j = header("eps-search", Json::array({p, alpha_max}));
    j["p"] = r.p;
    j["alpha_max"] = r.alpha_max;
    j["best_alpha"] = r.best_alpha;
    j["best_time"] = time_json(pi_fraction(2 * r.best_alpha, p));
    j["best_target_distance"] = number(r.best_target_distance);
    j["best_flatness"] = number(r.best_flatness);
    Json trace = Json::array();
    for (const auto& pt : r.trace) {
        trace.push_back(Json{{"bound", pt.bound},
                             {"best_alpha", pt.best_alpha},
                             {"best_distance", number(pt.best_distance)},
                             {"best_flatness", number(pt.best_flatness)}});
    }
    j["trace"] = trace;
    return j;
}

} // namespace qwmix::report
