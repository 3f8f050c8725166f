#include "psim/sweep.hpp"

#include <algorithm>

#include "json.hpp"

#include "psim/engine.hpp"

namespace psim {

namespace {

using json = nlohmann::ordered_json;

json parse_value_literal(const std::string& literal) {
    json value = json::parse(literal, nullptr, false);
    if (value.is_discarded() || value.is_object() || value.is_array())
        return json(literal);  // plain string value, e.g. activation=random
    return value;
}

// Resolves a dotted path to the owning object; the final segment must exist.
json* resolve_parent(json& doc, const std::string& path, std::string& leaf) {
    json* node = &doc;
    size_t start = 0;
    for (;;) {
        size_t dot = path.find('.', start);
        std::string segment = path.substr(start, dot - start);
        if (dot == std::string::npos) {
            leaf = std::move(segment);
            return node->is_object() && node->contains(leaf) ? node : nullptr;
        }
        if (!node->is_object() || !node->contains(segment))
            return nullptr;
        node = &(*node)[segment];
        start = dot + 1;
    }
}

struct PreparedRun {
    size_t variant = 0;
    uint64_t seed = 0;
    std::vector<std::string> values;
};

} // namespace

SweepResult sweep(const Scenario& base, const std::vector<SweepParam>& grid,
                  std::vector<uint64_t> seeds, int jobs) {
    SweepResult result;
    if (seeds.empty()) {
        result.errors.push_back({"SWEEP", "seeds", "at least one seed is required"});
        return result;
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    json base_doc = json::parse(emit_scenario(base));

    // fail fast: every path must resolve on the base document
    for (const auto& param : grid) {
        std::string leaf;
        json probe = base_doc;
        if (resolve_parent(probe, param.path, leaf) == nullptr) {
            result.errors.push_back({"SWEEP", param.path, "unknown parameter path"});
            return result;
        }
        if (param.values.empty()) {
            result.errors.push_back({"SWEEP", param.path, "no values given"});
            return result;
        }
    }

    // grid points in odometer order; every variant parsed and validated up front
    std::vector<Scenario> variants;
    std::vector<std::vector<std::string>> variant_values;
    std::vector<size_t> odometer(grid.size(), 0);
    for (;;) {
        json doc = base_doc;
        std::vector<std::string> values;
        for (size_t i = 0; i < grid.size(); ++i) {
            std::string leaf;
            json* parent = resolve_parent(doc, grid[i].path, leaf);
            const std::string& literal = grid[i].values[odometer[i]];
            (*parent)[leaf] = parse_value_literal(literal);
            values.push_back(literal);
        }
        ParseResult parsed = parse_scenario(doc.dump());
        if (!parsed.ok()) {
            std::string point;
            for (const auto& v : values)
                point += (point.empty() ? "" : ",") + v;
            for (auto& d : parsed.errors) {
                d.path = "variant(" + point + ")/" + d.path;
                result.errors.push_back(std::move(d));
            }
            return result;
        }
        variants.push_back(std::move(*parsed.scenario));
        variant_values.push_back(std::move(values));

        size_t k = grid.size();
        while (k > 0 && ++odometer[k - 1] == grid[k - 1].values.size())
            odometer[--k] = 0;
        if (k == 0)
            break;
    }

    std::vector<PreparedRun> runs;
    for (size_t v = 0; v < variants.size(); ++v)
        for (uint64_t seed : seeds)
            runs.push_back({v, seed, variant_values[v]});

    SweepTable table;
    for (const auto& param : grid)
        table.param_paths.push_back(param.path);
    for (const auto& p : base.registry.practices)
        table.practice_ids.push_back(p.id);
    std::sort(table.practice_ids.begin(), table.practice_ids.end());
    table.rows.resize(runs.size());

    auto run_one = [&variants, &runs, &table](size_t i) {
        const PreparedRun& r = runs[i];
        const Scenario& scenario = variants[r.variant];
        RunResult rr = run(scenario, r.seed, scenario.ticks);
        SweepRow row;
        row.values = r.values;
        row.seed = r.seed;
        if (rr.log)  // variants are pre-validated, so runs cannot fail
            row.summary = summarize(*rr.log, scenario.consensus.theta, scenario.consensus.window);
        table.rows[i] = std::move(row);
    };

    const int64_t n = static_cast<int64_t>(runs.size());
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (int64_t i = 0; i < n; ++i)
            run_one(static_cast<size_t>(i));
        result.table = std::move(table);
        return result;
    }
#else
    (void)jobs;
#endif
    for (int64_t i = 0; i < n; ++i)
        run_one(static_cast<size_t>(i));
    result.table = std::move(table);
    return result;
}

SweepResult sweep_serial(const Scenario& base, const std::vector<SweepParam>& grid,
                         std::vector<uint64_t> seeds) {
    return sweep(base, grid, std::move(seeds), 1);
}

std::string sweep_to_csv(const SweepTable& table) {
    std::string out;
    for (const auto& path : table.param_paths) {
        out += path;
        out += ',';
    }
    out += "seed,ticks,agents,performs,idle,overrides,checks_total,checks_passed,"
           "acceptability_rate,final_consensus,time_to_consensus";
    for (const auto& pid : table.practice_ids) {
        out += ",perform.";
        out += pid;
    }
    out += '\n';

    for (const auto& row : table.rows) {
        for (const auto& value : row.values) {
            out += value;
            out += ',';
        }
        const Summary& s = row.summary;
        int64_t performs = 0;
        for (const auto& [pid, count] : s.performance_counts)
            performs += count;
        out += std::to_string(row.seed);
        out += ',';
        out += std::to_string(s.header.ticks);
        out += ',';
        out += std::to_string(s.agent_count);
        out += ',';
        out += std::to_string(performs);
        out += ',';
        out += std::to_string(s.idle_count);
        out += ',';
        out += std::to_string(s.override_count);
        out += ',';
        out += std::to_string(s.checks_total);
        out += ',';
        out += std::to_string(s.checks_passed);
        out += ',';
        if (s.acceptability_rate)
            out += format_double(*s.acceptability_rate);
        out += ',';
        if (s.final_consensus)
            out += format_double(*s.final_consensus);
        out += ',';
        if (s.time_to_consensus)
            out += std::to_string(*s.time_to_consensus);
        for (const auto& pid : table.practice_ids) {
            out += ',';
            auto it = s.performance_counts.find(pid);
            out += std::to_string(it == s.performance_counts.end() ? 0 : it->second);
        }
        out += '\n';
    }
    return out;
}

} // namespace psim
