#include "psim/metrics.hpp"

#include <algorithm>
#include <charconv>

#include "json.hpp"

namespace psim {

namespace {

using json = nlohmann::ordered_json;

std::vector<const AgentTick*> entries_by_id(const TickRecord& record) {
    std::vector<const AgentTick*> sorted;
    sorted.reserve(record.entries.size());
    for (const auto& e : record.entries)
        sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const AgentTick* a, const AgentTick* b) { return a->agent < b->agent; });
    return sorted;
}

std::string encode_trace(const std::vector<TraceEntry>& trace) {
    std::string out;
    for (const auto& entry : trace) {
        if (!out.empty())
            out += ';';
        out += entry.practice;
        out += ':';
        out += to_string(entry.reason);
    }
    return out;
}

} // namespace

bool log_format_from_string(const std::string& text, LogFormat& out) {
    if (text == "csv") {
        out = LogFormat::Csv;
    } else if (text == "jsonl") {
        out = LogFormat::Jsonl;
    } else {
        return false;
    }
    return true;
}

std::string log_file_name(LogFormat format) {
    return format == LogFormat::Csv ? "log.csv" : "log.jsonl";
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string s(buf, ptr);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('n') == std::string::npos)
        s += ".0";
    return s;
}

std::string emit_log(const MetricsLog& log, LogFormat format) {
    std::string out;
    if (format == LogFormat::Csv) {
        out = "tick,agent_id,action,practice_id,override,discard_trace,belief,belief_score\n";
        for (const auto& record : log.records) {
            for (const AgentTick* e : entries_by_id(record)) {
                out += std::to_string(record.tick);
                out += ',';
                out += e->agent;
                out += ',';
                out += e->action ? "perform" : "idle";
                out += ',';
                if (e->action)
                    out += *e->action;
                out += ',';
                out += e->override_used ? "true" : "false";
                out += ',';
                out += encode_trace(e->trace);
                out += ',';
                if (e->belief.context)
                    out += *e->belief.context;
                out += ',';
                out += format_double(e->belief.score);
                out += '\n';
            }
        }
        return out;
    }

    json header = {{"scenario_hash", log.header.scenario_hash},
                   {"seed", log.header.seed},
                   {"ticks", log.header.ticks},
                   {"engine_version", log.header.engine_version}};
    out = header.dump() + "\n";
    for (const auto& record : log.records) {
        json tick = json::object();
        tick["tick"] = record.tick;
        if (record.consensus)
            tick["consensus"] = *record.consensus;
        else
            tick["consensus"] = nullptr;
        json agents = json::array();
        for (const AgentTick* e : entries_by_id(record)) {
            json agent = json::object();
            agent["id"] = e->agent;
            agent["action"] = e->action ? "perform" : "idle";
            agent["practice"] = e->action ? json(*e->action) : json(nullptr);
            agent["override"] = e->override_used;
            json trace = json::array();
            for (const auto& t : e->trace)
                trace.push_back({{"practice", t.practice}, {"reason", std::string(to_string(t.reason))}});
            agent["trace"] = std::move(trace);
            agent["belief"] = e->belief.context ? json(*e->belief.context) : json(nullptr);
            agent["belief_score"] = e->belief.score;
            agents.push_back(std::move(agent));
        }
        tick["agents"] = std::move(agents);
        out += tick.dump() + "\n";
    }
    return out;
}

Summary summarize(const MetricsLog& log, double theta, int window) {
    Summary summary;
    summary.header = log.header;
    summary.theta = theta;
    summary.window = window;

    std::vector<double> consensus_series;
    bool consensus_defined = !log.records.empty();
    for (const auto& record : log.records) {
        summary.agent_count = std::max(summary.agent_count,
                                       static_cast<int64_t>(record.entries.size()));
        if (record.consensus)
            consensus_series.push_back(*record.consensus);
        else
            consensus_defined = false;
        for (const auto& e : record.entries) {
            if (e.action) {
                summary.performance_counts[*e.action] += 1;
                if (e.override_used)
                    summary.override_count += 1;
            } else {
                summary.idle_count += 1;
            }
            for (const auto& t : e.trace) {
                summary.discard_counts[t.practice][std::string(to_string(t.reason))] += 1;
                summary.performance_counts.try_emplace(t.practice, 0);
                if (t.reason == DiscardReason::DisturbsOther ||
                    t.reason == DiscardReason::DisturbedByOther)
                    summary.checks_total += 1;
            }
        }
    }

    int64_t performs = 0;
    for (const auto& [pid, count] : summary.performance_counts)
        performs += count;
    summary.checks_passed = performs - summary.override_count;
    summary.checks_total += summary.checks_passed;
    if (summary.checks_total > 0)
        summary.acceptability_rate = static_cast<double>(summary.checks_passed) /
                                     static_cast<double>(summary.checks_total);

    if (!log.records.empty()) {
        std::map<std::optional<std::string>, int64_t> final_beliefs;
        for (const auto& e : log.records.back().entries)
            final_beliefs[e.belief.context] += 1;
        summary.final_beliefs.assign(final_beliefs.begin(), final_beliefs.end());
        summary.final_consensus = log.records.back().consensus;
    }
    if (consensus_defined)
        summary.time_to_consensus = time_to_consensus(consensus_series, theta, window);
    return summary;
}

std::string emit_summary(const Summary& summary) {
    json doc = json::object();
    doc["scenario_hash"] = summary.header.scenario_hash;
    doc["seed"] = summary.header.seed;
    doc["ticks"] = summary.header.ticks;
    doc["engine_version"] = summary.header.engine_version;
    doc["agents"] = summary.agent_count;
    doc["consensus_params"] = {{"theta", summary.theta}, {"window", summary.window}};

    json performances = json::object();
    for (const auto& [pid, count] : summary.performance_counts)
        performances[pid] = count;
    doc["performances"] = std::move(performances);
    doc["idle_count"] = summary.idle_count;

    json discards = json::object();
    for (const auto& [pid, reasons] : summary.discard_counts) {
        json by_reason = json::object();
        for (const auto& [reason, count] : reasons)
            by_reason[reason] = count;
        discards[pid] = std::move(by_reason);
    }
    doc["discards"] = std::move(discards);
    doc["override_count"] = summary.override_count;

    doc["disturbance_checks"] = {
        {"total", summary.checks_total},
        {"passed", summary.checks_passed},
        {"acceptability_rate",
         summary.acceptability_rate ? json(*summary.acceptability_rate) : json(nullptr)}};

    json beliefs = json::array();
    for (const auto& [context, count] : summary.final_beliefs)
        beliefs.push_back({{"context", context ? json(*context) : json(nullptr)}, {"count", count}});
    doc["final_beliefs"] = std::move(beliefs);
    doc["final_consensus"] =
        summary.final_consensus ? json(*summary.final_consensus) : json(nullptr);
    doc["time_to_consensus"] =
        summary.time_to_consensus ? json(*summary.time_to_consensus) : json(nullptr);
    return doc.dump(2) + "\n";
}

} // namespace psim
