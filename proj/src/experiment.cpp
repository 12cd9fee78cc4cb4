#include "ocl/experiment.hpp"

#include <algorithm>
#include <cstdio>

#include "ocl/combine.hpp"
#include "ocl/generators.hpp"

namespace ocl {

namespace {

ColorerFactory factory_for(const std::string& token) {
    if (token == "ff")
        return first_fit();
    if (token == "ffp")
        return first_fit_predictions();
    throw ValidationError("unknown colorer token '" + token + "' (want ff or ffp)");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(sep, start);
        if (end == std::string::npos)
            end = text.size();
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

struct AlgoOutcome {
    int distinct = 0;
    std::optional<int> theorem3_bound;
    bool is_ffp = false;
};

AlgoOutcome run_algorithm(const std::string& algo, const OnlineInstance& inst) {
    AlgoOutcome outcome;
    if (algo == "ff" || algo == "ffp") {
        outcome.distinct = run(factory_for(algo), inst).distinct_colors;
        outcome.is_ffp = algo == "ffp";
        return outcome;
    }
    if (algo.rfind("combine:", 0) == 0) {
        std::vector<ColorerFactory> subs;
        for (const auto& token : split(algo.substr(8), ','))
            subs.push_back(factory_for(token));
        CombineResult combined = combine(subs, inst);
        outcome.distinct = combined.result.distinct_colors;
        int min_sub = *std::min_element(combined.sub_distinct.begin(),
                                        combined.sub_distinct.end());
        outcome.theorem3_bound = static_cast<int>(combined.sub_distinct.size()) * min_sub;
        return outcome;
    }
    if (algo == "scripts") {
        if (inst.graph.edge_count() != 0)
            throw ValidationError("algorithm 'scripts' needs an edgeless instance");
        const int t = inst.graph.vertex_count();
        SingletonsFamily family = gen_singletons(t);
        std::vector<ColorerFactory> subs;
        for (const auto& script : family.scripts)
            subs.push_back(scripted_colorer(script));
        CombineResult combined = combine(subs, inst);
        outcome.distinct = combined.result.distinct_colors;
        int min_sub = *std::min_element(combined.sub_distinct.begin(),
                                        combined.sub_distinct.end());
        outcome.theorem3_bound = t * min_sub;
        return outcome;
    }
    throw ValidationError("unknown algorithm '" + algo + "'");
}

std::string format_ratio(int numerator_distinct, int chi) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f",
                  static_cast<double>(numerator_distinct) / chi);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::vector<ReportRow> run_experiment(const ExperimentConfig& config) {
    if (config.instances.empty())
        throw ValidationError("no instances");
    if (config.algorithms.empty())
        throw ValidationError("no algorithms");

    std::vector<ReportRow> rows;
    for (const auto& [id, inst] : config.instances) {
        std::optional<int> chi;
        std::optional<int> eta;
        std::string oracle_error;
        try {
            if (config.compute_chi)
                chi = chromatic_number(inst.graph, config.limits);
            if (config.compute_eta && inst.predictions)
                eta = prediction_error(inst, config.limits).eta;
        } catch (const Error& e) {
            oracle_error = e.what();
        }

        for (const auto& algo : config.algorithms) {
            ReportRow row;
            row.instance_id = id;
            row.n = inst.graph.vertex_count();
            row.algorithm = algo;
            row.chi = chi;
            row.eta = eta;
            row.error = oracle_error;
            try {
                AlgoOutcome outcome = run_algorithm(algo, inst);
                row.distinct_colors = outcome.distinct;
                row.bound_theorem3 = outcome.theorem3_bound;
                if (outcome.is_ffp && chi && eta)
                    row.bound_theorem2 = *eta + *chi;
                if (row.bound_theorem2 && outcome.distinct > *row.bound_theorem2)
                    row.bound_satisfied = false;
                if (row.bound_theorem3 && outcome.distinct > *row.bound_theorem3)
                    row.bound_satisfied = false;
            } catch (const Error& e) {
                row.error = row.error.empty() ? e.what() : row.error + "; " + e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.instance_id != b.instance_id)
            return a.instance_id < b.instance_id;
        return a.algorithm < b.algorithm;
    });
    return rows;
}

std::string write_report_csv(const std::vector<ReportRow>& rows) {
    std::string out = "instance,n,algorithm,distinct_colors,chi,eta,bound_theorem2,"
                      "bound_theorem3,ratio,ratio_theorem4,bound_satisfied,error\n";
    auto opt = [](const std::optional<int>& value) {
        return value ? std::to_string(*value) : std::string();
    };
    for (const auto& row : rows) {
        out += csv_escape(row.instance_id) + ',';
        out += std::to_string(row.n) + ',';
        out += csv_escape(row.algorithm) + ',';
        out += opt(row.distinct_colors) + ',';
        out += opt(row.chi) + ',';
        out += opt(row.eta) + ',';
        out += opt(row.bound_theorem2) + ',';
        out += opt(row.bound_theorem3) + ',';
        if (row.distinct_colors && row.chi && *row.chi > 0)
            out += format_ratio(*row.distinct_colors, *row.chi);
        out += ',';
        if (row.eta && row.chi && *row.chi > 0)
            out += format_ratio(*row.eta + *row.chi, *row.chi); // 1 + eta/chi
        out += ',';
        out += row.bound_satisfied ? "true" : "false";
        out += ',';
        out += csv_escape(row.error) + '\n';
    }
    return out;
}

int report_exit_code(const std::vector<ReportRow>& rows) {
    bool violated = false;
    bool errored = false;
    for (const auto& row : rows) {
        violated |= !row.bound_satisfied;
        errored |= !row.error.empty();
    }
    if (violated)
        return 2;
    if (errored)
        return 3;
    return 0;
}

} // namespace ocl
