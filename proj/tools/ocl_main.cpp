// ocl: online graph coloring with predictions - instance tooling, algorithm
// runner, exact oracle, and bound-checking experiment harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ocl/combine.hpp"
#include "ocl/experiment.hpp"
#include "ocl/generators.hpp"
#include "ocl/io.hpp"
#include "ocl/oracle.hpp"
#include "ocl/structure.hpp"

namespace {

using nlohmann::json;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ocl::ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_sink(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ocl::ValidationError("cannot write '" + path + "'");
    out << content;
}

ocl::OnlineInstance load_instance(const std::string& path) {
    return ocl::parse_instance(read_source(path));
}

void print_trace(const ocl::RunResult& result) {
    for (const auto& [vertex, color] : result.per_step) {
        json line;
        line["vertex"] = vertex;
        line["color"] = ocl::to_string(color);
        std::cout << line.dump() << "\n";
    }
}

ocl::ColorerFactory colorer_by_name(const std::string& name) {
    if (name == "ff")
        return ocl::first_fit();
    if (name == "ffp")
        return ocl::first_fit_predictions();
    throw ocl::ValidationError("unknown algorithm '" + name + "' (want ff or ffp)");
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

struct GenParams {
    std::string family;
    std::map<std::string, std::string> kv;

    int get_int(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ocl::ValidationError("generator spec '" + family + "' needs parameter " + key);
        return std::stoi(it->second);
    }
    double get_double(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ocl::ValidationError("generator spec '" + family + "' needs parameter " + key);
        return std::stod(it->second);
    }
    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : std::stoull(it->second);
    }
};

// "random:n=10,p=0.5,seed=7,pred=corrupted,rate=0.3" and friends.
ocl::OnlineInstance instance_from_spec(const std::string& spec, const ocl::OracleLimits& limits) {
    GenParams params;
    auto colon = spec.find(':');
    params.family = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    if (colon != std::string::npos)
        for (const auto& part : split(spec.substr(colon + 1), ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos)
                throw ocl::ValidationError("bad generator parameter '" + part + "' in '" + spec +
                                           "'");
            params.kv[part.substr(0, eq)] = part.substr(eq + 1);
        }

    ocl::OnlineInstance inst;
    if (params.family == "crown-a")
        inst = ocl::gen_crown(params.get_int("n"), ocl::CrownVariant::minus_matching);
    else if (params.family == "crown-b")
        inst = ocl::gen_crown(params.get_int("n"), ocl::CrownVariant::linked_pair);
    else if (params.family == "kkblocks")
        inst = ocl::gen_kk_blocks(params.get_int("k"));
    else if (params.family == "singletons")
        inst = ocl::gen_singletons(params.get_int("t")).instance;
    else if (params.family == "random")
        inst = ocl::gen_random(params.get_int("n"), params.get_double("p"),
                               params.get_seed("seed", 0));
    else
        throw ocl::ValidationError("unknown generator family '" + params.family + "'");

    auto pred_it = params.kv.find("pred");
    if (pred_it != params.kv.end()) {
        const std::string& kind = pred_it->second;
        std::uint64_t seed = params.get_seed("pred_seed", params.get_seed("seed", 0));
        if (kind == "none")
            inst = ocl::attach_predictions(inst, ocl::PredictionModel::none(), seed, limits);
        else if (kind == "perfect")
            inst = ocl::attach_predictions(inst, ocl::PredictionModel::perfect(), seed, limits);
        else if (kind == "corrupted")
            inst = ocl::attach_predictions(
                inst, ocl::PredictionModel::corrupted(params.get_double("rate")), seed, limits);
        else
            throw ocl::ValidationError("unknown prediction model '" + kind + "'");
    }
    return inst;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"online graph coloring with predictions"};
    app.require_subcommand(1);

    ocl::OracleLimits limits = ocl::OracleLimits::from_env();
    int oracle_limit_flag = 0;
    app.add_option("--oracle-limit", oracle_limit_flag,
                   "override the oracle size limit (vertices)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit an instance in the canonical JSON format");
    std::string family, gen_out = "-", pred_kind;
    int gen_n = 0, gen_k = 0, gen_t = 0;
    double gen_p = 0.5, rate = 0.0;
    std::uint64_t seed = 0;
    gen->add_option("--family", family, "crown-a|crown-b|kkblocks|singletons|random")
        ->required();
    gen->add_option("--n", gen_n, "vertex-count parameter (crown: per side)");
    gen->add_option("--k", gen_k, "block parameter for kkblocks");
    gen->add_option("--t", gen_t, "vertex count for singletons");
    gen->add_option("--p", gen_p, "edge probability for random");
    gen->add_option("--seed", seed, "seed for random/corrupted");
    gen->add_option("--pred", pred_kind, "attach predictions: none|perfect|corrupted");
    gen->add_option("--rate", rate, "corruption rate");
    gen->add_option("--out", gen_out, "output path or - for stdout");

    // run
    auto* run_cmd = app.add_subcommand("run", "run one online colorer on an instance");
    std::string run_algo, run_instance;
    bool run_trace = false;
    run_cmd->add_option("--algo", run_algo, "ff|ffp")->required();
    run_cmd->add_option("--instance", run_instance, "instance file or -")->required();
    run_cmd->add_flag("--trace", run_trace, "print the per-step trace as JSON lines");

    // combine
    auto* combine_cmd = app.add_subcommand("combine", "run the palette-separated combination");
    std::string combine_algos, combine_instance;
    bool combine_trace = false;
    combine_cmd->add_option("--algos", combine_algos, "comma-separated: ffp,ff")->required();
    combine_cmd->add_option("--instance", combine_instance, "instance file or -")->required();
    combine_cmd->add_flag("--trace", combine_trace, "print the per-step trace as JSON lines");

    // aprime
    auto* aprime_cmd = app.add_subcommand("aprime", "known-chromatic-number combination");
    std::string aprime_classical = "ff", aprime_instance;
    int aprime_k = 0;
    bool aprime_trace = false;
    aprime_cmd->add_option("--k", aprime_k, "promised chromatic number")->required();
    aprime_cmd->add_option("--classical", aprime_classical, "fallback colorer (ff)");
    aprime_cmd->add_option("--instance", aprime_instance, "instance file or -")->required();
    aprime_cmd->add_flag("--trace", aprime_trace, "print the per-step trace as JSON lines");

    // eta
    auto* eta_cmd = app.add_subcommand("eta", "exact prediction error with witness");
    std::string eta_instance;
    eta_cmd->add_option("--instance", eta_instance, "instance file or -")->required();

    // extract
    auto* extract_cmd =
        app.add_subcommand("extract", "clique partition of a FirstFit run, verified");
    std::string extract_instance;
    extract_cmd->add_option("--instance", extract_instance, "instance file or -")->required();

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "run algorithms x instances, emit CSV");
    std::vector<std::string> exp_instances, exp_gens;
    std::string exp_algos, exp_out = "-";
    bool exp_oracle = false;
    exp_cmd->add_option("--instance", exp_instances, "instance file (repeatable)");
    exp_cmd->add_option("--gen", exp_gens, "generator spec, e.g. kkblocks:k=2 (repeatable)");
    exp_cmd->add_option("--algos", exp_algos, "comma-separated algorithm tokens")->required();
    exp_cmd->add_flag("--oracle", exp_oracle, "compute chi and eta per instance");
    exp_cmd->add_option("--out", exp_out, "CSV path or - for stdout");

    CLI11_PARSE(app, argc, argv);

    if (oracle_limit_flag > 0) {
        limits.chromatic_n = oracle_limit_flag;
        limits.enumeration_n = oracle_limit_flag;
    }

    if (*gen) {
        if (family == "random" && gen_n == 0 && gen_t == 0)
            throw ocl::ValidationError("gen --family random needs --n");
        std::string spec = family;
        ocl::OnlineInstance inst;
        if (family == "crown-a")
            inst = ocl::gen_crown(gen_n, ocl::CrownVariant::minus_matching);
        else if (family == "crown-b")
            inst = ocl::gen_crown(gen_n, ocl::CrownVariant::linked_pair);
        else if (family == "kkblocks")
            inst = ocl::gen_kk_blocks(gen_k);
        else if (family == "singletons")
            inst = ocl::gen_singletons(gen_t).instance;
        else if (family == "random")
            inst = ocl::gen_random(gen_n, gen_p, seed);
        else
            throw ocl::ValidationError("unknown generator family '" + family + "'");
        if (!pred_kind.empty()) {
            if (pred_kind == "none")
                inst = ocl::attach_predictions(inst, ocl::PredictionModel::none(), seed, limits);
            else if (pred_kind == "perfect")
                inst = ocl::attach_predictions(inst, ocl::PredictionModel::perfect(), seed,
                                               limits);
            else if (pred_kind == "corrupted")
                inst = ocl::attach_predictions(inst, ocl::PredictionModel::corrupted(rate), seed,
                                               limits);
            else
                throw ocl::ValidationError("unknown prediction model '" + pred_kind + "'");
        }
        write_sink(gen_out, ocl::serialize_instance(inst) + "\n");
        return 0;
    }

    if (*run_cmd) {
        auto inst = load_instance(run_instance);
        ocl::RunResult result = ocl::run(colorer_by_name(run_algo), inst);
        std::cout << "distinct_colors=" << result.distinct_colors << "\n";
        if (run_trace)
            print_trace(result);
        return 0;
    }

    if (*combine_cmd) {
        auto inst = load_instance(combine_instance);
        std::vector<ocl::ColorerFactory> subs;
        for (const auto& name : split(combine_algos, ','))
            subs.push_back(colorer_by_name(name));
        ocl::CombineResult combined = ocl::combine(subs, inst);
        std::cout << "distinct_colors=" << combined.result.distinct_colors << "\n";
        json log;
        log["chosen"] = combined.chosen;
        log["sub_distinct"] = combined.sub_distinct;
        std::cout << log.dump() << "\n";
        if (combine_trace)
            print_trace(combined.result);
        return 0;
    }

    if (*aprime_cmd) {
        auto inst = load_instance(aprime_instance);
        ocl::APrimeResult result =
            ocl::a_prime(aprime_k, colorer_by_name(aprime_classical), inst);
        std::cout << "distinct_colors=" << result.result.distinct_colors << "\n";
        json log;
        if (result.switch_position)
            log["switch_position"] = *result.switch_position;
        else
            log["switch_position"] = nullptr;
        log["phase2_chosen"] = result.phase2_chosen;
        std::cout << log.dump() << "\n";
        if (aprime_trace)
            print_trace(result.result);
        return 0;
    }

    if (*eta_cmd) {
        auto inst = load_instance(eta_instance);
        ocl::EtaResult result = ocl::prediction_error(inst, limits);
        std::cout << "eta=" << result.eta << "\n";
        json witness;
        witness["classes"] = result.witness_partition.classes;
        witness["assignment"] = result.witness_assignment;
        std::cout << witness.dump() << "\n";
        return 0;
    }

    if (*extract_cmd) {
        auto inst = load_instance(extract_instance);
        ocl::RunResult ff_run = ocl::run(ocl::first_fit(), inst);
        ocl::CliquePartition partition = ocl::extract_clique_partition(inst.graph, ff_run);
        std::vector<std::string> reasons;
        bool valid = ocl::verify_partition(inst.graph, partition, &reasons);
        json out;
        out["x"] = partition.x;
        out["q"] = partition.q;
        out["cliques"] = partition.cliques;
        out["valid"] = valid;
        if (!valid)
            out["reasons"] = reasons;
        std::cout << out.dump() << "\n";
        return valid ? 0 : 2;
    }

    if (*exp_cmd) {
        ocl::ExperimentConfig config;
        config.limits = limits;
        config.compute_chi = exp_oracle;
        config.compute_eta = exp_oracle;
        for (const auto& path : exp_instances)
            config.instances.emplace_back(path, load_instance(path));
        for (const auto& spec : exp_gens)
            config.instances.emplace_back(spec, instance_from_spec(spec, limits));
        for (const auto& token : split(exp_algos, ','))
            config.algorithms.push_back(token);
        auto rows = ocl::run_experiment(config);
        write_sink(exp_out, ocl::write_report_csv(rows));
        return ocl::report_exit_code(rows);
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ocl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
