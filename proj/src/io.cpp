#include "ocl/io.hpp"

#include <utility>
#include <vector>

#include "json.hpp"

namespace ocl {

using nlohmann::json;

OnlineInstance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("$: not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("$: expected an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ValidationError("$.n: expected an integer vertex count");
    const int n = doc["n"].get<int>();
    if (n < 0)
        throw ValidationError("$.n: vertex count must be non-negative");

    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ValidationError("$.edges: expected an array of pairs");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& e = doc["edges"][i];
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ValidationError(path + ": expected a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph graph;
    try {
        graph = build_graph(n, edges);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("$.edges: ") + e.what());
    }

    if (!doc.contains("order") || !doc["order"].is_array())
        throw ValidationError("$.order: expected an array");
    std::vector<int> order;
    for (std::size_t i = 0; i < doc["order"].size(); ++i) {
        if (!doc["order"][i].is_number_integer())
            throw ValidationError("$.order[" + std::to_string(i) + "]: expected an integer");
        order.push_back(doc["order"][i].get<int>());
    }
    {
        std::vector<bool> seen(n, false);
        bool valid = static_cast<int>(order.size()) == n;
        for (int v : order) {
            if (v < 0 || v >= n || seen[v]) {
                valid = false;
                break;
            }
            seen[v] = true;
        }
        if (!valid)
            throw ValidationError("$.order: order not a permutation of 0.." + std::to_string(n - 1));
    }

    std::optional<std::map<int, ColorLabel>> predictions;
    if (doc.contains("predictions") && !doc["predictions"].is_null()) {
        if (!doc["predictions"].is_object())
            throw ValidationError("$.predictions: expected an object or null");
        predictions.emplace();
        for (const auto& [key, value] : doc["predictions"].items()) {
            const std::string path = "$.predictions['" + key + "']";
            int v;
            try {
                std::size_t used = 0;
                v = std::stoi(key, &used);
                if (used != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ValidationError(path + ": key is not a vertex id");
            }
            if (v < 0 || v >= n)
                throw ValidationError(path + ": prediction for unknown vertex");
            if (!value.is_string() || value.get<std::string>().empty())
                throw ValidationError(path + ": expected a non-empty label string");
            (*predictions)[v] = value.get<std::string>();
        }
        if (static_cast<int>(predictions->size()) != n)
            throw ValidationError("$.predictions: must cover every vertex (got " +
                                  std::to_string(predictions->size()) + " of " +
                                  std::to_string(n) + ")");
    }

    try {
        return make_instance(std::move(graph), std::move(order), std::move(predictions));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("$: ") + e.what());
    }
}

std::string serialize_instance(const OnlineInstance& inst) {
    json doc;
    doc["n"] = inst.graph.vertex_count();
    doc["edges"] = json::array();
    for (const auto& [u, v] : inst.graph.edges())
        doc["edges"].push_back(json::array({u, v}));
    doc["order"] = inst.order;
    if (inst.predictions) {
        json preds = json::object();
        for (const auto& [v, label] : *inst.predictions)
            preds[std::to_string(v)] = label;
        doc["predictions"] = preds;
    } else {
        doc["predictions"] = nullptr;
    }
    return doc.dump();
}

} // namespace ocl
