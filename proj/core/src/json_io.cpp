#include "liedim/json_io.hpp"

#include <json.hpp>

#include "liedim/errors.hpp"

namespace liedim {

namespace {

using json = nlohmann::ordered_json;

json functional_to_value(const FunctionalDim& f) {
    json args = json::object();
    const char* kind = "";
    switch (f.kind()) {
        case FunctionalKind::GkOfOrbit:
            kind = "gk_of_orbit";
            args["group"] = f.orbit()->group.to_string();
            args["partition"] = f.orbit()->partition.to_string();
            break;
        case FunctionalKind::MatrixCoefficient:
            kind = "matrix_coefficient";
            args["group"] = f.group()->to_string();
            break;
        case FunctionalKind::ExplicitPeriod:
            kind = "explicit_period";
            args["reductive_dim"] = f.first_arg();
            args["unipotent_dim"] = f.second_arg();
            break;
        case FunctionalKind::FourierJacobi:
            kind = "fourier_jacobi";
            args["group"] = f.orbit()->group.to_string();
            args["partition"] = f.orbit()->partition.to_string();
            break;
        case FunctionalKind::Eisenstein:
            kind = "eisenstein";
            args["inducing_dim"] = f.first_arg();
            args["radical_dim"] = f.second_arg();
            break;
        case FunctionalKind::Character:
            kind = "character";
            break;
    }
    json out;
    out["kind"] = kind;
    out["args"] = std::move(args);
    out["value"] = f.value();
    return out;
}

long long require_int(const json& node, const char* key) {
    if (!node.contains(key) || !node[key].is_number_integer())
        throw parse_error(std::string("check spec: missing integer field '") + key + "'");
    return node[key].get<long long>();
}

std::string require_string(const json& node, const char* key) {
    if (!node.contains(key) || !node[key].is_string())
        throw parse_error(std::string("check spec: missing string field '") + key + "'");
    return node[key].get<std::string>();
}

FunctionalDim functional_from_value(const json& node) {
    const std::string kind = require_string(node, "kind");
    const json args = node.contains("args") ? node["args"] : json::object();
    if (kind == "gk_of_orbit")
        return FunctionalDim::gk_of_orbit(
            make_orbit(GroupDescriptor::parse(require_string(args, "group")),
                       Partition::parse(require_string(args, "partition"))));
    if (kind == "matrix_coefficient")
        return FunctionalDim::matrix_coefficient(
            GroupDescriptor::parse(require_string(args, "group")));
    if (kind == "explicit_period")
        return FunctionalDim::explicit_period(require_int(args, "reductive_dim"),
                                              require_int(args, "unipotent_dim"));
    if (kind == "fourier_jacobi")
        return FunctionalDim::fourier_jacobi(
            make_orbit(GroupDescriptor::parse(require_string(args, "group")),
                       Partition::parse(require_string(args, "partition"))));
    if (kind == "eisenstein")
        return FunctionalDim::eisenstein(require_int(args, "inducing_dim"),
                                         require_int(args, "radical_dim"));
    if (kind == "character")
        return FunctionalDim::character();
    throw parse_error("check spec: unknown functional kind '" + kind + "'");
}

} // namespace

std::string to_json(const Orbit& orbit) {
    json out;
    out["dim"] = orbit.dim;
    out["gk"] = orbit.gk;
    out["odd_parts"] = orbit.odd_part_count;
    return out.dump();
}

std::string to_json(const FiltrationProfile& profile) {
    json out;
    out["weights"] = profile.weight_vector;
    out["dim_n1"] = profile.dim_n1;
    out["dim_n2"] = profile.dim_n2;
    json hist = json::object();
    for (const auto& [weight, count] : profile.weight_histogram)
        hist[std::to_string(weight)] = count;
    out["histogram"] = std::move(hist);
    return out.dump();
}

std::string to_json(const FunctionalDim& f) {
    return functional_to_value(f).dump();
}

std::string to_json(const BalanceReport& report) {
    json out;
    out["name"] = report.name;
    out["lhs"] = report.lhs_total;
    out["rhs"] = report.rhs_total;
    out["deficit"] = report.deficit;
    out["balanced"] = report.balanced;
    return out.dump();
}

std::string search_result_json(const GroupDescriptor& group, const SearchResult& result) {
    json out;
    out["group"] = group.to_string();
    out["target_gk"] = result.target_gk;
    json solutions = json::array();
    for (const Partition& p : result.solutions)
        solutions.push_back(p.to_string());
    out["solutions"] = std::move(solutions);
    out["total_candidates"] = result.total_candidates;
    return out.dump();
}

std::string catalog_runs_json(const std::vector<CatalogRun>& runs) {
    json out = json::array();
    for (const CatalogRun& run : runs) {
        json row;
        row["id"] = run.id;
        json params = json::object();
        for (const auto& [name, value] : run.params)
            params[name] = value;
        row["params"] = std::move(params);
        row["lhs"] = run.report.lhs_total;
        row["rhs"] = run.report.rhs_total;
        row["balanced"] = run.report.balanced;
        row["expected"] = run.expected_balanced;
        out.push_back(std::move(row));
    }
    return out.dump();
}

CheckSpec parse_check_spec(const std::string& json_text) {
    json node;
    try {
        node = json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("check spec is not valid JSON: ") + e.what());
    }
    if (!node.is_object())
        throw parse_error("check spec must be a JSON object");

    CheckSpec spec;
    spec.descriptor.name = node.contains("name") ? require_string(node, "name") : "check";

    std::string mode = node.contains("mode") ? require_string(node, "mode") : "classical";
    if (mode == "classical")
        spec.descriptor.mode = EquationMode::Classical;
    else if (mode == "extended")
        spec.descriptor.mode = EquationMode::Extended;
    else if (mode == "lifting")
        spec.descriptor.mode = EquationMode::Lifting;
    else
        throw parse_error("check spec: unknown mode '" + mode + "'");

    if (node.contains("lift_gk"))
        spec.descriptor.lift_gk = require_int(node, "lift_gk");

    if (node.contains("lhs_groups")) {
        if (!node["lhs_groups"].is_array())
            throw parse_error("check spec: lhs_groups must be an array of group strings");
        for (const json& g : node["lhs_groups"]) {
            if (!g.is_string())
                throw parse_error("check spec: lhs_groups entries must be strings");
            spec.descriptor.lhs_groups.push_back(GroupDescriptor::parse(g.get<std::string>()));
        }
    }
    if (node.contains("lhs_unipotent_dims")) {
        if (!node["lhs_unipotent_dims"].is_array())
            throw parse_error("check spec: lhs_unipotent_dims must be an array of integers");
        for (const json& u : node["lhs_unipotent_dims"]) {
            if (!u.is_number_integer())
                throw parse_error("check spec: lhs_unipotent_dims entries must be integers");
            spec.descriptor.lhs_unipotent_dims.push_back(u.get<long long>());
        }
    }
    if (node.contains("rhs_functionals")) {
        if (!node["rhs_functionals"].is_array())
            throw parse_error("check spec: rhs_functionals must be an array of objects");
        for (const json& f : node["rhs_functionals"])
            spec.descriptor.rhs_functionals.push_back(functional_from_value(f));
    }
    if (node.contains("expected_balanced")) {
        if (!node["expected_balanced"].is_boolean())
            throw parse_error("check spec: expected_balanced must be a boolean");
        spec.expected_balanced = node["expected_balanced"].get<bool>();
    }
    return spec;
}

} // namespace liedim
