#include <cstdio>
#include <iostream>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liedim/catalog.hpp"
#include "liedim/equation.hpp"
#include "liedim/functional.hpp"
#include "liedim/group.hpp"
#include "liedim/json_io.hpp"
#include "liedim/orbit.hpp"
#include "liedim/partition.hpp"
#include "liedim/search.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<long long> parse_blocks(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    std::vector<long long> blocks;
    std::stringstream ss(body);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw liedim::parse_error("bad Levi block '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size())
            throw liedim::parse_error("bad Levi block '" + token + "'");
        blocks.push_back(v);
    }
    if (blocks.empty())
        throw liedim::parse_error("empty Levi block list '" + text + "'");
    return blocks;
}

liedim::Dim6Params parse_dim6(const std::string& text) {
    std::map<std::string, long long> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t eq = token.find('=');
        if (eq == std::string::npos)
            throw liedim::parse_error("expected m=..,k=..,r=.. in '" + text + "'");
        std::string key = token.substr(0, eq);
        try {
            values[key] = std::stoll(token.substr(eq + 1));
        } catch (const std::exception&) {
            throw liedim::parse_error("bad value for '" + key + "' in '" + text + "'");
        }
    }
    for (const char* key : {"m", "k", "r"})
        if (!values.count(key))
            throw liedim::parse_error(std::string("missing '") + key + "' in '" + text + "'");
    return liedim::Dim6Params{values["m"], values["k"], values["r"]};
}

liedim::RangeOverride parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw liedim::parse_error("range must look like a..b, got '" + text + "'");
    try {
        return liedim::RangeOverride{std::stoll(text.substr(0, dots)),
                                     std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw liedim::parse_error("range must look like a..b, got '" + text + "'");
    }
}

void emit(const std::string& line) { std::cout << line << "\n"; }

std::string balance_line(const liedim::BalanceReport& r) {
    std::string out = r.name + ": lhs " + std::to_string(r.lhs_total) + ", rhs " +
                      std::to_string(r.rhs_total);
    out += r.balanced ? " -- balanced" : " -- unbalanced (deficit " + std::to_string(r.deficit) + ")";
    return out;
}

int run_orbit_dim(const std::string& group_text, const std::string& partition_text,
                  const std::string& format) {
    auto orbit = liedim::make_orbit(liedim::GroupDescriptor::parse(group_text),
                                    liedim::Partition::parse(partition_text));
    if (format == "json") {
        emit(liedim::to_json(orbit));
    } else {
        emit("orbit (" + orbit.partition.to_string() + ") on " + orbit.group.to_string() +
             ": dim " + std::to_string(orbit.dim) + ", GK " + std::to_string(orbit.gk) +
             ", odd parts " + std::to_string(orbit.odd_part_count));
    }
    return kExitOk;
}

int run_filtration(const std::string& group_text, const std::string& partition_text,
                   const std::string& format) {
    auto group = liedim::GroupDescriptor::parse(group_text);
    auto partition = liedim::Partition::parse(partition_text);
    auto profile = liedim::filtration_profile(group, partition);
    if (format == "json") {
        emit(liedim::to_json(profile));
        return kExitOk;
    }
    std::string weights;
    for (long long w : profile.weight_vector)
        weights += (weights.empty() ? "" : " ") + std::to_string(w);
    emit("torus exponents: " + weights);
    emit("dim N1 = " + std::to_string(profile.dim_n1) + ", dim N2 = " +
         std::to_string(profile.dim_n2) + ", weight-one roots = " +
         std::to_string(profile.weight_one_count));
    std::string hist;
    for (const auto& [w, c] : profile.weight_histogram)
        hist += (hist.empty() ? "" : ", ") + std::to_string(w) + ":" + std::to_string(c);
    emit("root weight histogram: " + hist);
    emit("GK from filtration: " + std::to_string(profile.dim_n2 + profile.weight_one_count / 2));
    return kExitOk;
}

int run_orbit_list(const std::string& group_text, std::optional<long long> max_gk,
                   const std::string& format) {
    auto group = liedim::GroupDescriptor::parse(group_text);
    json rows = json::array();
    for (const auto& p : liedim::enumerate_partitions(group.size, group.family)) {
        auto orbit = liedim::make_orbit(group, p);
        if (max_gk && orbit.gk > *max_gk)
            continue;
        if (format == "json") {
            json row;
            row["partition"] = p.to_string();
            row["dim"] = orbit.dim;
            row["gk"] = orbit.gk;
            rows.push_back(std::move(row));
        } else {
            emit(p.to_string() + "  dim " + std::to_string(orbit.dim) + "  gk " +
                 std::to_string(orbit.gk));
        }
    }
    if (format == "json") {
        json out;
        out["group"] = group.to_string();
        out["orbits"] = std::move(rows);
        emit(out.dump());
    }
    return kExitOk;
}

int run_levi_dim(const std::string& group_text, const std::string& blocks_text,
                 bool classical_factor, const std::string& format) {
    auto group = liedim::GroupDescriptor::parse(group_text);
    auto blocks = parse_blocks(blocks_text);
    long long radical = liedim::unipotent_radical_dim(
        group, liedim::LeviComposition{blocks, classical_factor});
    if (format == "json") {
        json out;
        out["group"] = group.to_string();
        out["blocks"] = blocks;
        out["classical_factor"] = classical_factor;
        out["radical_dim"] = radical;
        emit(out.dump());
    } else {
        emit("unipotent radical dimension: " + std::to_string(radical));
    }
    return kExitOk;
}

int run_eisenstein_dim(const std::string& group_text, const std::string& blocks_text,
                       bool classical_factor, long long inducing_gk, const std::string& format) {
    auto group = liedim::GroupDescriptor::parse(group_text);
    auto blocks = parse_blocks(blocks_text);
    auto f = liedim::eisenstein_dim(inducing_gk, group,
                                    liedim::LeviComposition{blocks, classical_factor});
    if (format == "json")
        emit(liedim::to_json(f));
    else
        emit("Eisenstein dimension: " + std::to_string(f.value()) + " (inducing " +
             std::to_string(f.first_arg()) + " + radical " + std::to_string(f.second_arg()) + ")");
    return kExitOk;
}

int run_check(const std::string& spec_path, const std::string& format) {
    std::ifstream in(spec_path);
    if (!in)
        throw liedim::parse_error("cannot open spec file '" + spec_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto spec = liedim::parse_check_spec(buffer.str());
    auto report = liedim::check_equation(spec.descriptor);
    if (format == "json")
        emit(liedim::to_json(report));
    else
        emit(balance_line(report));
    if (spec.expected_balanced && *spec.expected_balanced != report.balanced)
        return kExitMismatch;
    return kExitOk;
}

int run_catalog(const std::string& id_pattern, const std::string& range_text, bool export_json,
                const std::string& format) {
    std::optional<liedim::RangeOverride> range;
    if (!range_text.empty())
        range = parse_range(range_text);
    auto runs = liedim::run_catalog(id_pattern, range);

    bool all_ok = true;
    for (const auto& run : runs)
        all_ok = all_ok && run.as_expected;

    if (export_json || format == "json") {
        emit(liedim::catalog_runs_json(runs));
    } else {
        std::map<std::string, std::pair<long long, long long>> per_entry; // id -> (ok, total)
        std::vector<std::string> order;
        for (const auto& run : runs) {
            if (!per_entry.count(run.id))
                order.push_back(run.id);
            auto& [ok, total] = per_entry[run.id];
            ok += run.as_expected ? 1 : 0;
            ++total;
        }
        for (const auto& id : order) {
            const auto& [ok, total] = per_entry[id];
            emit(id + ": " + std::to_string(ok) + "/" + std::to_string(total) +
                 " points as expected" + (ok == total ? "" : "  << MISMATCH"));
        }
        emit(all_ok ? "catalog: all expectations met" : "catalog: EXPECTATION MISMATCH");
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_catalog_list(const std::string& format) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& [id, description, reference] : liedim::list_entries()) {
            json row;
            row["id"] = id;
            row["description"] = description;
            row["reference"] = reference;
            rows.push_back(std::move(row));
        }
        emit(rows.dump());
    } else {
        for (const auto& [id, description, reference] : liedim::list_entries())
            emit(id + "  --  " + description + "  [" + reference + "]");
    }
    return kExitOk;
}

int run_search(const std::string& group_text, std::optional<long long> gk,
               const std::string& dim6_text, bool even_mult, bool even_parts, bool minimal_p,
               const std::string& format) {
    liedim::SearchQuery query;
    query.filters.all_multiplicities_even = even_mult;
    query.filters.all_parts_even = even_parts;
    query.filters.minimal_distinct_parts = minimal_p;

    if (!dim6_text.empty()) {
        if (gk || !group_text.empty())
            throw liedim::parse_error("--dim6 cannot be combined with --group/--gk");
        query.dim6 = parse_dim6(dim6_text);
        query.group = liedim::dim6_group(*query.dim6);
    } else {
        if (!gk || group_text.empty())
            throw liedim::parse_error("search needs either --dim6 or both --group and --gk");
        query.group = liedim::GroupDescriptor::parse(group_text);
        query.target_gk = gk;
    }

    auto result = liedim::search(query);
    if (format == "json") {
        emit(liedim::search_result_json(query.group, result));
    } else {
        emit("group " + query.group.to_string() + ", target GK " +
             std::to_string(result.target_gk) + ", candidates " +
             std::to_string(result.total_candidates));
        for (const auto& p : result.solutions)
            emit("  " + p.to_string());
        emit(std::to_string(result.solutions.size()) + " solution(s)");
    }
    return kExitOk;
}

json prediction_row(const liedim::ThetaLiftPrediction& p) {
    json row;
    row["n"] = p.n;
    row["k"] = p.k;
    row["sigma_gk"] = p.sigma_gk;
    row["vanishing_predicted"] = p.vanishing_predicted;
    row["generic_compatible"] = p.generic_compatible;
    return row;
}

std::string prediction_line(const liedim::ThetaLiftPrediction& p) {
    std::string out = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                      ": lift GK " + std::to_string(p.sigma_gk);
    if (p.vanishing_predicted)
        out += " (negative: lift expected to vanish)";
    if (p.generic_compatible)
        out += " (compatible with a generic lift)";
    return out;
}

int run_predict_theta(long long n, std::optional<long long> k, std::optional<long long> sweep,
                      const std::string& format) {
    if (k.has_value() == sweep.has_value())
        throw liedim::parse_error("predict-theta needs exactly one of --k or --sweep");
    if (k) {
        auto p = liedim::theta_lift_predict(n, *k);
        emit(format == "json" ? prediction_row(p).dump() : prediction_line(p));
        return kExitOk;
    }
    json rows = json::array();
    for (long long kk = 1; kk <= *sweep; ++kk) {
        auto p = liedim::theta_lift_predict(n, kk);
        if (format == "json")
            rows.push_back(prediction_row(p));
        else
            emit(prediction_line(p));
    }
    if (format == "json")
        emit(rows.dump());
    return kExitOk;
}

int sweep_summary(const std::vector<liedim::BalanceReport>& reports, const std::string& format) {
    long long unbalanced = 0;
    json bad = json::array();
    for (const auto& r : reports) {
        if (!r.balanced) {
            ++unbalanced;
            bad.push_back(r.name);
        }
    }
    if (format == "json") {
        json out;
        out["points"] = static_cast<long long>(reports.size());
        out["unbalanced"] = unbalanced;
        out["all_balanced"] = unbalanced == 0;
        out["failures"] = std::move(bad);
        emit(out.dump());
    } else {
        emit("swept " + std::to_string(reports.size()) + " points, " +
             std::to_string(unbalanced) + " unbalanced");
        for (const auto& name : bad)
            emit("  UNBALANCED: " + name.get<std::string>());
    }
    return unbalanced == 0 ? kExitOk : kExitMismatch;
}

int run_lemma71(std::optional<long long> m, std::optional<long long> k, std::optional<long long> r,
                std::optional<long long> sweep, const std::string& format) {
    if (sweep) {
        std::vector<liedim::BalanceReport> reports;
        for (long long mm = 1; mm <= *sweep; ++mm)
            for (long long kk = 1; kk <= *sweep; ++kk)
                for (long long rr = 2; rr <= *sweep; ++rr)
                    reports.push_back(liedim::lemma71_check(mm, kk, rr));
        return sweep_summary(reports, format);
    }
    if (!m || !k || !r)
        throw liedim::parse_error("lemma71 needs --m, --k and --r (or --sweep)");
    auto report = liedim::lemma71_check(*m, *k, *r);
    emit(format == "json" ? liedim::to_json(report) : balance_line(report));
    return report.balanced ? kExitOk : kExitMismatch;
}

int run_cfgk(std::optional<long long> n, std::optional<long long> k,
             std::optional<long long> sweep, const std::string& format) {
    if (sweep) {
        std::vector<liedim::BalanceReport> reports;
        for (long long nn = 1; nn <= *sweep; ++nn)
            for (long long kk = 1; kk <= *sweep; ++kk)
                reports.push_back(liedim::cfgk_check(nn, kk));
        return sweep_summary(reports, format);
    }
    if (!n || !k)
        throw liedim::parse_error("cfgk needs --n and --k (or --sweep)");
    auto report = liedim::cfgk_check(*n, *k);
    emit(format == "json" ? liedim::to_json(report) : balance_line(report));
    return report.balanced ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimension bookkeeping for unipotent orbits and integral constructions "
                 "on split classical groups"};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->default_val("table");
    };

    // orbit-dim
    std::string arg_group, arg_partition;
    auto* orbit_dim = app.add_subcommand("orbit-dim", "orbit and GK dimension of a partition");
    orbit_dim->add_option("group", arg_group, "group, e.g. Sp(4)")->required();
    orbit_dim->add_option("partition", arg_partition, "partition, e.g. 2^2 or [2,2]")->required();
    add_format(orbit_dim);

    // filtration
    auto* filtration = app.add_subcommand("filtration", "torus grading of the positive roots");
    filtration->add_option("group", arg_group)->required();
    filtration->add_option("partition", arg_partition)->required();
    add_format(filtration);

    // orbit-list
    std::optional<long long> arg_max_gk;
    auto* orbit_list = app.add_subcommand("orbit-list", "all valid orbits of a group");
    orbit_list->add_option("group", arg_group)->required();
    orbit_list->add_option("--max-gk", arg_max_gk, "keep orbits of GK dimension <= N");
    add_format(orbit_list);

    // levi-dim
    std::string arg_blocks;
    bool arg_classical = false;
    auto* levi_dim = app.add_subcommand("levi-dim", "unipotent radical dimension of a parabolic");
    levi_dim->add_option("group", arg_group)->required();
    levi_dim->add_option("blocks", arg_blocks, "GL blocks, e.g. 1,2")->required();
    levi_dim->add_flag("--classical-factor", arg_classical, "keep the residual Sp/SO factor");
    add_format(levi_dim);

    // eisenstein-dim
    long long arg_inducing = 0;
    auto* eis_dim = app.add_subcommand("eisenstein-dim", "Eisenstein dimension: inducing + radical");
    eis_dim->add_option("group", arg_group)->required();
    eis_dim->add_option("blocks", arg_blocks)->required();
    eis_dim->add_option("--inducing-gk", arg_inducing, "GK dimension of the inducing data")
        ->required();
    eis_dim->add_flag("--classical-factor", arg_classical);
    add_format(eis_dim);

    // check
    std::string arg_spec;
    auto* check = app.add_subcommand("check", "balance a user-supplied integral descriptor");
    check->add_option("--spec", arg_spec, "JSON descriptor file")->required();
    add_format(check);

    // catalog
    bool arg_all = false;
    std::string arg_id, arg_range;
    auto* catalog = app.add_subcommand("catalog", "run the registered balance identities");
    catalog->add_flag("--all", arg_all, "run every entry (default)");
    catalog->add_option("--id", arg_id, "substring filter on entry ids");
    catalog->add_option("--range", arg_range, "override parameter ranges, e.g. 1..4");
    add_format(catalog);
    auto* catalog_export = catalog->add_subcommand("export", "emit every instantiated point as JSON");
    catalog_export->fallthrough();
    auto* catalog_list = catalog->add_subcommand("list", "list entry ids and descriptions");
    catalog_list->fallthrough();

    // search
    std::optional<long long> arg_gk;
    std::string arg_dim6;
    bool arg_even_mult = false, arg_even_parts = false, arg_minimal_p = false;
    auto* search = app.add_subcommand("search", "find orbits with a prescribed GK dimension");
    search->add_option("--group", arg_group);
    search->add_option("--gk", arg_gk, "GK target");
    search->add_option("--dim6", arg_dim6, "source-orbit parameters m=M,k=K,r=R");
    search->add_flag("--even-mult", arg_even_mult, "keep orbits with even multiplicities only");
    search->add_flag("--even-parts", arg_even_parts, "keep orbits with even parts only");
    search->add_flag("--minimal-p", arg_minimal_p, "keep orbits minimizing distinct part count");
    add_format(search);

    // predict-theta
    std::optional<long long> arg_n, arg_k, arg_m, arg_r, arg_sweep;
    long long arg_n_req = 0;
    auto* predict = app.add_subcommand("predict-theta", "predicted GK dimension of a theta lift");
    predict->add_option("--n", arg_n_req, "source group Sp(2n)")->required();
    predict->add_option("--k", arg_k, "target SO(2k)");
    predict->add_option("--sweep", arg_sweep, "sweep k = 1..MAX");
    add_format(predict);

    // lemma71
    auto* lemma71 = app.add_subcommand("lemma71", "two-block raise/lower balance identity");
    lemma71->add_option("--m", arg_m);
    lemma71->add_option("--k", arg_k);
    lemma71->add_option("--r", arg_r);
    lemma71->add_option("--sweep", arg_sweep, "sweep m,k = 1..MAX, r = 2..MAX");
    add_format(lemma71);

    // cfgk
    auto* cfgk = app.add_subcommand("cfgk", "generalized doubling balance for Sp(2n) x GL(k)");
    cfgk->add_option("--n", arg_n);
    cfgk->add_option("--k", arg_k);
    cfgk->add_option("--sweep", arg_sweep, "sweep n,k = 1..MAX");
    add_format(cfgk);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*orbit_dim) return run_orbit_dim(arg_group, arg_partition, format);
        if (*filtration) return run_filtration(arg_group, arg_partition, format);
        if (*orbit_list) return run_orbit_list(arg_group, arg_max_gk, format);
        if (*levi_dim) return run_levi_dim(arg_group, arg_blocks, arg_classical, format);
        if (*eis_dim)
            return run_eisenstein_dim(arg_group, arg_blocks, arg_classical, arg_inducing, format);
        if (*check) return run_check(arg_spec, format);
        if (*catalog) {
            if (*catalog_list) return run_catalog_list(format);
            return run_catalog(arg_id, arg_range, static_cast<bool>(*catalog_export), format);
        }
        if (*search)
            return run_search(arg_group, arg_gk, arg_dim6, arg_even_mult, arg_even_parts,
                              arg_minimal_p, format);
        if (*predict) return run_predict_theta(arg_n_req, arg_k, arg_sweep, format);
        if (*lemma71) return run_lemma71(arg_m, arg_k, arg_r, arg_sweep, format);
        if (*cfgk) return run_cfgk(arg_n, arg_k, arg_sweep, format);
    } catch (const liedim::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
