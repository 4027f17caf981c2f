#include "hookcomm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hookcomm/classifier.hpp"
#include "hookcomm/errors.hpp"
#include "hookcomm/json_io.hpp"

namespace hookcomm::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw InvalidInput(std::string("bad ") + what + " \"" + text + "\"");
        out.push_back(v);
    }
    if (out.empty())
        throw InvalidInput(std::string("empty ") + what);
    return out;
}

std::string join(const std::vector<Partition>& ps) {
    std::string s;
    for (const auto& p : ps) {
        if (!s.empty())
            s += ", ";
        s += p.to_string();
    }
    return s;
}

std::string describe(const CommutationCertificate& c) {
    std::string s = std::string("case ") + case_letter(c.case_tag) + " k=" + std::to_string(c.k) +
                    " mu=" + c.mu.to_string();
    if (c.delta)
        s += " delta=" + format_rational(*c.delta);
    return s;
}

HookType hook_of(const CliConfig& config) {
    return HookType(config.hook->first, config.hook->second);
}

struct TableRow {
    HookType hook;
    std::vector<Partition> columns[3];
    std::vector<Partition> non_commuting;
};

TableRow table_row(const HookType& hook, bool include_universal, int bound) {
    TableRow row{hook, {}, {}};
    for (const auto& entry : enumerate_commuting(hook, bound)) {
        if (!include_universal && is_universally_commuting(entry.partition))
            continue;
        for (int tag = 0; tag < 3; ++tag) {
            const bool present =
                std::any_of(entry.certificates.begin(), entry.certificates.end(),
                            [&](const auto& c) { return static_cast<int>(c.case_tag) == tag; });
            if (present)
                row.columns[tag].push_back(entry.partition);
        }
    }
    row.non_commuting = enumerate_non_commuting(hook, bound);
    return row;
}

int cmd_decide(const CliConfig& config, std::ostream& out) {
    const HookType hook = hook_of(config);
    const auto certs = decide(hook, *config.q);
    if (config.format == Format::json) {
        Json certs_json = Json::array();
        for (const auto& c : certs)
            certs_json.push_back(to_json_value(c));
        out << Json{{"hook", {hook.n(), hook.m()}},
                    {"partition", to_json_value(*config.q)},
                    {"commutes", !certs.empty()},
                    {"certificates", std::move(certs_json)}}
                   .dump()
            << '\n';
    } else if (certs.empty()) {
        out << "NO\n";
    } else {
        for (const auto& c : certs)
            out << describe(c) << '\n';
    }
    return certs.empty() ? kDoesNotCommute : kOk;
}

int cmd_enumerate(const CliConfig& config, std::ostream& out) {
    const HookType hook = hook_of(config);
    auto entries = enumerate_commuting(hook, config.max_n);
    if (config.exclude_universal)
        std::erase_if(entries, [](const auto& e) { return is_universally_commuting(e.partition); });
    if (config.format == Format::json) {
        out << to_json_value(entries).dump() << '\n';
        return kOk;
    }
    out << "hook " << hook.partition().to_string() << ", N=" << hook.size() << '\n';
    for (CaseTag tag : {CaseTag::a, CaseTag::b, CaseTag::c}) {
        std::vector<Partition> column;
        for (const auto& e : entries)
            if (std::any_of(e.certificates.begin(), e.certificates.end(),
                            [&](const auto& c) { return c.case_tag == tag; }))
                column.push_back(e.partition);
        out << "type (" << case_letter(tag) << "): " << join(column) << '\n';
    }
    out << "non-commuting: " << join(enumerate_non_commuting(hook, config.max_n)) << '\n';
    return kOk;
}

int cmd_witness(const CliConfig& config, std::ostream& out) {
    const HookType hook = hook_of(config);
    auto certs = decide(hook, *config.q);
    std::erase_if(certs, [&](const auto& c) {
        return (config.case_tag && case_letter(c.case_tag) != *config.case_tag) ||
               (config.k && c.k != *config.k);
    });
    if (certs.empty())
        throw InvalidInput(config.q->to_string() + " has no matching certificate for hook " +
                           hook.partition().to_string());

    std::optional<Witness> built;
    std::string last_failure;
    for (const auto& c : certs) {
        try {
            built = witness(hook, c);
            break;
        } catch (const WitnessUnavailable& e) {
            last_failure = e.what();
        }
    }
    if (!built)
        throw WitnessUnavailable(last_failure);

    const Json matrix = to_json_value(built->matrix);
    if (config.out_path) {
        std::ofstream file(*config.out_path);
        if (!file)
            throw InvalidInput("cannot write " + *config.out_path);
        file << matrix.dump() << '\n';
    }
    if (config.format == Format::json) {
        Json j = {{"certificate", to_json_value(built->used)},
                  {"fallback", built->fallback},
                  {"jordan", to_json_value(built->report)}};
        if (!config.out_path)
            j["matrix"] = matrix;
        out << j.dump() << '\n';
    } else {
        out << "certificate: " << describe(built->used) << (built->fallback ? " (fallback)" : "")
            << '\n'
            << "jordan type: " << built->report.jordan_type.to_string() << '\n';
        if (!config.out_path)
            out << matrix.dump() << '\n';
    }
    return kOk;
}

int cmd_jordan(const CliConfig& config, std::ostream& out) {
    std::ifstream file(*config.matrix_path);
    if (!file)
        throw InvalidInput("cannot read " + *config.matrix_path);
    Json j;
    try {
        j = Json::parse(file);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    const JordanReport report = jordan_type_of(matrix_from_json(j));
    if (config.format == Format::json) {
        out << to_json_value(report).dump() << '\n';
    } else {
        out << "rank sequence: " << Json(report.rank_sequence).dump() << '\n'
            << "type " << to_json_value(report.jordan_type).dump() << '\n'
            << "nilpotency index: " << report.nilpotency_index << '\n';
    }
    return kOk;
}

int cmd_table(const CliConfig& config, std::ostream& out) {
    std::vector<TableRow> rows;
    for (const auto& hook : hooks_of_size(*config.total))
        rows.push_back(table_row(hook, config.include_universal, config.max_n));

    if (config.format == Format::json) {
        Json j = Json::array();
        for (const auto& r : rows) {
            Json cols[3];
            for (int t = 0; t < 3; ++t) {
                cols[t] = Json::array();
                for (const auto& p : r.columns[t])
                    cols[t].push_back(to_json_value(p));
            }
            Json non = Json::array();
            for (const auto& p : r.non_commuting)
                non.push_back(to_json_value(p));
            j.push_back({{"hook", {r.hook.n(), r.hook.m()}},
                         {"a", cols[0]},
                         {"b", cols[1]},
                         {"c", cols[2]},
                         {"non_commuting", non}});
        }
        out << j.dump() << '\n';
        return kOk;
    }

    std::vector<std::vector<std::string>> cells{
        {"the hook", "type (a)", "type (b)", "type (c)", "non-commuting"}};
    for (const auto& r : rows)
        cells.push_back({r.hook.partition().to_string(), join(r.columns[0]), join(r.columns[1]),
                         join(r.columns[2]), join(r.non_commuting)});
    std::vector<std::size_t> width(5, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 5; ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < 5; ++c) {
            std::string cell = row[c];
            if (c + 1 < 5)
                cell.resize(width[c], ' ');
            line += (c == 0 ? "" : " | ") + cell;
        }
        out << line << '\n';
    }
    return kOk;
}

int cmd_generic(const CliConfig& config, std::ostream& out) {
    const auto estimate = sample_generic(*config.p, config.trials, config.seed, config.bound,
                                         config.mode);
    if (config.format == Format::json) {
        Json observed = Json::array();
        for (const auto& [type, count] : estimate.observed)
            observed.push_back({to_json_value(type), count});
        out << Json{{"partition", to_json_value(*config.p)},
                    {"generic", to_json_value(estimate.type)},
                    {"observed", observed},
                    {"anomaly", estimate.anomaly},
                    {"confirmed_exact", estimate.confirmed_exact}}
                   .dump()
            << '\n';
    } else {
        out << "D" << config.p->to_string() << " = " << estimate.type.to_string() << '\n';
        for (const auto& [type, count] : estimate.observed)
            out << "  " << type.to_string() << " x" << count << '\n';
        if (estimate.anomaly)
            out << "anomaly: sampled types are not totally ordered by dominance\n";
    }
    return kOk;
}

int cmd_oracle(const CliConfig& config, std::ostream& out) {
    GridSpec grid;
    grid.values = config.grid;
    grid.max_points = config.max_points;
    const OracleReport report = oracle_report(hook_of(config), grid);
    if (config.format == Format::json) {
        out << to_json_value(report).dump() << '\n';
    } else {
        std::vector<Partition> attained = report.attained;
        out << "hook " << report.hook.partition().to_string() << '\n'
            << "attained: " << join(attained) << '\n'
            << "missing vs theorem: " << join(report.missing_vs_theorem) << '\n'
            << "extra vs theorem: " << join(report.extra_vs_theorem) << '\n';
    }
    return report.agrees() ? kOk : kInternalError;
}

}  // namespace

Partition parse_partition_arg(const std::string& text) {
    return make_partition(parse_int_list(text, "partition"));
}

std::pair<int, int> parse_hook_arg(const std::string& text) {
    const auto v = parse_int_list(text, "hook");
    if (v.size() != 2)
        throw InvalidInput("hook must be given as n,m");
    return {v[0], v[1]};
}

void validate(const CliConfig& config) {
    auto need = [](bool present, const char* what) {
        if (!present)
            throw InvalidInput(std::string("missing required argument ") + what);
    };
    switch (config.command) {
        case Command::decide:
        case Command::witness:
            need(config.hook.has_value(), "--hook");
            need(config.q.has_value(), "--q");
            break;
        case Command::enumerate:
        case Command::oracle:
            need(config.hook.has_value(), "--hook");
            break;
        case Command::jordan:
            need(config.matrix_path.has_value(), "--matrix");
            break;
        case Command::table:
            need(config.total.has_value(), "--N");
            break;
        case Command::generic:
            need(config.p.has_value(), "--p");
            break;
    }
    if (config.trials < 1)
        throw InvalidInput("--trials must be positive");
    if (config.bound < 1)
        throw InvalidInput("--bound must be positive");
    if (config.case_tag && (*config.case_tag < 'a' || *config.case_tag > 'c'))
        throw InvalidInput("--case must be a, b or c");
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::decide: return cmd_decide(config, out);
            case Command::enumerate: return cmd_enumerate(config, out);
            case Command::witness: return cmd_witness(config, out);
            case Command::jordan: return cmd_jordan(config, out);
            case Command::table: return cmd_table(config, out);
            case Command::generic: return cmd_generic(config, out);
            case Command::oracle: return cmd_oracle(config, out);
        }
    } catch (const InternalError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kInputError;
    }
    return kInternalError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jordan types commuting with hook partitions (n,1^m)", "hookcomm"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string format = "text";
    std::string hook_text;
    std::string q_text;
    std::string p_text;
    std::string grid_text;
    std::string mode_text = "auto";
    std::string case_text;

    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-n", config.max_n, "Largest n+m for full enumeration")
        ->envname("HOOKCOMM_MAX_N");

    auto* decide_cmd = app.add_subcommand("decide", "Certificates for Q commuting with a hook");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "All partitions commuting with a hook");
    auto* witness_cmd = app.add_subcommand("witness", "Build a verified witness matrix");
    auto* jordan_cmd = app.add_subcommand("jordan", "Jordan type of a nilpotent matrix file");
    auto* table_cmd = app.add_subcommand("table", "Hook-vs-partition table for weight N");
    auto* generic_cmd = app.add_subcommand("generic", "Sample the generic commuting type D(P)");
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive grid check of a hook");

    for (auto* sub : {decide_cmd, enumerate_cmd, witness_cmd, oracle_cmd})
        sub->add_option("--hook", hook_text, "n,m")->required();
    for (auto* sub : {decide_cmd, witness_cmd})
        sub->add_option("--q", q_text, "Partition, comma separated")->required();
    enumerate_cmd->add_flag("--exclude-universal", config.exclude_universal,
                            "Drop partitions with all parts <= 2");
    witness_cmd->add_option("--out", config.out_path, "Write the matrix JSON here");
    witness_cmd->add_option("--case", case_text, "Restrict to certificates of this case");
    witness_cmd->add_option("--k", config.k, "Restrict to certificates with this power");
    jordan_cmd->add_option("--matrix", config.matrix_path, "Matrix JSON file")->required();
    table_cmd->add_option("--N", config.total, "Total size n+m")->required();
    table_cmd->add_flag("--include-universal", config.include_universal,
                        "Keep partitions with all parts <= 2");
    generic_cmd->add_option("--p", p_text, "Partition, comma separated")->required();
    generic_cmd->add_option("--trials", config.trials, "Number of samples");
    generic_cmd->add_option("--seed", config.seed, "Random seed");
    generic_cmd->add_option("--bound", config.bound, "Entries drawn from [-bound, bound]");
    generic_cmd->add_option("--mode", mode_text, "Rank arithmetic")
        ->check(CLI::IsMember({"exact", "modular", "auto"}));
    oracle_cmd->add_option("--grid", grid_text, "Comma separated grid values (default -1,0,1)");
    oracle_cmd->add_option("--max-points", config.max_points, "Largest grid to accept");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: usage: " << msg << '\n';
        return kInputError;
    }

    try {
        const std::pair<CLI::App*, Command> commands[] = {
            {decide_cmd, Command::decide},   {enumerate_cmd, Command::enumerate},
            {witness_cmd, Command::witness}, {jordan_cmd, Command::jordan},
            {table_cmd, Command::table},     {generic_cmd, Command::generic},
            {oracle_cmd, Command::oracle}};
        for (const auto& [sub, command] : commands)
            if (sub->parsed())
                config.command = command;
        config.format = format == "json" ? Format::json : Format::text;
        if (!hook_text.empty())
            config.hook = parse_hook_arg(hook_text);
        if (!q_text.empty())
            config.q = parse_partition_arg(q_text);
        if (!p_text.empty())
            config.p = parse_partition_arg(p_text);
        if (!case_text.empty())
            config.case_tag = case_text.size() == 1 ? case_text[0] : '?';
        if (!grid_text.empty()) {
            config.grid.clear();
            std::stringstream ss(grid_text);
            std::string item;
            while (std::getline(ss, item, ','))
                config.grid.push_back(parse_rational(item));
        }
        config.mode = mode_text == "exact"     ? RankMode::exact
                      : mode_text == "modular" ? RankMode::modular
                                               : RankMode::automatic;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kInputError;
    }
    return run(config, out, err);
}

}  // namespace hookcomm::cli
