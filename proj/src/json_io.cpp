#include "hookcomm/json_io.hpp"

#include "hookcomm/errors.hpp"

namespace hookcomm {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw InvalidInput(std::string("JSON field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<Rational> rational_list(const Json& j, const char* what) {
    if (!j.is_array())
        throw InvalidInput(std::string(what) + " must be a JSON array");
    std::vector<Rational> out;
    for (const auto& e : j)
        out.push_back(rational_from_json(e));
    return out;
}

Json rational_array(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(to_json_value(v));
    return out;
}

Json partition_array(const std::vector<Partition>& ps) {
    Json out = Json::array();
    for (const auto& p : ps)
        out.push_back(to_json_value(p));
    return out;
}

}  // namespace

Json to_json_value(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw InvalidInput("rational entries must be strings like \"-1/2\" or integers");
}

Json to_json_value(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array())
        throw InvalidInput("a partition must be a JSON array of integers");
    std::vector<int> values;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw InvalidInput("partition parts must be integers");
        values.push_back(e.get<int>());
    }
    return make_partition(values);
}

Json to_json_value(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const Json& j) {
    const int rows = int_field(j, "rows");
    const int cols = int_field(j, "cols");
    if (rows < 1 || cols < 1)
        throw InvalidInput("matrix dimensions must be positive");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
        throw InvalidInput("matrix \"entries\" must hold " + std::to_string(rows) + " rows");
    ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = rational_list(entries[i], "matrix row");
        if (row.size() != m.cols())
            throw InvalidInput("matrix row " + std::to_string(i) + " must hold " +
                               std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(i, c) = row[c];
    }
    return m;
}

Json to_json_value(const HookType& hook, const UBParams& params) {
    Json v = Json::array();
    for (const auto& row : params.v)
        v.push_back(rational_array(row));
    return {{"n", hook.n()},
            {"m", hook.m()},
            {"h", rational_array(params.h)},
            {"u", rational_array(params.u)},
            {"d", rational_array(params.d)},
            {"v", std::move(v)}};
}

std::pair<HookType, UBParams> ub_params_from_json(const Json& j) {
    HookType hook(int_field(j, "n"), int_field(j, "m"));
    UBParams params;
    params.h = rational_list(field(j, "h"), "h");
    params.u = rational_list(field(j, "u"), "u");
    params.d = rational_list(field(j, "d"), "d");
    const Json& v = field(j, "v");
    if (!v.is_array())
        throw InvalidInput("v must be an array of lower-triangle rows");
    for (const auto& row : v)
        params.v.push_back(rational_list(row, "v row"));
    // Shape errors surface from build_ub; check here so bad files fail early.
    (void)build_ub(hook, params);
    return {hook, std::move(params)};
}

Json to_json_value(const CommutationCertificate& cert) {
    Json j = {{"case", std::string(1, case_letter(cert.case_tag))},
              {"k", cert.k},
              {"mu", to_json_value(cert.mu)}};
    if (cert.delta)
        j["delta"] = format_rational(*cert.delta);
    return j;
}

CommutationCertificate certificate_from_json(const Json& j) {
    const Json& tag = field(j, "case");
    if (!tag.is_string())
        throw InvalidInput("certificate \"case\" must be a string");
    CommutationCertificate cert;
    cert.case_tag = parse_case_tag(tag.get<std::string>());
    cert.k = int_field(j, "k");
    cert.mu = partition_from_json(field(j, "mu"));
    if (j.contains("delta") && !j.at("delta").is_null())
        cert.delta = rational_from_json(j.at("delta"));
    return cert;
}

Json to_json_value(const JordanReport& report) {
    return {{"rank_sequence", report.rank_sequence},
            {"jordan_type", to_json_value(report.jordan_type)},
            {"nilpotency_index", report.nilpotency_index}};
}

Json to_json_value(const OracleReport& report) {
    return {{"hook", {report.hook.n(), report.hook.m()}},
            {"grid", rational_array(report.grid)},
            {"attained", partition_array(report.attained)},
            {"missing_vs_theorem", partition_array(report.missing_vs_theorem)},
            {"extra_vs_theorem", partition_array(report.extra_vs_theorem)}};
}

Json to_json_value(const std::vector<CommutingEntry>& entries) {
    Json out = Json::array();
    for (const auto& e : entries) {
        Json certs = Json::array();
        for (const auto& c : e.certificates)
            certs.push_back(to_json_value(c));
        out.push_back({{"partition", to_json_value(e.partition)}, {"certificates", std::move(certs)}});
    }
    return out;
}

}  // namespace hookcomm
