#include "hyplam/report_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "hyplam/errors.hpp"

namespace hyplam::io {

namespace {

using lambert::BoundReport;
using qcbounds::QcBoundResult;
using qcbounds::QcRegime;
using verify::Certificate;
using verify::SweepSpec;

Json real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

Json optional_real(const std::optional<double>& x) {
    return x ? real(*x) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw FormatError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

double read_real(const Json& v, const char* key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw FormatError(std::string("field '") + key + "' is not a real number");
}

double get_real(const Json& j, const char* key) {
    return read_real(field(j, key), key);
}

std::optional<double> get_optional_real(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return read_real(*it, key);
}

std::string get_string(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw FormatError(std::string("field '") + key + "' is not a string");
    return v.get<std::string>();
}

bool get_bool(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw FormatError(std::string("field '") + key + "' is not a boolean");
    return v.get<bool>();
}

void check_schema(const Json& j) {
    if (get_string(j, "schema") != kSchema) throw FormatError("unsupported schema '" + get_string(j, "schema") + "'");
}

Json params_json(const verify::ParamList& ps) {
    // an array keeps the order, which is part of the spec's identity
    Json a = Json::array();
    for (const auto& [k, v] : ps) a.push_back(Json::array({k, real(v)}));
    return a;
}

verify::ParamList params_from(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw FormatError(std::string("field '") + key + "' is not an array");
    verify::ParamList out;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string())
            throw FormatError(std::string("entries of '") + key + "' must be [name, value] pairs");
        out.emplace_back(e[0].get<std::string>(), read_real(e[1], key));
    }
    return out;
}

QcRegime regime_from(const std::string& s) {
    for (QcRegime r : {QcRegime::SmallL, QcRegime::LargeL_KleqM, QcRegime::LargeL_KgtM})
        if (qcbounds::to_string(r) == s) return r;
    throw FormatError("unknown regime '" + s + "'");
}

template <typename F>
auto translating(F&& f) {
    try {
        return f();
    } catch (const ConfigurationError& e) {
        throw FormatError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

Json to_json(const BoundReport& r) {
    Json params;
    params["L"] = real(r.params.L);
    params["theta"] = optional_real(r.params.theta);
    params["alpha"] = optional_real(r.params.alpha);
    params["K"] = optional_real(r.params.K);
    Json j;
    j["schema"] = kSchema;
    j["type"] = "BoundReport";
    j["quantity"] = lambert::to_string(r.quantity);
    j["params"] = std::move(params);
    j["case_label"] = r.case_label;
    j["lower"] = real(r.lower);
    j["upper"] = real(r.upper);
    j["observed"] = real(r.observed);
    j["equality_witness"] = optional_real(r.equality_witness);
    j["equality"] = r.equality;
    j["satisfied"] = r.satisfied;
    return j;
}

BoundReport bound_report_from_json(const Json& j) {
    return translating([&] {
        check_schema(j);
        BoundReport r;
        const auto q = get_string(j, "quantity");
        if (q == "Product") {
            r.quantity = BoundReport::Quantity::Product;
        } else if (q == "Sum") {
            r.quantity = BoundReport::Quantity::Sum;
        } else {
            throw FormatError("unknown quantity '" + q + "'");
        }
        const Json& p = field(j, "params");
        r.params.L = get_real(p, "L");
        r.params.theta = get_optional_real(p, "theta");
        r.params.alpha = get_optional_real(p, "alpha");
        r.params.K = get_optional_real(p, "K");
        r.case_label = get_string(j, "case_label");
        r.lower = get_real(j, "lower");
        r.upper = get_real(j, "upper");
        r.observed = get_real(j, "observed");
        r.equality_witness = get_optional_real(j, "equality_witness");
        r.equality = get_bool(j, "equality");
        r.satisfied = get_bool(j, "satisfied");
        return r;
    });
}

Json to_json(const QcBoundResult& r) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = "QcBoundResult";
    j["r_L"] = optional_real(r.r_L);
    j["M_L"] = optional_real(r.M_L);
    j["regime"] = qcbounds::to_string(r.regime);
    j["r_LK"] = optional_real(r.r_LK);
    j["bound"] = real(r.bound);
    return j;
}

QcBoundResult qc_result_from_json(const Json& j) {
    return translating([&] {
        check_schema(j);
        QcBoundResult r;
        r.r_L = get_optional_real(j, "r_L");
        r.M_L = get_optional_real(j, "M_L");
        r.regime = regime_from(get_string(j, "regime"));
        r.r_LK = get_optional_real(j, "r_LK");
        r.bound = get_real(j, "bound");
        return r;
    });
}

Json to_json(const SweepSpec& s) {
    Json j;
    j["target"] = verify::to_string(s.target);
    j["lemma"] = s.lemma;
    j["grid_size"] = s.grid_size;
    j["params"] = params_json(s.params);
    j["tolerance"] = real(s.tolerance);
    j["name"] = s.name;
    j["result"] = s.result;
    return j;
}

SweepSpec sweep_spec_from_json(const Json& j) {
    return translating([&] {
        SweepSpec s;
        s.target = verify::target_from_string(get_string(j, "target"));
        s.lemma = get_string(j, "lemma");
        const Json& g = field(j, "grid_size");
        if (!g.is_number_unsigned()) throw FormatError("field 'grid_size' is not a non-negative integer");
        s.grid_size = g.get<std::size_t>();
        s.params = params_from(j, "params");
        s.tolerance = get_real(j, "tolerance");
        s.name = get_string(j, "name");
        s.result = get_string(j, "result");
        return s;
    });
}

Json to_json(const Certificate& c) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = "Certificate";
    j["spec"] = to_json(c.spec);
    j["passed"] = c.passed;
    j["observed_extremum"] = real(c.observed_extremum);
    j["witness"] = params_json(c.witness);
    j["margin"] = real(c.margin);
    j["runtime_ms"] = c.runtime_ms;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    return translating([&] {
        check_schema(j);
        Certificate c;
        c.spec = sweep_spec_from_json(field(j, "spec"));
        c.passed = get_bool(j, "passed");
        c.observed_extremum = get_real(j, "observed_extremum");
        c.witness = params_from(j, "witness");
        c.margin = get_real(j, "margin");
        const Json& ms = field(j, "runtime_ms");
        if (!ms.is_number_integer()) throw FormatError("field 'runtime_ms' is not an integer");
        c.runtime_ms = ms.get<std::int64_t>();
        return c;
    });
}

Json to_json(const std::vector<Certificate>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(to_json(c));
    return a;
}

std::vector<Certificate> certificates_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected a JSON array of certificates");
    std::vector<Certificate> out;
    for (const auto& e : j) out.push_back(certificate_from_json(e));
    return out;
}

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const verify::SweepTable& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
        out << '\n';
    }
}

}  // namespace hyplam::io
