#include "hyplam/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyplam/errors.hpp"
#include "hyplam/lambert.hpp"
#include "hyplam/qcbounds.hpp"
#include "hyplam/report_io.hpp"
#include "hyplam/specfun.hpp"
#include "hyplam/verify.hpp"

namespace hyplam::cli {

namespace {

constexpr double kPi = std::numbers::pi;

/// Invalid flag value; the message starts with the flag name.
struct UsageError {
    std::string message;
};

[[noreturn]] void bad_flag(const std::string& flag, const std::string& what, double got) {
    throw UsageError{flag + " " + what + " (got " + io::format_real(got) + ")"};
}

std::string num(double x) {
    return io::format_real(x);
}

void require_L(double L) {
    if (!(L > 0.0 && L <= 1.0)) bad_flag("--L", "must lie in (0, 1]", L);
}

void require_K(double K) {
    if (!(K >= 1.0) || !std::isfinite(K)) bad_flag("--K", "must be a finite number >= 1", K);
}

void require_angle(const std::string& flag, double a) {
    if (!(a > 0.0 && a < 0.5 * kPi)) bad_flag(flag, "must lie in (0, pi/2) radians", a);
}

void print_bound(std::ostream& out, const lambert::BoundReport& r) {
    out << "  observed " << num(r.observed) << "\n";
    if (std::isfinite(r.lower)) out << "  lower    " << num(r.lower) << "   gap " << num(r.observed - r.lower) << "\n";
    if (std::isfinite(r.upper)) out << "  upper    " << num(r.upper) << "   gap " << num(r.upper - r.observed) << "\n";
    if (r.equality_witness) out << "  equality at " << num(*r.equality_witness) << "\n";
    out << "  equality " << (r.equality ? "yes" : "no") << ", satisfied " << (r.satisfied ? "yes" : "no") << "\n";
}

// --- lambert -----------------------------------------------------------------

struct LambertArgs {
    double L = 0.0;
    double theta = 0.0;
    bool json = false;
};

int cmd_lambert(const LambertArgs& a, std::ostream& out) {
    require_L(a.L);
    require_angle("--theta", a.theta);
    const auto q = lambert::lambert_from(a.L, a.theta);
    const auto prod = lambert::product_report(q);
    const auto sum = lambert::sum_report(q);
    if (a.json) {
        io::Json j;
        j["schema"] = io::kSchema;
        j["type"] = "LambertQuad";
        j["L"] = q.L;
        j["theta"] = q.theta;
        j["t"] = q.t;
        j["d1"] = q.d1;
        j["d2"] = q.d2;
        j["phi"] = q.phi;
        j["product"] = io::to_json(prod);
        j["sum"] = io::to_json(sum);
        out << j.dump(2) << "\n";
    } else {
        out << "Lambert quadrilateral L = " << num(q.L) << ", theta = " << num(q.theta) << "\n";
        out << "  |v_c| = " << num(q.t) << "\n";
        out << "  d1    = " << num(q.d1) << "\n";
        out << "  d2    = " << num(q.d2) << "\n";
        out << "  phi   = " << num(q.phi) << "\n";
        out << "product d1 d2: " << prod.case_label << "\n";
        print_bound(out, prod);
        out << "sum d1 + d2: " << sum.case_label << "\n";
        print_bound(out, sum);
    }
    return prod.satisfied && sum.satisfied ? kExitOk : kExitViolation;
}

// --- ideal -------------------------------------------------------------------

struct IdealArgs {
    double alpha = 0.0;
    std::vector<std::string> quad;
    bool json = false;
};

std::array<Point, 4> parse_quad(const std::vector<std::string>& tokens) {
    std::string joined;
    for (const auto& t : tokens) joined += t + " ";
    std::istringstream in(joined);
    std::vector<std::string> parts;
    for (std::string p; in >> p;) parts.push_back(p);
    if (parts.size() != 4) throw UsageError{"--quad expects four points re,im (got " + std::to_string(parts.size()) + ")"};
    std::array<Point, 4> pts;
    for (int i = 0; i < 4; ++i) {
        const auto& s = parts[i];
        const auto comma = s.find(',');
        double re = 0.0;
        double im = 0.0;
        bool ok = comma != std::string::npos;
        if (ok) {
            const auto r1 = std::from_chars(s.data(), s.data() + comma, re);
            const auto r2 = std::from_chars(s.data() + comma + 1, s.data() + s.size(), im);
            ok = r1.ec == std::errc() && r1.ptr == s.data() + comma && r2.ec == std::errc() &&
                 r2.ptr == s.data() + s.size();
        }
        if (!ok) throw UsageError{"--quad point '" + s + "' is not of the form re,im"};
        pts[i] = Point::at(re, im);
    }
    return pts;
}

int cmd_ideal(const IdealArgs& a, bool have_alpha, std::ostream& out) {
    if (have_alpha == !a.quad.empty()) throw UsageError{"--alpha or --quad: exactly one is required"};
    double alpha = a.alpha;
    std::optional<double> ratio;
    if (have_alpha) {
        require_angle("--alpha", alpha);
    } else {
        const auto v = parse_quad(a.quad);
        try {
            alpha = lambert::alpha_from_quadruple(v[0], v[1], v[2], v[3]);
            ratio = absolute_ratio(Point::disk(v[0].z()), Point::disk(v[1].z()), Point::disk(v[2].z()),
                                   Point::disk(v[3].z()));
        } catch (const Error& e) {
            throw UsageError{std::string("--quad ") + e.what()};
        }
        if (!(alpha > 0.0)) throw UsageError{"--quad degenerate quadrilateral (alpha = 0)"};
    }
    const auto d = lambert::ideal_quad(alpha);
    const auto prod = lambert::ideal_product_report(alpha);
    const auto sum = lambert::ideal_sum_report(alpha);
    if (a.json) {
        io::Json j;
        j["schema"] = io::kSchema;
        j["type"] = "IdealQuad";
        j["alpha"] = alpha;
        j["absolute_ratio"] = ratio ? io::Json(*ratio) : io::Json(nullptr);
        j["d1"] = d.d1;
        j["d2"] = d.d2;
        j["product"] = io::to_json(prod);
        j["sum"] = io::to_json(sum);
        out << j.dump(2) << "\n";
    } else {
        out << "ideal quadrilateral alpha = " << num(alpha) << "\n";
        if (ratio) out << "  |a,b,c,d| = " << num(*ratio) << "\n";
        out << "  d1 = " << num(d.d1) << "\n";
        out << "  d2 = " << num(d.d2) << "\n";
        out << "product d1 d2: " << prod.case_label << "\n";
        print_bound(out, prod);
        out << "sum d1 + d2: " << sum.case_label << "\n";
        print_bound(out, sum);
    }
    return prod.satisfied && sum.satisfied ? kExitOk : kExitViolation;
}

// --- qc-bound ----------------------------------------------------------------

struct QcArgs {
    double K = 1.0;
    double L = 0.0;
    bool ideal = false;
    bool json = false;
};

int cmd_qc(const QcArgs& a, bool have_L, std::ostream& out) {
    require_K(a.K);
    if (have_L == a.ideal) throw UsageError{"--L or --ideal: exactly one is required"};
    if (a.ideal) {
        const auto d = qcbounds::qc_ideal_details(a.K);
        if (a.json) {
            io::Json j;
            j["schema"] = io::kSchema;
            j["type"] = "QcIdealBound";
            j["K"] = a.K;
            j["r1K"] = d.r1K;
            j["T_term"] = d.T_term;
            j["log_term"] = d.log_term;
            j["A"] = d.A;
            j["bound"] = d.bound;
            out << j.dump(2) << "\n";
        } else {
            out << "ideal quasiconformal bound K = " << num(a.K) << "\n";
            out << "  r_1(K)   = " << num(d.r1K) << "\n";
            out << "  T term   = " << num(d.T_term) << "\n";
            out << "  log term = " << num(d.log_term) << "\n";
            out << "  A(K)     = " << num(d.A) << "\n";
            out << "  bound    = " << num(d.bound) << "\n";
        }
        return kExitOk;
    }
    require_L(a.L);
    const auto r = qcbounds::qc_product_bound({a.K, a.L});
    if (a.json) {
        io::Json j = io::to_json(r);
        j["K"] = a.K;
        j["L"] = a.L;
        out << j.dump(2) << "\n";
    } else {
        out << "quasiconformal product bound K = " << num(a.K) << ", L = " << num(a.L) << "\n";
        out << "  regime " << qcbounds::to_string(r.regime) << "\n";
        if (r.r_L) out << "  r_L  = " << num(*r.r_L) << "\n";
        if (r.M_L) out << "  M_L  = " << num(*r.M_L) << "\n";
        if (r.r_LK) out << "  r_LK = " << num(*r.r_LK) << "\n";
        out << "  bound = " << num(r.bound) << "\n";
    }
    return kExitOk;
}

// --- specfun -----------------------------------------------------------------

struct SpecfunArgs {
    double r = 0.0;
    double K = 1.0;
    double p = 0.0;
    bool json = false;
};

int cmd_specfun(const SpecfunArgs& a, bool have_r, bool have_K, bool have_p, std::ostream& out) {
    if (have_r && !(a.r > 0.0 && a.r < 1.0)) bad_flag("--r", "must lie in (0, 1)", a.r);
    if (have_K) require_K(a.K);
    if (have_p && !(a.p < -2.0)) bad_flag("--p", "must be < -2 for C(p)", a.p);
    std::vector<std::pair<std::string, double>> rows{
        {"C", specfun::threshold_C()},
        {"u", specfun::distortion_u()},
        {"v", specfun::distortion_v()},
        {"th1", qcbounds::th_one()},
        {"r1", qcbounds::r_one()},
        {"M1", qcbounds::M_one()},
    };
    if (have_r) {
        rows.emplace_back("mu(r)", specfun::grotzsch_mu(a.r));
        rows.emplace_back("mu(r')", specfun::grotzsch_mu(specfun::complement(a.r)));
        rows.emplace_back("phi_K(r)", specfun::phi_K(a.K, a.r));
    }
    if (have_K) rows.emplace_back("A(K)", specfun::distortion_A(a.K));
    if (have_p) rows.emplace_back("C(p)", specfun::big_C_of_p(a.p));
    if (a.json) {
        io::Json j;
        j["schema"] = io::kSchema;
        j["type"] = "SpecialValues";
        if (have_r) j["r"] = a.r;
        if (have_K) j["K"] = a.K;
        if (have_p) j["p"] = a.p;
        for (const auto& [k, v] : rows) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : rows) out << k << " = " << num(v) << "\n";
    }
    return kExitOk;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const std::string& profile_name, bool json, std::ostream& out) {
    verify::Profile profile{};
    try {
        profile = verify::profile_from_string(profile_name);
    } catch (const ConfigurationError& e) {
        throw UsageError{std::string("--profile ") + e.what()};
    }
    const auto certs = verify::run_all(profile);
    const auto passed = std::count_if(certs.begin(), certs.end(), [](const auto& c) { return c.passed; });
    if (json) {
        out << io::to_json(certs).dump(2) << "\n";
    } else {
        for (const auto& c : certs) {
            out << (c.passed ? "PASS " : "FAIL ") << c.spec.name << "  [" << c.spec.result << "]  margin "
                << num(c.margin) << "  extremum " << num(c.observed_extremum) << "  " << c.runtime_ms << " ms\n";
        }
        out << passed << "/" << certs.size() << " claims passed (" << verify::to_string(profile) << " profile)\n";
    }
    return static_cast<std::size_t>(passed) == certs.size() ? kExitOk : kExitViolation;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
    std::string target;
    long long grid = 1000;
    std::string out_path;
    double L = 1.0;
    double p = 0.0;
    double K_max = 5.0;
};

int cmd_sweep(const SweepArgs& a, const verify::ParamList& params, std::ostream& out) {
    if (a.grid < 2) bad_flag("--grid", "must be at least 2", static_cast<double>(a.grid));
    verify::SweepTable table;
    try {
        table = verify::sweep_table(a.target, static_cast<std::size_t>(a.grid), params);
    } catch (const ConfigurationError& e) {
        const std::string msg = e.what();
        throw UsageError{msg.rfind("unknown sweep target", 0) == 0 ? "--target " + msg : msg};
    } catch (const DomainError& e) {
        throw UsageError{std::string("sweep parameters: ") + e.what()};
    }
    if (a.out_path.empty()) {
        io::write_csv(out, table);
        return kExitOk;
    }
    std::ofstream file(a.out_path);
    if (!file) throw UsageError{"--out cannot open '" + a.out_path + "' for writing"};
    io::write_csv(file, table);
    out << "wrote " << table.rows.size() << " rows to " << a.out_path << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sharp bounds for Lambert and ideal quadrilaterals in the hyperbolic plane"};
    app.name("hyplam");
    app.require_subcommand(1);

    LambertArgs la;
    auto* lambert_cmd = app.add_subcommand("lambert", "Lambert quadrilateral distances and their sharp bounds");
    lambert_cmd->add_option("--L", la.L, "th of the diagonal rho(v_a, v_c), in (0, 1]")->required();
    lambert_cmd->add_option("--theta", la.theta, "angle of v_c at v_a, radians in (0, pi/2)")->required();
    lambert_cmd->add_flag("--json", la.json, "emit JSON");

    IdealArgs ia;
    auto* ideal_cmd = app.add_subcommand("ideal", "ideal quadrilateral distances and bounds");
    auto* alpha_opt = ideal_cmd->add_option("--alpha", ia.alpha, "normalised angle, radians in (0, pi/2)");
    auto* quad_opt = ideal_cmd->add_option("--quad", ia.quad, "four boundary points re,im in counterclockwise order")
                         ->expected(1, 4);
    alpha_opt->excludes(quad_opt);
    ideal_cmd->add_flag("--json", ia.json, "emit JSON");

    QcArgs qa;
    auto* qc_cmd = app.add_subcommand("qc-bound", "product bound for the image of a K-quasiconformal map");
    qc_cmd->add_option("--K", qa.K, "distortion K >= 1")->required();
    auto* L_opt = qc_cmd->add_option("--L", qa.L, "Lambert parameter in (0, 1]");
    auto* ideal_flag = qc_cmd->add_flag("--ideal", qa.ideal, "ideal quadrilateral bound");
    L_opt->excludes(ideal_flag);
    qc_cmd->add_flag("--json", qa.json, "emit JSON");

    SpecfunArgs sa;
    auto* spec_cmd = app.add_subcommand("specfun", "special constants and function values");
    auto* r_opt = spec_cmd->add_option("--r", sa.r, "evaluate mu(r), mu(r') and phi_K(r)");
    auto* K_opt = spec_cmd->add_option("--K", sa.K, "evaluate A(K); also the K of phi_K");
    auto* p_opt = spec_cmd->add_option("--p", sa.p, "evaluate C(p) for p < -2");
    spec_cmd->add_flag("--json", sa.json, "emit JSON");

    std::string profile = "fast";
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run every registered claim sweep");
    verify_cmd->add_option("--profile", profile, "fast or thorough");
    verify_cmd->add_flag("--json", verify_json, "emit certificates as a JSON array");

    SweepArgs wa;
    auto* sweep_cmd = app.add_subcommand("sweep", "plot-ready CSV over a grid");
    sweep_cmd->add_option("--target", wa.target, "product, sum, ideal, mu, th1, distortion or qc")->required();
    sweep_cmd->add_option("--grid", wa.grid, "number of grid points (>= 2)");
    sweep_cmd->add_option("--out", wa.out_path, "CSV file (stdout when omitted)");
    auto* sL = sweep_cmd->add_option("--L", wa.L, "Lambert parameter for product, sum and qc");
    auto* sp = sweep_cmd->add_option("--p", wa.p, "Holder order for th1");
    auto* sK = sweep_cmd->add_option("--K-max", wa.K_max, "upper end of the K range for distortion and qc");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (lambert_cmd->parsed()) return cmd_lambert(la, out);
        if (ideal_cmd->parsed()) return cmd_ideal(ia, alpha_opt->count() > 0, out);
        if (qc_cmd->parsed()) return cmd_qc(qa, L_opt->count() > 0, out);
        if (spec_cmd->parsed()) return cmd_specfun(sa, r_opt->count() > 0, K_opt->count() > 0, p_opt->count() > 0, out);
        if (verify_cmd->parsed()) return cmd_verify(profile, verify_json, out);
        if (sweep_cmd->parsed()) {
            verify::ParamList params;
            if (sL->count()) params.emplace_back("L", wa.L);
            if (sp->count()) params.emplace_back("p", wa.p);
            if (sK->count()) params.emplace_back("K_max", wa.K_max);
            return cmd_sweep(wa, params, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}

}  // namespace hyplam::cli
