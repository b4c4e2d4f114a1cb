#include "bns/asm_enum.hpp"
#include "bns/asymptotics.hpp"
#include "bns/cache.hpp"
#include "bns/conjecture.hpp"
#include "bns/frozen_oracle.hpp"
#include "bns/golden.hpp"
#include "bns/mir.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bns;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitNumeric = 4;

ExactInt compute(const std::string& method, int n, int s, const std::string& route,
                 bool override_guard, bool serial) {
    if (method == "oracle")
        return serial ? count_frozen_serial(n, s) : count_frozen(n, s);
    if (method == "conjecture")
        return conjecture_count(n, s, route == "contour" ? EntryRoute::kContour
                                                         : EntryRoute::kSum);
    if (method == "mir") {
        MirOptions opts;
        opts.override_guard = override_guard;
        return mir_count(n, s, opts);
    }
    if (method == "brute") return brute_force_frozen(n, s);
    throw DomainError("unknown method: " + method);
}

int cmd_count(const std::string& method, int n, int s, const std::string& route,
              bool override_guard, bool serial, bool no_cache) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExactInt value = compute(method, n, s, route, override_guard, serial);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!no_cache) {
        ResultRecord record{method, n, s, value.str(), wall, kToolVersion};
        ResultCache().append(record);
    }
    std::cout << value << "\n";
    return kExitOk;
}

struct VerifyState {
    int failures = 0;

    void report(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "pass  " : "FAIL  ") << name;
        if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }

    void compare(const std::string& name, const ExactInt& lhs, const ExactInt& rhs) {
        std::ostringstream os;
        os << lhs << " vs " << rhs;
        report(name, lhs == rhs, os.str());
    }
};

int cmd_verify(int n_max, bool golden_only, bool conjecture_vs_golden, bool slow) {
    VerifyState st;
    const bool skip_oracle = golden_only || conjecture_vs_golden;
    const int oracle_n_max = slow ? 16 : 14;
    for (int n = 2; n <= n_max; ++n) {
        for (int s = 1; s <= n; ++s) {
            const ExactInt conj = conjecture_count(n, s);
            const std::string tag = "n=" + std::to_string(n) + " s=" + std::to_string(s);
            if (auto gold = golden_value(n, s))
                st.compare("conjecture vs golden  " + tag, conj, *gold);
            if (skip_oracle) continue;
            if (n <= oracle_n_max)
                st.compare("oracle vs conjecture  " + tag, count_frozen(n, s), conj);
            if (n <= 8 && s <= 4)
                st.compare("mir vs conjecture     " + tag, mir_count(n, s), conj);
            if (n <= 4) st.compare("brute vs conjecture   " + tag,
                                   brute_force_frozen(n, s), conj);
        }
        if (!skip_oracle) {
            const PropertyReport props = verify_properties(
                n, [](int nn, int ss) { return conjecture_count(nn, ss); });
            for (const auto& check : props.checks)
                st.report("property n=" + std::to_string(n) + "  " + check.name,
                          check.passed, check.detail);
        }
    }
    std::cout << (st.failures == 0 ? "all checks passed"
                                   : std::to_string(st.failures) + " check(s) failed")
              << "\n";
    return st.failures == 0 ? kExitOk : kExitMismatch;
}

void emit_table(const std::string& format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            json obj;
            for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            out.push_back(obj);
        }
        std::cout << out.dump(1) << "\n";
    } else {
        for (size_t i = 0; i < header.size(); ++i)
            std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frozen-corner enumeration of alternating sign matrices"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Compute B(n,s) by one method");
    std::string method = "conjecture", route = "sum";
    int n = 0, s = 0;
    bool no_cache = false, override_guard = false, serial = false;
    count->add_option("--method", method, "oracle|conjecture|mir|brute")
        ->check(CLI::IsMember({"oracle", "conjecture", "mir", "brute"}));
    count->add_option("-n", n, "matrix size")->required();
    count->add_option("-s", s, "frozen square size")->required();
    count->add_option("--route", route, "conjecture entry route")
        ->check(CLI::IsMember({"sum", "contour"}));
    count->add_flag("--no-cache", no_cache, "skip the result cache");
    count->add_flag("--override-guard", override_guard, "lift the mir cost guard");
    count->add_flag("--serial", serial, "serial reference oracle");

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check all routes");
    int n_max = 8;
    bool golden_only = false, conj_vs_golden = false, slow = false;
    verify->add_option("--n-max", n_max, "largest size to check");
    verify->add_flag("--golden-only", golden_only,
                     "only compare the conjecture route to the reference table");
    verify->add_flag("--conjecture-vs-golden", conj_vs_golden,
                     "compare the conjecture route to the reference table");
    verify->add_flag("--slow", slow, "include the oracle up to n=16");

    // asymp
    auto* asymp = app.add_subcommand("asymp", "Large-n asymptotics");
    asymp->require_subcommand(1);
    std::string format = "csv";
    asymp->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* arctic = asymp->add_subcommand("arctic", "Sample the arctic curve");
    int samples = 20;
    arctic->add_option("--samples", samples, "number of curve samples");

    auto* cdf = asymp->add_subcommand("cdf", "Boundary distribution P_n(xi>s)");
    int cdf_n = 10;
    unsigned digits = 0;
    cdf->add_option("-n", cdf_n, "matrix size")->required();
    cdf->add_option("--digits", digits, "working precision (decimal digits)");

    auto* tw = asymp->add_subcommand("tw", "Tracy-Widom F2 grid");
    double sigma_min = -6, sigma_max = 6;
    int steps = 25, nodes = 64;
    tw->add_option("--sigma-min", sigma_min);
    tw->add_option("--sigma-max", sigma_max);
    tw->add_option("--steps", steps);
    tw->add_option("--nodes", nodes);

    auto* probe = asymp->add_subcommand("probe", "Edge fluctuation probe");
    double sigma = 0;
    std::vector<int> probe_ns{50, 100};
    probe->add_option("--sigma", sigma);
    probe->add_option("--n", probe_ns, "comma-separated sizes")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed())
            return cmd_count(method, n, s, route, override_guard, serial, no_cache);
        if (verify->parsed())
            return cmd_verify(n_max, golden_only, conj_vs_golden, slow);

        PrecisionConfig cfg;
        cfg.digits10 = digits;
        cfg.nodes = nodes;
        if (arctic->parsed()) {
            std::vector<std::vector<std::string>> rows;
            for (int i = 0; i < samples; ++i) {
                // log-spaced omega in [1, 1e6]
                const double omega = std::pow(10.0, 6.0 * i / std::max(1, samples - 1));
                const ArcticPoint p = arctic_point(omega);
                rows.push_back({fmt(p.omega), fmt(p.x), fmt(p.y),
                                fmt(ellipse_residual(p.x, p.y))});
            }
            emit_table(format, {"omega", "x", "y", "residual"}, rows);
        } else if (cdf->parsed()) {
            std::vector<std::vector<std::string>> rows;
            for (int ss = 1; ss <= cdf_n / 2; ++ss) {
                const BoundaryCdf c = boundary_cdf(cdf_n, ss, cfg);
                rows.push_back({std::to_string(cdf_n), std::to_string(ss),
                                fmt(c.value), fmt(c.error_estimate)});
            }
            emit_table(format, {"n", "s", "value", "error"}, rows);
        } else if (tw->parsed()) {
            std::vector<std::vector<std::string>> rows;
            for (int i = 0; i < steps; ++i) {
                const double sg =
                    sigma_min + (sigma_max - sigma_min) * i / std::max(1, steps - 1);
                rows.push_back({fmt(sg), fmt(tw_f2(sg, cfg))});
            }
            emit_table(format, {"sigma", "f2"}, rows);
        } else if (probe->parsed()) {
            std::vector<std::vector<std::string>> rows;
            for (const TwProbe& p : tw_convergence_probe(probe_ns, sigma, cfg))
                rows.push_back({fmt(p.sigma), std::to_string(p.n),
                                std::to_string(p.s_scaled), fmt(p.p_boundary),
                                fmt(p.f2), fmt(p.gap())});
            emit_table(format, {"sigma", "n", "s", "p_boundary", "f2", "gap"}, rows);
        }
        return kExitOk;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const ConvergenceError& e) {
        std::cerr << "numeric non-convergence: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}
