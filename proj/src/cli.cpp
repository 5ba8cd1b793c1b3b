#include "alp/cli.hpp"

#include "alp/core.hpp"
#include "alp/oracle.hpp"
#include "alp/quadrature.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

namespace alp::cli {
namespace {

constexpr int kDefaultMaxN = 30;
constexpr int kVerifyMaxN = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation guard, raised by ALP_MAX_N (unsupported territory above 30).
int max_supported_n() {
    if (const char* env = std::getenv("ALP_MAX_N")) {
        int v = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, v);
        if (ec == std::errc() && ptr == end && v > kDefaultMaxN) return v;
    }
    return kDefaultMaxN;
}

void check_alp_args(int n, int k, int kmin) {
    const int limit = max_supported_n();
    if (n < 0 || n > limit) {
        throw UsageError("--n must lie in [0, " + std::to_string(limit) + "]");
    }
    if (k < kmin || k > n) {
        throw UsageError("--k must lie in [" + std::to_string(kmin) + ", n]");
    }
}

std::optional<std::vector<double>> parse_number_list(std::string_view text) {
    std::vector<double> values;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || !std::isfinite(v)) {
            return std::nullopt;
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

std::function<double(double)> parse_integrand(const std::string& source) {
    if (source == "exp") return [](double x) { return std::exp(x); };
    if (source == "sin") return [](double x) { return std::sin(x); };
    if (source == "log1p") return [](double x) { return std::log1p(x); };

    constexpr std::string_view prefix = "poly:";
    if (source.rfind(prefix, 0) == 0) {
        auto coeffs = parse_number_list(std::string_view(source).substr(prefix.size()));
        if (coeffs) {
            return [c = std::move(*coeffs)](double x) {
                double acc = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
                return acc;
            };
        }
    }
    throw UsageError("malformed integrand '" + source + "', expected poly:c0,c1,... or one of exp, sin, log1p");
}

void cmd_coeffs(int n, int k, const std::string& format, std::ostream& out) {
    check_alp_args(n, k, 0);
    const ExactPolynomial p = alp_coefficients({n, k});
    std::vector<std::string> rendered;
    for (int l = 0; l <= n; ++l) rendered.push_back(to_string(p[static_cast<std::size_t>(l)]));

    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["coeffs"] = rendered;
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << "power,coeff\n";
        for (int l = 0; l <= n; ++l) out << l << ',' << rendered[static_cast<std::size_t>(l)] << '\n';
    } else {
        for (std::size_t l = 0; l < rendered.size(); ++l) out << (l ? " " : "") << rendered[l];
        out << '\n';
    }
}

void cmd_eval(int n, int k, double x, const std::string& format, std::ostream& out) {
    check_alp_args(n, k, 0);
    if (!std::isfinite(x)) throw UsageError("--x must be finite");
    const double v = alp_eval({n, k}, x);
    if (format == "json") {
        out << "{\"n\":" << n << ",\"k\":" << k << ",\"x\":" << format_real(x) << ",\"value\":" << format_real(v)
            << "}\n";
    } else if (format == "csv") {
        out << "n,k,x,value\n" << n << ',' << k << ',' << format_real(x) << ',' << format_real(v) << '\n';
    } else {
        out << format_real(v) << '\n';
    }
}

void cmd_rule(int n, int k, const std::string& format, std::ostream& out) {
    check_alp_args(n, k, 1);
    const QuadratureRule rule = build_rule(n, k);
    if (format == "json") {
        out << to_json(rule) << '\n';
    } else if (format == "csv") {
        out << to_csv(rule);
    } else {
        out << "# n=" << n << " k=" << k << " nodes=" << rule.nodes.size() << '\n';
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            out << j << ' ' << format_real(rule.nodes[j]) << ' ' << format_real(rule.weights[j]) << '\n';
        }
    }
}

void cmd_integrate(int n, int k, const std::string& source, std::ostream& out) {
    check_alp_args(n, k, 1);
    auto f = parse_integrand(source);
    const QuadratureRule rule = build_rule(n, k);
    out << format_real(integrate(rule, f)) << '\n';
}

int cmd_verify(int nmax, const std::string& format, std::ostream& out, std::ostream& err) {
    if (nmax < 0 || nmax > kVerifyMaxN) throw UsageError("--max-n must lie in [0, 12]");

    std::vector<IdentityReport> reports = verify_identity_suite(nmax);
    for (int n = 0; n <= nmax; ++n) {
        auto orth = verify_orthogonality(n);
        auto aux = verify_aux_orthogonality(n, nmax);
        reports.insert(reports.end(), orth.begin(), orth.end());
        reports.insert(reports.end(), aux.begin(), aux.end());
    }
    canonical_sort(reports);

    std::size_t unexpected = 0;
    for (const auto& r : reports) {
        if (!r.as_expected()) ++unexpected;
        out << (format == "json" ? to_json_line(r) : to_text_line(r)) << '\n';
    }

    std::ostream& summary = format == "json" ? err : out;
    summary << reports.size() << " checks, " << unexpected << " unexpected outcome(s)\n";
    return unexpected == 0 ? ok : verification_failure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alternative Legendre polynomials on [0, 1]: coefficients, evaluation, quadrature, verification"};
    app.require_subcommand(1);

    int n = 0;
    int k = 0;
    double x = 0.0;
    int max_n = 8;
    std::string format = "text";
    std::string integrand;
    const auto formats = CLI::IsMember({"text", "csv", "json"});

    auto add_index = [&](CLI::App* sub) {
        sub->add_option("--n", n, "family order")->required();
        sub->add_option("--k", k, "member index")->required();
    };

    auto* coeffs = app.add_subcommand("coeffs", "exact coefficients, lowest power first");
    add_index(coeffs);
    coeffs->add_option("--format", format)->check(formats);

    auto* eval = app.add_subcommand("eval", "evaluate P_nk(x)");
    add_index(eval);
    eval->add_option("--x", x, "evaluation point")->required();
    eval->add_option("--format", format)->check(formats);

    auto* rule = app.add_subcommand("rule", "quadrature nodes and weights");
    add_index(rule);
    rule->add_option("--format", format)->check(formats);

    auto* integ = app.add_subcommand("integrate", "apply the (n, k) rule to an integrand");
    add_index(integ);
    integ->add_option("--f", integrand, "poly:c0,c1,... | exp | sin | log1p")->required();

    auto* verify = app.add_subcommand("verify", "run the exact identity suite");
    verify->add_option("--max-n", max_n, "largest family order, 0..12")->capture_default_str();
    verify->add_option("--format", format)->check(formats);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (coeffs->parsed()) cmd_coeffs(n, k, format, out);
        if (eval->parsed()) cmd_eval(n, k, x, format, out);
        if (rule->parsed()) cmd_rule(n, k, format, out);
        if (integ->parsed()) cmd_integrate(n, k, integrand, out);
        if (verify->parsed()) return cmd_verify(max_n, format, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const RootCountError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return numerical_failure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return numerical_failure;
    }
    return ok;
}

}  // namespace alp::cli
