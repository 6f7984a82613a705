#include "bellwit/io.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bellwit/classical.hpp"
#include "bellwit/errors.hpp"
#include "bellwit/families.hpp"
#include "bellwit/gram.hpp"
#include "bellwit/search.hpp"
#include "bellwit/sphere.hpp"
#include "bellwit/strategy.hpp"
#include "bellwit/tsirelson.hpp"

namespace bellwit {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double_token(const std::string& token, std::size_t line, std::size_t column) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("invalid number '" + token + "'", line, column);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite entry '" + token + "'", line, column);
    }
    return value;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) tokens.push_back(t);
    return tokens;
}

}  // namespace

BellExpression parse_matrix_text(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            auto tokens = split_ws(line);
            if (!tokens.empty()) return tokens;
        }
        ++line_no;
        return {};
    };

    const auto header = next_tokens();
    if (header.size() != 2) {
        throw ParseError("expected header 'rows cols'", line_no, 1);
    }
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (std::size_t k = 0; k < 2; ++k) {
        std::size_t value = 0;
        const auto& tok = header[k];
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
            throw ParseError("invalid dimension '" + tok + "'", line_no, k + 1);
        }
        (k == 0 ? rows : cols) = value;
    }

    std::vector<double> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto tokens = next_tokens();
        if (tokens.empty()) {
            throw ParseError("expected matrix row " + std::to_string(i + 1), line_no, 1);
        }
        if (tokens.size() != cols) {
            throw ParseError("expected " + std::to_string(cols) + " values, got " +
                                 std::to_string(tokens.size()),
                             line_no, tokens.size());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            entries.push_back(parse_double_token(tokens[j], line_no, j + 1));
        }
    }
    try {
        return BellExpression(rows, cols, std::move(entries));
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
    }
}

BellExpression parse_matrix_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ParseError("matrix JSON needs fields rows, cols, entries", 1, 1);
    }
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& rows_json = j.at("entries");
    if (!rows_json.is_array() || rows_json.size() != rows) {
        throw ParseError("entries must hold one array per row", 1, 1);
    }
    std::vector<double> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = rows_json.at(i);
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("row " + std::to_string(i + 1) + " must hold " +
                                 std::to_string(cols) + " numbers",
                             i + 1, 1);
        }
        for (std::size_t k = 0; k < cols; ++k) {
            if (!row.at(k).is_number()) {
                throw ParseError("non-numeric entry in row " + std::to_string(i + 1), i + 1,
                                 k + 1);
            }
            const double v = row.at(k).get<double>();
            if (!std::isfinite(v)) {
                throw ParseError("non-finite entry in row " + std::to_string(i + 1), i + 1,
                                 k + 1);
            }
            entries.push_back(v);
        }
    }
    try {
        return BellExpression(rows, cols, std::move(entries));
    } catch (const Error& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

BellExpression parse_matrix_string(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(e.what(), 1, 1);
        }
        return parse_matrix_json(j);
    }
    std::istringstream iss(text);
    return parse_matrix_text(iss);
}

BellExpression parse_matrix_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return parse_matrix_string(buffer.str());
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_string(buffer.str());
}

std::string format_matrix_text(const BellExpression& expr) {
    std::ostringstream out;
    out << expr.rows() << ' ' << expr.cols() << '\n';
    for (std::size_t i = 0; i < expr.rows(); ++i) {
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(expr(i, j));
        }
        out << '\n';
    }
    return out.str();
}

json matrix_to_json(const BellExpression& expr) {
    json rows = json::array();
    for (std::size_t i = 0; i < expr.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < expr.cols(); ++j) row.push_back(expr(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"rows", expr.rows()}, {"cols", expr.cols()}, {"entries", std::move(rows)}};
}

json profile_to_json(const DimensionProfile& profile) {
    json out = json::array();
    for (const auto& point : profile.points) {
        out.push_back(json{{"n", point.run.n},
                           {"value", point.run.value},
                           {"converged", point.run.converged},
                           {"restarts", point.restarts_used},
                           {"exact", point.exact},
                           {"sweeps", point.run.sweeps}});
    }
    return out;
}

json report_to_json(const WitnessReport& report) {
    json profile = json::array();
    for (const auto& entry : report.profile) {
        profile.push_back(json{{"n", entry.n},
                               {"value", entry.value},
                               {"converged", entry.converged},
                               {"restarts", entry.restarts_used}});
    }
    json gaps = json::array();
    for (const auto& gap : report.gaps) {
        gaps.push_back(json{{"n_low", gap.n_low},
                            {"n_high", gap.n_high},
                            {"gap", gap.gap},
                            {"witness_dim", gap.witness_dim},
                            {"threshold", gap.threshold}});
    }
    return json{{"profile", std::move(profile)},
                {"gaps", std::move(gaps)},
                {"grade", report.grade == Grade::Analytic ? "analytic" : "heuristic"}};
}

json make_envelope(const std::string& command, std::uint64_t seed, const OptimizerConfig& config,
                   json payload, double seconds) {
    return json{{"tool_version", kToolVersion},
                {"command", command},
                {"seed", seed},
                {"config",
                 json{{"restarts", config.restarts},
                      {"max_sweeps", config.max_sweeps},
                      {"conv_tol", config.conv_tol},
                      {"gap_tol", config.gap_tol},
                      {"jobs", config.jobs}}},
                {"payload", std::move(payload)},
                {"timing", json{{"seconds", seconds}}}};
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void print_profile_csv(std::ostream& out, const DimensionProfile& profile) {
    out << "n,value,converged\n";
    for (const auto& point : profile.points) {
        out << point.run.n << ',' << format_double(point.run.value) << ','
            << (point.run.converged ? "true" : "false") << '\n';
    }
}

bool all_converged(const DimensionProfile& profile) {
    for (const auto& point : profile.points) {
        if (!point.run.converged) return false;
    }
    return true;
}

int run_analyze(const std::string& path, std::size_t nmax, const OptimizerConfig& config,
                const std::string& format, std::ostream& out) {
    const BellExpression expr = parse_matrix_file(path);
    const std::size_t depth = nmax == 0 ? default_profile_depth(expr) : nmax;
    Timer timer;
    const DimensionProfile profile = dimension_profile(expr, depth, config);
    const WitnessReport report = detect_gaps(profile, config);
    if (format == "csv") {
        print_profile_csv(out, profile);
    } else {
        json payload{{"matrix", matrix_to_json(expr)},
                     {"profile", profile_to_json(profile)},
                     {"gaps", report_to_json(report).at("gaps")},
                     {"grade", "heuristic"}};
        out << make_envelope("analyze", config.seed, config, std::move(payload),
                             timer.seconds())
                   .dump(2)
            << '\n';
    }
    return all_converged(profile) ? 0 : 3;
}

int run_family(std::size_t m_b, double gamma, const std::string& emit,
               const OptimizerConfig& config, std::ostream& out) {
    if (gamma < 0.0) throw DomainError("gamma must be non-negative");
    const bool reduced = gamma == 0.0;
    const BellExpression expr = reduced ? zn_matrix(m_b) : bgamma_matrix(m_b, gamma);
    if (emit == "matrix") {
        out << format_matrix_text(expr);
        return 0;
    }
    Timer timer;
    const ClassicalResult classical = bgamma_classical(m_b, gamma);
    json payload{{"family", reduced ? "zn" : "bgamma"},
                 {"m_b", m_b},
                 {"gamma", gamma},
                 {"matrix", matrix_to_json(expr)},
                 {"classical", json{{"value", classical.value},
                                    {"k_max", *classical.k_max},
                                    {"delta", *classical.delta}}}};
    if (!reduced) {
        const FamilyAnalytic analytic = bgamma_analytic(m_b, gamma);
        payload["t_max"] = analytic.t_max;
        payload["x_star"] = analytic.x_star;
    }
    out << make_envelope("family bgamma", config.seed, config, std::move(payload),
                         timer.seconds())
               .dump(2)
        << '\n';
    return 0;
}

int run_sphere_table(std::size_t nmax, const std::string& m_text, const std::string& format,
                     const OptimizerConfig& config, std::ostream& out) {
    std::optional<std::size_t> m;
    if (m_text != "inf") {
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(m_text.data(), m_text.data() + m_text.size(), value);
        if (ec != std::errc() || ptr != m_text.data() + m_text.size() || value == 0) {
            throw DomainError("--m must be a positive integer or 'inf'");
        }
        m = value;
    }
    Timer timer;
    json rows = json::array();
    std::ostringstream csv;
    csv << "n,t_n,ratio\n";
    for (std::size_t n = 1; n <= nmax; ++n) {
        const double tn = m ? analytic_tn(*m, n) : limit_tn(n);
        const double t1 = m ? analytic_tn(*m, 1) : limit_tn(1);
        const double ratio = tn / t1;
        rows.push_back(json{{"n", n}, {"t_n", tn}, {"ratio", ratio}});
        csv << n << ',' << format_double(tn) << ',' << format_double(ratio) << '\n';
    }
    if (format == "csv") {
        out << csv.str();
        return 0;
    }
    json payload{{"m", m ? json(*m) : json("inf")}, {"rows", std::move(rows)}};
    out << make_envelope("sphere table", config.seed, config, std::move(payload),
                         timer.seconds())
               .dump(2)
        << '\n';
    return 0;
}

int run_sphere_discretize(std::size_t m, std::size_t points, std::size_t nmax,
                          const OptimizerConfig& config, std::ostream& out) {
    Timer timer;
    const BellExpression expr = discretize_sphere_expression(m, points, config.seed);
    const std::size_t depth = nmax == 0 ? std::min<std::size_t>(m, points) : nmax;
    const DimensionProfile profile = dimension_profile(expr, depth, config);
    json analytic = json::array();
    for (std::size_t n = 1; n <= depth; ++n) {
        analytic.push_back(json{{"n", n}, {"t_n", analytic_tn(m, n)}});
    }
    json payload{{"m", m},
                 {"points", points},
                 {"profile", profile_to_json(profile)},
                 {"analytic", std::move(analytic)},
                 {"grade", "heuristic"}};
    out << make_envelope("sphere discretize", config.seed, config, std::move(payload),
                         timer.seconds())
               .dump(2)
        << '\n';
    return all_converged(profile) ? 0 : 3;
}

json complex_matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            re.push_back(m(i, j).real());
            im.push_back(m(i, j).imag());
        }
    }
    return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

int run_realize(const std::string& path, std::size_t n, bool dump,
                const OptimizerConfig& config, std::ostream& out) {
    const BellExpression expr = parse_matrix_file(path);
    if (n == 0) throw DomainError("--n must be at least 1");
    if (n > kCliffordGeneratorCap) {
        throw CapacityError("realization capped at n = " +
                            std::to_string(kCliffordGeneratorCap));
    }
    Timer timer;
    const OptRun best = max_over_restarts(expr, n, config);
    const UnitVectors alice = optimal_alice(expr, best.bob);
    const Strategy strategy(n, alice, best.bob);
    const QuantumRealization realization = realize(alice, best.bob);
    const RealizationCheck check = verify_realization(realization, expr, strategy);

    json payload{{"n", n},
                 {"local_dim", realization.local_dim},
                 {"optimizer_value", best.value},
                 {"strategy_value", check.strategy_bell_value},
                 {"realized_value", check.realized_bell_value},
                 {"residuals", json{{"correlation", check.max_correlation_error},
                                    {"involution", check.max_involution_residual},
                                    {"anticommutator", check.max_anticommutator_residual}}},
                 {"passed", check.passed},
                 {"converged", best.converged}};
    if (dump) {
        json alice_obs = json::array();
        for (const auto& o : realization.alice_obs) alice_obs.push_back(complex_matrix_to_json(o));
        json bob_obs = json::array();
        for (const auto& o : realization.bob_obs) bob_obs.push_back(complex_matrix_to_json(o));
        json generators = json::array();
        for (const auto& g : realization.generators)
            generators.push_back(complex_matrix_to_json(g));
        json state_re = json::array();
        json state_im = json::array();
        for (Eigen::Index t = 0; t < realization.state.size(); ++t) {
            state_re.push_back(realization.state(t).real());
            state_im.push_back(realization.state(t).imag());
        }
        payload["dump"] = json{{"alice_obs", std::move(alice_obs)},
                               {"bob_obs", std::move(bob_obs)},
                               {"generators", std::move(generators)},
                               {"state", json{{"re", std::move(state_re)},
                                              {"im", std::move(state_im)}}}};
    }
    out << make_envelope("realize", config.seed, config, std::move(payload), timer.seconds())
               .dump(2)
        << '\n';
    if (!check.passed) return 3;
    return best.converged ? 0 : 3;
}

int run_search(std::size_t m_a, std::size_t m_b, const std::string& alphabet_text,
               const std::string& flag_text, const std::string& out_path, bool augmented,
               std::uint64_t budget, const OptimizerConfig& config, std::ostream& out) {
    EnumerationOptions enum_options;
    enum_options.alphabet.clear();
    {
        std::istringstream iss(alphabet_text);
        std::string token;
        while (std::getline(iss, token, ',')) {
            if (token.empty()) continue;
            enum_options.alphabet.push_back(parse_double_token(token, 1, 1));
        }
        if (enum_options.alphabet.empty()) throw DomainError("--alphabet must list values");
    }
    enum_options.budget = budget;
    enum_options.jobs = config.jobs;

    ScanOptions scan_options;
    {
        std::istringstream iss(flag_text);
        std::string low, high;
        if (!std::getline(iss, low, ',') || !std::getline(iss, high, ',')) {
            throw DomainError("--flag-gap must look like 'n,n+1'");
        }
        auto parse_dim = [&](const std::string& token) {
            std::size_t value = 0;
            const auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
                throw DomainError("--flag-gap must list two positive dimensions");
            }
            return value;
        };
        scan_options.flag_gap = {parse_dim(low), parse_dim(high)};
        scan_options.n_max = scan_options.flag_gap.second;
    }

    Timer timer;
    const std::vector<ClassRep> classes = augmented
                                              ? enumerate_classes_augmented(m_a, m_b, enum_options)
                                              : enumerate_classes(m_a, m_b, enum_options);

    std::ofstream jsonl;
    if (!out_path.empty()) {
        jsonl.open(out_path);
        if (!jsonl) throw DomainError("cannot open output file '" + out_path + "'");
    }
    ScanEmit emit;
    if (jsonl.is_open()) {
        emit = [&](std::size_t index, const ClassRep& rep, const DimensionProfile& profile,
                   bool hit) {
            json profile_json = json::array();
            for (const auto& point : profile.points) {
                profile_json.push_back(json{{"n", point.run.n},
                                            {"value", point.run.value},
                                            {"converged", point.run.converged}});
            }
            json row = json::array();
            json matrix = json::array();
            for (std::size_t i = 0; i < rep.rows; ++i) {
                json r = json::array();
                for (std::size_t j = 0; j < rep.cols; ++j)
                    r.push_back(rep.entries[i * rep.cols + j]);
                matrix.push_back(std::move(r));
            }
            jsonl << json{{"key", rep.entries},
                          {"matrix", std::move(matrix)},
                          {"profile", std::move(profile_json)},
                          {"hit", hit},
                          {"seed", stream_seed(config.seed, index)}}
                         .dump()
                  << '\n';
        };
    }
    const ScanResult scan = scan_for_witnesses(classes, scan_options, config, emit);

    json hits = json::array();
    for (const auto& hit : scan.hits) {
        json matrix = json::array();
        for (std::size_t i = 0; i < hit.rep.rows; ++i) {
            json r = json::array();
            for (std::size_t j = 0; j < hit.rep.cols; ++j)
                r.push_back(hit.rep.entries[i * hit.rep.cols + j]);
            matrix.push_back(std::move(r));
        }
        hits.push_back(json{{"class_index", hit.class_index},
                            {"matrix", std::move(matrix)},
                            {"gap", hit.gap},
                            {"witness_dim", hit.witness_dim},
                            {"profile", profile_to_json(hit.profile)}});
    }
    json payload{{"rows", m_a},
                 {"cols", m_b},
                 {"alphabet", enum_options.alphabet},
                 {"flag_gap", json::array({scan_options.flag_gap.first,
                                           scan_options.flag_gap.second})},
                 {"classes", classes.size()},
                 {"scanned", scan.scanned},
                 {"skipped", scan.skipped},
                 {"hits", std::move(hits)}};
    if (!out_path.empty()) payload["out"] = out_path;
    out << make_envelope("search", config.seed, config, std::move(payload), timer.seconds())
               .dump(2)
        << '\n';
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dimension witnesses for correlation Bell expressions"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    OptimizerConfig config;
    std::string matrix_path;
    std::size_t nmax = 0;
    std::string format = "json";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--restarts", config.restarts, "independent see-saw restarts");
        cmd->add_option("--seed", config.seed, "base RNG seed");
        cmd->add_option("--jobs", config.jobs, "worker threads (0 = available parallelism)");
    };

    auto* analyze = app.add_subcommand("analyze", "profile a matrix over dimensions");
    analyze->add_option("matrix", matrix_path, "matrix file or '-' for stdin")->required();
    analyze->add_option("--nmax", nmax, "profile depth (default min(rows, cols))");
    analyze->add_option("--tol-gap", config.gap_tol, "gap detection tolerance");
    analyze->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(analyze);

    auto* family = app.add_subcommand("family", "built-in expression families");
    std::size_t family_mb = 3;
    double family_gamma = 1.0;
    std::string family_emit = "report";
    auto* bgamma = family->add_subcommand("bgamma", "pair-difference family");
    bgamma->add_option("--mb", family_mb, "Bob settings")->required();
    bgamma->add_option("--gamma", family_gamma, "sum-row weight")->required();
    bgamma->add_option("--emit", family_emit, "matrix or report")
        ->check(CLI::IsMember({"matrix", "report"}));
    family->require_subcommand(1);

    auto* sphere = app.add_subcommand("sphere", "continuum kernel expression");
    sphere->require_subcommand(1);
    auto* table = sphere->add_subcommand("table", "analytic maxima and ratios");
    std::string sphere_m = "inf";
    table->add_option("--nmax", nmax, "table depth")->required();
    table->add_option("--m", sphere_m, "index sphere dimension or 'inf'");
    table->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* discretize = sphere->add_subcommand("discretize", "Monte-Carlo sample + profile");
    std::size_t sphere_dim = 3;
    std::size_t sphere_points = 100;
    discretize->add_option("--m", sphere_dim, "index sphere dimension")->required();
    discretize->add_option("--points", sphere_points, "sample points per side")->required();
    discretize->add_option("--nmax", nmax, "profile depth (default min(m, points))");
    add_common(discretize);

    auto* realize_cmd = app.add_subcommand("realize", "quantum realization of the optimum");
    std::size_t realize_n = 0;
    bool realize_dump = false;
    realize_cmd->add_option("matrix", matrix_path, "matrix file or '-' for stdin")->required();
    realize_cmd->add_option("--n", realize_n, "strategy dimension")->required();
    realize_cmd->add_flag("--dump", realize_dump, "include observables and state");
    add_common(realize_cmd);

    auto* search_cmd = app.add_subcommand("search", "enumerate classes and scan for gaps");
    std::size_t search_ma = 0;
    std::size_t search_mb = 0;
    std::string alphabet_text = "-1,0,1";
    std::string flag_text = "3,4";
    std::string out_path;
    bool augmented = false;
    std::uint64_t budget = EnumerationOptions{}.budget;
    search_cmd->add_option("--ma", search_ma, "Alice settings")->required();
    search_cmd->add_option("--mb", search_mb, "Bob settings")->required();
    search_cmd->add_option("--alphabet", alphabet_text, "comma-separated entry values");
    search_cmd->add_option("--flag-gap", flag_text, "dimension pair to flag, e.g. 3,4");
    search_cmd->add_option("--out", out_path, "JSONL output file (one object per class)");
    search_cmd->add_flag("--augmented", augmented, "canonical row-augmentation mode");
    search_cmd->add_option("--budget", budget, "assignment-space cap for full enumeration");
    search_cmd->add_option("--tol-gap", config.gap_tol, "gap threshold");
    add_common(search_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bellwit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (app.got_subcommand(analyze)) {
            return run_analyze(matrix_path, nmax, config, format, out);
        }
        if (app.got_subcommand(family)) {
            return run_family(family_mb, family_gamma, family_emit, config, out);
        }
        if (app.got_subcommand(sphere)) {
            if (sphere->got_subcommand(table)) {
                return run_sphere_table(nmax, sphere_m, format, config, out);
            }
            return run_sphere_discretize(sphere_dim, sphere_points, nmax, config, out);
        }
        if (app.got_subcommand(realize_cmd)) {
            return run_realize(matrix_path, realize_n, realize_dump, config, out);
        }
        if (app.got_subcommand(search_cmd)) {
            return run_search(search_ma, search_mb, alphabet_text, flag_text, out_path,
                              augmented, budget, config, out);
        }
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
        err << ": " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 1;
}

}  // namespace bellwit
