#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "onegen/cert.hpp"
#include "onegen/matrix_io.hpp"

namespace {

constexpr int input_error = 3;

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos)
            comma = s.size();
        auto item = s.substr(start, comma - start);
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty())
            out.push_back(item);
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Certificate suite for determinantal rings of 1-generic matrices"};
    app.set_version_flag("--version", std::string("onegen-cert ") + onegen::tool_version);

    std::string path, builtin, checks, out_path;
    int degree_bound = -1;
    onegen::SuiteConfig cfg;
    auto *file_opt = app.add_option("input", path, "matrix file (field:, vars:, matrix: lines)");
    auto *builtin_opt =
        app.add_option("--builtin", builtin, "built-in matrix: hankel:m,n, generic:m,n or symmetric:n");
    file_opt->excludes(builtin_opt);
    app.add_option("--prime", cfg.prime, "prime for modular checks")->capture_default_str();
    app.add_option("--degree-bound", degree_bound, "top degree for graded exactness (default n+m)");
    app.add_option("--samples", cfg.samples, "fiber samples")->capture_default_str();
    app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    app.add_option("--checks", checks, "comma-separated subset of checks (default all)");
    app.add_flag("--exact", cfg.exact, "Groebner computations over QQ instead of GF(prime)");
    app.add_option("--out", out_path, "write the JSON report here");
    app.add_flag("--timings", cfg.timings, "record elapsed_ms per check");
    bool list = false;
    app.add_flag("--list-checks", list, "print check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return input_error;
    }

    if (list) {
        for (const auto &name : onegen::suite_check_names())
            std::cout << name << "  " << onegen::check_statement(name) << "\n";
        return 0;
    }
    if (path.empty() == builtin.empty()) {
        std::cerr << "error: give exactly one of a matrix file or --builtin\n";
        return input_error;
    }
    if (degree_bound >= 0)
        cfg.degree_bound = degree_bound;
    cfg.checks = split_list(checks);

    onegen::CertificateReport report;
    try {
        onegen::ParsedMatrix parsed = builtin.empty()
                                          ? onegen::parse_matrix_file(path)
                                          : onegen::ParsedMatrix{onegen::builtin_matrix(builtin), {}};
        report = onegen::run_suite(parsed.matrix, cfg, parsed.warnings);
    } catch (const onegen::ParseError &e) {
        std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return input_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }

    std::cout << report.to_text();
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << report.to_json().dump(2) << "\n";
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return input_error;
        }
    }
    return report.exit_code();
}
