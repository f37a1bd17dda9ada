// qlines: construct the line-multiset code families, verify their claimed
// parameters, print the lambda/s table, and export code files and
// generator matrices.
//
// Exit codes: 0 success or verification pass, 1 verification mismatch,
// 2 usage error. Results go to stdout (or -o), diagnostics to stderr.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlines/code_io.hpp"
#include "qlines/code_model.hpp"
#include "qlines/construction.hpp"
#include "qlines/verify.hpp"

namespace {

using namespace qlines;

struct SizeArgs {
    int l = -1;
    int m = -1;
    int two_k = -1;
};

// verify_construction keys the claim set off (family, parameter); the
// parameter is l for the geometric families and m for the variant.
// --two-k is interchangeable with --l (the codes live in PG(2k-1,2),
// so l = 2k); for the variant l = 2m+1.
int family_param(const std::string& family, const SizeArgs& size) {
    int l = size.l;
    if (size.two_k >= 0) {
        if (l >= 0 && l != size.two_k)
            throw std::invalid_argument("--l and --two-k disagree (l = 2k)");
        l = size.two_k;
    }
    if (family == "variant") {
        if (size.m >= 0) {
            if (l >= 0 && l != 2 * size.m + 1)
                throw std::invalid_argument("variant: --two-k must equal 2m + 1");
            return size.m;
        }
        if (l >= 0) {
            if (l % 2 == 0)
                throw std::invalid_argument("variant: --two-k must be odd (2k = 2m + 1)");
            return (l - 1) / 2;
        }
        throw std::invalid_argument("family 'variant' requires --m");
    }
    if (family == "fano") {
        if (l >= 0 && l != 3)
            throw std::invalid_argument("family 'fano' exists only at --l 3");
        return 3;
    }
    if (l < 0) throw std::invalid_argument("family '" + family + "' requires --l");
    return l;
}

AdditiveLineCode build_family(const std::string& family, const SizeArgs& size) {
    const int param = family_param(family, size);
    if (family == "all-lines" || family == "fano") return all_lines_code(param);
    if (family == "spread") return spread_code(param);
    if (family == "three-cover") return three_cover_code(param);
    if (family == "variant") return variant_code(param);
    throw std::invalid_argument("unknown family '" + family + "'");
}

Strategy parse_strategy(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "scan") return Strategy::HyperplaneScan;
    if (name == "dual") return Strategy::DualAccumulation;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw CodeFileError("cannot open " + output_path + " for writing");
    out << text;
    if (!out) throw CodeFileError("write failed: " + output_path);
}

std::string half_integer(int two_k) {
    std::string k = std::to_string(two_k / 2);
    if (two_k % 2) k += ".5";
    return k;
}

std::string params_table(int max_two_k) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "two_k" << std::setw(6) << "k" << std::setw(10)
        << "lambda" << std::setw(8) << "s_k" << std::setw(13) << "witness"
        << "params" << '\n';
    for (int two_k = 3; two_k <= max_two_k; ++two_k) {
        const std::uint64_t s = s_k(two_k);
        std::string witness;
        CodeParameters p;
        if (two_k == 3) {
            witness = "fano";
            p = {7, 3, 6, 1};
        } else if (two_k % 2 == 0) {
            witness = "spread";
            const std::uint64_t n = ((std::uint64_t{1} << two_k) - 1) / 3;
            p = {n, two_k, n - s, s};
        } else {
            witness = "three-cover";
            const std::uint64_t n = (std::uint64_t{1} << two_k) - 1;
            p = {n, two_k, n - s, s};
        }
        out << std::left << std::setw(6) << two_k << std::setw(6) << half_integer(two_k)
            << std::setw(10) << lambda_k(two_k).str() << std::setw(8) << s
            << std::setw(13) << witness << p.str() << '\n';
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive quaternary codes as line multisets in PG(2k-1,2)"};
    app.require_subcommand(1);

    const std::vector<std::string> families{"all-lines", "spread", "three-cover", "variant",
                                            "fano"};
    std::string family;
    SizeArgs size;
    std::string output_path;
    std::string input_path;
    std::string format = "json";
    std::string strategy_name = "auto";
    int oracle_limit = kDefaultOracleDimLimit;
    int max_two_k = 8;
    unsigned copies = 2;

    auto add_family_opts = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--family", family, "code family")
                        ->check(CLI::IsMember(families));
        if (required) opt->required();
        cmd->add_option("--l", size.l, "ambient dimension l = 2k");
        cmd->add_option("--m", size.m, "variant size parameter m (l = 2m+1)");
        cmd->add_option("--two-k", size.two_k, "code dimension 2k (same as --l)");
    };
    auto add_eval_opts = [&](CLI::App* cmd) {
        cmd->add_option("--strategy", strategy_name, "evaluation strategy")
            ->check(CLI::IsMember({"auto", "scan", "dual"}));
        cmd->add_option("--oracle-limit", oracle_limit,
                        "max ambient dimension for the brute-force oracle")
            ->envname("QLINES_ORACLE_LIMIT");
    };

    auto* construct = app.add_subcommand("construct", "build a code and write its JSON file");
    add_family_opts(construct, true);
    construct->add_option("-o,--output", output_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify a family against its claims");
    add_family_opts(verify, true);
    add_eval_opts(verify);

    auto* params = app.add_subcommand("params", "print the lambda/s table with witnesses");
    params->add_option("--max-two-k", max_two_k, "largest 2k row")
        ->check(CLI::Range(3, 12));

    auto* exp = app.add_subcommand("export", "export a code in a chosen format");
    add_family_opts(exp, false);
    exp->add_option("-i,--input", input_path, "code JSON file (instead of --family)");
    exp->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv-weights", "gf4-genmat", "bin-genmat"}));
    exp->add_option("-o,--output", output_path, "output path (default stdout)");
    add_eval_opts(exp);

    auto* sum = app.add_subcommand("sum", "check the multiset sum of copies of a code");
    add_family_opts(sum, false);
    sum->add_option("-i,--input", input_path, "code JSON file (instead of --family)");
    sum->add_option("--copies", copies, "number of copies")->check(CLI::Range(2u, 64u));
    sum->add_option("-o,--output", output_path, "write the summed code here");
    add_eval_opts(sum);

    try {
        app.parse(argc, argv);

        auto load_input = [&]() -> AdditiveLineCode {
            if (!input_path.empty() && !family.empty())
                throw std::invalid_argument("give either --input or --family, not both");
            if (!input_path.empty()) return load_code(input_path);
            if (family.empty())
                throw std::invalid_argument("need --input or --family");
            return build_family(family, size);
        };

        if (app.got_subcommand(construct)) {
            emit(code_to_json(build_family(family, size)), output_path);
            return 0;
        }
        if (app.got_subcommand(verify)) {
            const auto report = verify_construction(family, family_param(family, size),
                                                    parse_strategy(strategy_name),
                                                    oracle_limit);
            std::cout << report_to_json(report);
            if (!report.pass) {
                std::cerr << "verify: FAILED (" << report.mismatches.size()
                          << " mismatch(es), see report)\n";
                return 1;
            }
            return 0;
        }
        if (app.got_subcommand(params)) {
            std::cout << params_table(max_two_k);
            return 0;
        }
        if (app.got_subcommand(exp)) {
            const AdditiveLineCode code = load_input();
            const Strategy strategy = parse_strategy(strategy_name);
            std::string text;
            if (format == "json")
                text = code_to_json(code);
            else if (format == "csv-weights")
                text = weights_to_csv(weight_distribution(code, strategy));
            else if (format == "gf4-genmat")
                text = gf4_generator_text(quaternary_generator_matrix(code));
            else
                text = binary_generator_text(concatenated_binary_generator(code));
            emit(text, output_path);
            return 0;
        }
        if (app.got_subcommand(sum)) {
            const AdditiveLineCode code = load_input();
            const auto report = sum_construction_check(code, copies,
                                                       parse_strategy(strategy_name),
                                                       oracle_limit);
            if (!output_path.empty()) {
                AdditiveLineCode summed = code;
                for (unsigned i = 1; i < copies; ++i) summed = sum_code(summed, code);
                save_code(summed, output_path);
            }
            std::cout << report_to_json(report);
            if (!report.pass) {
                std::cerr << "sum: FAILED (see report)\n";
                return 1;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const CodeFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
