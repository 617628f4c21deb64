// avalg: construct, check and classify absolute-valued algebras with left
// unit, exactly over the rationals.
//
//   avalg verify   --suite all --seed 7
//   avalg classify --spec spec.json
//   avalg identity --spec spec.json --exact-sextic
//   avalg fingerprint --inline '{"kind":"named","name":"O"}'
//   avalg tables --format md
//
// Exit codes: 0 success, 1 verification/hypothesis failure, 2 usage or parse
// error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "avalg/suites.hpp"

namespace {

struct CommonOpts {
    std::uint64_t seed = 0;
    int samples = 20;
    std::string format = "json";
    std::string out;
    std::string spec_path;
    std::string inline_spec;
};

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty() || opts.out == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opts.out);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
    f << text << "\n";
}

avalg::AlgSpec load_spec(const CommonOpts& opts) {
    std::string text;
    if (!opts.inline_spec.empty()) {
        text = opts.inline_spec;
    } else if (!opts.spec_path.empty()) {
        std::ifstream f(opts.spec_path);
        if (!f) throw std::invalid_argument("cannot open spec file: " + opts.spec_path);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    } else {
        throw std::invalid_argument("one of --spec or --inline is required");
    }
    return avalg::alg_spec_from_json(avalg::Json::parse(text));
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_spec) {
    cmd->add_option("--seed", opts.seed, "sampling seed");
    cmd->add_option("--samples", opts.samples, "samples per parametric claim")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    if (with_spec) {
        cmd->add_option("--spec", opts.spec_path, "path to an algebra spec JSON file");
        cmd->add_option("--inline", opts.inline_spec, "inline algebra spec JSON");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and classification of absolute-valued algebras with left unit"};
    app.require_subcommand(1);

    CommonOpts vo;
    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite id or 'all'");
    add_common(verify, vo, false);

    CommonOpts co;
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify an algebra spec");
    add_common(classify_cmd, co, true);

    CommonOpts fo;
    CLI::App* fingerprint_cmd = app.add_subcommand("fingerprint", "isomorphism-invariant fingerprint of a spec");
    add_common(fingerprint_cmd, fo, true);

    CommonOpts io;
    bool exact_sextic = false;
    CLI::App* identity_cmd = app.add_subcommand("identity", "identity reports for a spec");
    identity_cmd->add_flag("--exact-sextic", exact_sextic, "also run the exact polarized sextic check");
    add_common(identity_cmd, io, true);

    CommonOpts to;
    CLI::App* tables_cmd = app.add_subcommand("tables", "summary tables with computed and reference columns");
    add_common(tables_cmd, to, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            avalg::SuiteConfig cfg{vo.seed, vo.samples};
            std::vector<avalg::SuiteResult> results;
            if (suite == "all") {
                results = avalg::run_all_suites(cfg);
            } else {
                try {
                    results.push_back(avalg::run_suite(suite, cfg));
                } catch (const std::invalid_argument& e) {
                    std::cerr << e.what() << "\n";
                    return 2;
                }
            }
            std::string text;
            if (vo.format == "json") text = avalg::run_report_json(results, cfg).dump(2);
            else if (vo.format == "csv") text = avalg::format_csv(results);
            else text = avalg::format_markdown(results);
            write_output(vo, text);
            for (const avalg::SuiteResult& r : results)
                if (!r.all_ok()) {
                    std::cerr << "suite " << r.suite << " failed at check " << r.first_failure()->id << "\n";
                    return 1;
                }
            return 0;
        }
        if (classify_cmd->parsed()) {
            avalg::AlgSpec spec = load_spec(co);
            try {
                avalg::Classification c = avalg::classify(spec, co.samples, co.seed ? co.seed : 1);
                write_output(co, avalg::classification_to_json(c).dump(2));
                return 0;
            } catch (const std::domain_error& e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
        }
        if (fingerprint_cmd->parsed()) {
            avalg::AlgSpec spec = load_spec(fo);
            try {
                avalg::Algebra a = avalg::from_spec(spec);
                avalg::Fingerprint fp = avalg::invariant_fingerprint(a, fo.samples, fo.seed ? fo.seed : 1);
                write_output(fo, avalg::fingerprint_to_json(fp).dump(2));
                return 0;
            } catch (const std::domain_error& e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
        }
        if (identity_cmd->parsed()) {
            avalg::AlgSpec spec = load_spec(io);
            avalg::Algebra a = avalg::from_spec(spec);
            avalg::Json j;
            bool ok = true;
            try {
                avalg::IdentityReport quad = avalg::check_quadratic_criterion(a);
                j["quadratic_criterion"] = avalg::identity_report_to_json(quad);
                ok = ok && quad.holds;
            } catch (const std::domain_error& e) {
                j["quadratic_criterion"] = {{"error", e.what()}};
                ok = false;
            }
            avalg::IdentityReport lin = avalg::check_linearizations(a, io.samples, io.seed);
            j["linearizations"] = avalg::identity_report_to_json(lin);
            ok = ok && lin.holds;
            if (exact_sextic) {
                avalg::IdentityReport sx = avalg::check_sextic_exact(a);
                j["sextic"] = avalg::identity_report_to_json(sx);
                ok = ok && sx.holds;
            }
            write_output(io, j.dump(2));
            return ok ? 0 : 1;
        }
        if (tables_cmd->parsed()) {
            avalg::SuiteConfig cfg{to.seed, to.samples};
            std::string text;
            if (to.format == "json") text = avalg::tables_report(cfg).dump(2);
            else if (to.format == "csv") text = avalg::tables_csv(cfg);
            else text = avalg::tables_markdown(cfg);
            write_output(to, text);
            return 0;
        }
    } catch (const avalg::Json::exception& e) {
        std::cerr << "spec parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
