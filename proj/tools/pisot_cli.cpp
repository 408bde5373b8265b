// Command-line front end: generate sequences, guess recurrences, decide
// whether a guessed recurrence holds for all n (the PtoR / PtoRv workflow),
// verify parametric families, and scan (x, y) ranges to CSV.

#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pisot/pisot.hpp"

namespace {

pisot::PisotParams make_params(long x, long y, const std::string& r_str, unsigned s,
                               const std::vector<std::string>& extras) {
    pisot::PisotParams p;
    p.x = x;
    p.y = y;
    p.r = pisot::parse_rational(r_str);
    p.order_s = s;
    for (const auto& e : extras) p.extra_initial_terms.emplace_back(e);
    p.validate();
    return p;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void print_terms(std::ostream& os, const pisot::SequencePrefix& prefix, long count) {
    const long n = std::min<long>(count, static_cast<long>(prefix.size()));
    for (long i = 0; i < n; ++i) {
        if (i) os << ", ";
        os << prefix.terms[i].get_str();
    }
    os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pisot sequence recurrence prover: generate E_r(x,y), guess linear "
                 "recurrences, and certify whether they hold for all n"};
    app.require_subcommand(1);

    long x = 0, y = 0;
    std::string r_str = "1/2";
    unsigned s = 1;
    std::vector<std::string> extras;
    unsigned max_order = 12;
    long print_count = 0;
    long check_limit = 50000;
    unsigned precision_cap = 16384;
    std::string out_path;
    std::string format = "json";

    auto add_params = [&](CLI::App* cmd, bool need_xy = true) {
        auto* ox = cmd->add_option("--x", x, "first initial term x");
        auto* oy = cmd->add_option("--y", y, "second initial term y");
        if (need_xy) {
            ox->required();
            oy->required();
        }
        cmd->add_option("--r", r_str, "rounding offset r as p/q (default 1/2)");
        cmd->add_option("--s", s, "order of the Hankel generalization (default 1)");
        cmd->add_option("--extra", extras,
                        "extra initial terms for s > 1 (2s-2 values, decimal strings)");
    };

    // generate
    auto* gen = app.add_subcommand("generate", "print the first N terms of E_r(x,y)");
    long gen_count = 20;
    add_params(gen);
    gen->add_option("--count", gen_count, "number of terms")->required();
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_option("--format", format, "json | bfile");

    // guess
    auto* guess = app.add_subcommand("guess", "guess the minimal integer linear recurrence");
    add_params(guess);
    guess->add_option("--max-order", max_order, "maximal recurrence order to search (default 12)");
    guess->add_option("--out", out_path, "output file (default stdout)");

    // decide
    auto* dec = app.add_subcommand(
        "decide", "guess a recurrence and prove or disprove that it holds for all n");
    add_params(dec);
    dec->add_option("--max-order", max_order, "maximal recurrence order to search (default 12)");
    dec->add_option("--print", print_count, "print this many terms first (verbose mode)");
    dec->add_option("--check", check_limit, "scan limit before giving up (default 50000)");
    dec->add_option("--precision-cap", precision_cap, "root certification precision cap in bits");
    dec->add_option("--out", out_path, "output file (default stdout)");

    // families
    auto* fam = app.add_subcommand("families", "verify parametric recurrence templates");
    std::string templates_path = "data/pisot_families.json";
    long fam_kmin = 0, fam_kmax = 0;
    fam->add_option("--templates", templates_path, "template fixture JSON");
    fam->add_option("--k-min", fam_kmin, "override template k range start");
    fam->add_option("--k-max", fam_kmax, "override template k range end");
    fam->add_option("--max-order", max_order, "maximal recurrence order to search");
    fam->add_option("--check", check_limit, "scan limit");

    // scan
    auto* sc = app.add_subcommand("scan", "decide every pair in an (x, y) range, write CSV");
    long x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    unsigned workers = 0;
    sc->add_option("--x-min", x_min)->required();
    sc->add_option("--x-max", x_max)->required();
    sc->add_option("--y-min", y_min)->required();
    sc->add_option("--y-max", y_max)->required();
    sc->add_option("--r", r_str, "rounding offset r as p/q (default 1/2)");
    sc->add_option("--max-order", max_order, "maximal recurrence order to search");
    sc->add_option("--check", check_limit, "scan limit per pair");
    sc->add_option("--workers", workers, "worker threads (default: hardware)");
    sc->add_option("--out", out_path, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;

        if (gen->parsed()) {
            auto params = make_params(x, y, r_str, s, extras);
            auto prefix = pisot::generate(params, static_cast<std::size_t>(gen_count));
            std::ostream& os = open_output(file, out_path);
            if (format == "bfile") {
                pisot::write_bfile(os, prefix);
            } else if (format == "json") {
                pisot::Json j;
                j["params"] = pisot::params_to_json(params);
                j["terms"] = pisot::prefix_to_json(prefix);
                if (prefix.truncated_reason != pisot::TruncatedReason::RequestedLengthReached)
                    j["truncated"] = prefix.truncated_reason == pisot::TruncatedReason::PivotVanished
                                         ? "pivot F_s vanished"
                                         : "term not positive";
                os << j.dump(2) << "\n";
            } else {
                std::cerr << "unknown --format '" << format << "'\n";
                return 2;
            }
            return 0;
        }

        if (guess->parsed()) {
            auto params = make_params(x, y, r_str, s, extras);
            auto prefix = pisot::generate(
                params, std::max<std::size_t>(4 * static_cast<std::size_t>(max_order) + 4,
                                              2 * params.order_s + 4));
            auto result = pisot::guess_recurrence(prefix, max_order);
            std::ostream& os = open_output(file, out_path);
            pisot::Json j;
            if (auto* rec = std::get_if<pisot::LinearRecurrence>(&result)) {
                j["recurrence"] = pisot::recurrence_to_json(*rec);
                j["order"] = rec->order_k;
            } else {
                j["recurrence"] = nullptr;
                j["error"] = "no integer linear recurrence of order <= max_order fits";
            }
            os << j.dump(2) << "\n";
            return 0;
        }

        if (dec->parsed()) {
            auto params = make_params(x, y, r_str, s, extras);
            if (params.r <= 0 || params.r >= 1) {
                std::cerr << "decide requires 0 < r < 1 (r = 0 and r = 1 are out of scope)\n";
                return 2;
            }
            std::ostream& os = open_output(file, out_path);
            if (print_count > 0) {
                auto prefix = pisot::generate(
                    params,
                    std::max<std::size_t>(static_cast<std::size_t>(print_count), 2 * params.order_s));
                print_terms(os, prefix, print_count);
            }
            pisot::DecideOptions opts;
            opts.precision_cap = precision_cap;
            auto rep = pisot::end_to_end(params, max_order, check_limit, opts);
            os << pisot::report_to_json(rep).dump(2) << "\n";
            return 0;
        }

        if (fam->parsed()) {
            auto templates = pisot::load_family_templates(templates_path);
            bool all_ok = true;
            for (auto& tmpl : templates) {
                if (fam_kmin != 0 || fam_kmax != 0) {
                    if (fam_kmin != 0) tmpl.k_min = fam_kmin;
                    if (fam_kmax != 0) tmpl.k_max = fam_kmax;
                }
                auto check = pisot::verify_family(tmpl, max_order, check_limit);
                for (const auto& row : check.rows) {
                    std::cout << tmpl.name << " k=" << row.k << " y=" << row.y.get_str() << " ";
                    if (row.skipped) {
                        std::cout << "SKIP (" << row.detail << ")\n";
                        continue;
                    }
                    bool ok = row.guess_matches && row.verdict == pisot::Verdict::Proved;
                    std::cout << (ok ? "PASS" : "FAIL") << " verdict=" << pisot::to_string(row.verdict)
                              << (row.guess_matches ? "" : " guess-mismatch");
                    if (!row.detail.empty()) std::cout << " (" << row.detail << ")";
                    std::cout << "\n";
                    all_ok = all_ok && ok;
                }
            }
            std::cout << (all_ok ? "all templates verified\n" : "some template rows failed\n");
            return 0;
        }

        if (sc->parsed()) {
            pisot::ScanOptions opts;
            opts.max_order = max_order;
            opts.check_limit = check_limit;
            opts.workers = workers;
            std::size_t rows =
                pisot::scan(x_min, x_max, y_min, y_max, pisot::parse_rational(r_str), out_path, opts);
            std::cout << rows << " rows -> " << out_path << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
