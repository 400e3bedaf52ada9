// Command-line surface: Hilbert data, Betti tables, deviation tables, the
// verification sweeps, the bundled reproductions, and the minimum-modulus
// root probe.

#include "gradedev/betti.hpp"
#include "gradedev/errors.hpp"
#include "gradedev/graph.hpp"
#include "gradedev/growth.hpp"
#include "gradedev/hilbert.hpp"
#include "gradedev/io.hpp"
#include "gradedev/lex_segment.hpp"
#include "gradedev/poincare.hpp"
#include "gradedev/reproduce.hpp"
#include "gradedev/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iostream>

using namespace gradedev;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    std::string ideal_text;
    std::string graph_spec;
    unsigned vars = 0;
    unsigned trunc = 32;
    std::string format = "text";
    bool strict_degrees = false;
};

void print_header(bool no_header, const std::string& command) {
    if (no_header) return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cout << "# gradedev " << command << " | " << buf << "\n";
}

MonomialIdeal resolve_ideal(const CommonOpts& opt) {
    if (!opt.graph_spec.empty()) return edge_ideal(Graph::parse(opt.graph_spec));
    if (opt.vars == 0)
        throw InputError("--vars is required with --ideal");
    return parse_ideal(opt.ideal_text, opt.vars,
                       opt.strict_degrees ? MonomialIdeal::DegreePolicy::Strict
                                          : MonomialIdeal::DegreePolicy::Warn);
}

void add_input_flags(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_option("--ideal", opt.ideal_text, "monomial ideal, e.g. \"x1^2, x1*x2\"");
    cmd->add_option("--graph", opt.graph_spec,
                    "graph spec: path:n, cycle:n, complete:n, star:n, disjoint:<spec>xm, "
                    "or \"n=5; edges=1-2,2-3\"");
    cmd->add_option("--vars", opt.vars, "ambient variable count for --ideal");
    cmd->add_flag("--strict-degrees", opt.strict_degrees,
                  "reject generators of degree < 2 instead of warning");
}

int run_hilbert(const CommonOpts& opt) {
    const MonomialIdeal ideal = resolve_ideal(opt);
    const HilbertData hd = hilbert_data(ideal);
    if (opt.format == "json") {
        std::cout << nlohmann::json{{"ideal", ideal.to_json()},
                                    {"k_polynomial", hd.k_polynomial.to_json()},
                                    {"h_polynomial", hd.h_polynomial.to_json()},
                                    {"dimension", hd.dimension}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "ideal     " << ideal.to_string() << "  (n = " << ideal.vars() << ")\n"
              << "K(z)    = " << hd.k_polynomial.to_string() << "\n"
              << "h(z)    = " << hd.h_polynomial.to_string() << "\n"
              << "dim     = " << hd.dimension << "\n";
    const auto hf = hilbert_function_values(ideal, 8);
    std::cout << "HF(0..8):";
    for (const auto& v : hf) std::cout << " " << v.str();
    std::cout << "\n";
    return kExitOk;
}

int run_betti(const CommonOpts& opt) {
    const MonomialIdeal ideal = resolve_ideal(opt);
    const BettiCaps caps{6, 64, 100000};
    const BettiTable table = betti_table(ideal, caps);
    if (opt.format == "json") {
        std::cout << nlohmann::json{{"ideal", ideal.to_json()},
                                    {"betti", table.to_json()},
                                    {"golod_certificate",
                                     golod_certificate(ideal, caps).to_string()}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << table.to_text();
    std::cout << "golod certificate: " << golod_certificate(ideal, caps).to_string() << "\n";
    return kExitOk;
}

struct DeviationOpts {
    CommonOpts common;
    bool golod = false;
    bool koszul = false;
    bool ci = false;
    std::string poincare_text;
    unsigned codim = 0;
    bool force = false;
};

int run_deviations(const DeviationOpts& opt) {
    const unsigned order = opt.common.trunc;
    const int sources = int(opt.golod) + int(opt.koszul) + int(opt.ci) +
                        int(!opt.poincare_text.empty());
    if (sources != 1)
        throw InputError("choose exactly one of --golod, --koszul, --ci, --poincare");

    PoincareSeries series = poincare_ci(1, 0); // replaced below
    std::string provenance_detail;
    bool conditional = false;
    if (!opt.poincare_text.empty()) {
        series = PoincareSeries::make(parse_rational_function(opt.poincare_text),
                                      Provenance::UserSupplied, order);
        provenance_detail = "user-supplied closed form";
    } else if (opt.ci) {
        const unsigned n = opt.common.vars;
        if (n == 0) throw InputError("--ci requires --vars");
        series = poincare_ci(n, opt.codim);
        provenance_detail = "complete intersection, codim " + std::to_string(opt.codim);
    } else {
        const MonomialIdeal ideal = resolve_ideal(opt.common);
        if (opt.koszul) {
            series = koszul_form(ideal, order);
            provenance_detail = "koszul (quadratic monomial ideal)";
        } else {
            const GolodCertificate cert = golod_certificate(ideal, BettiCaps{6, 64, 100000});
            if (!cert.certified()) {
                if (!opt.force)
                    throw NoCertificate(
                        "no Golod certificate for " + ideal.to_string() +
                        "; pass --force to print CONDITIONAL values");
                conditional = true;
            }
            series = golod_form(ideal);
            provenance_detail = "golod (certificate: " + cert.to_string() +
                                (conditional ? ", CONDITIONAL" : "") + ")";
        }
    }

    const DeviationSequence eps = deviations_from_series(series, order);
    if (opt.common.format == "json") {
        nlohmann::json j = eps.to_json();
        j["closed_form"] = series.closed_form.to_json();
        j["detail"] = provenance_detail;
        if (conditional) j["conditional"] = true;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "closed form: " << series.closed_form.to_string() << "\n"
              << "provenance:  " << provenance_detail << "\n";
    if (conditional)
        std::cout << "CONDITIONAL: values assume the ring is Golod; no certificate found\n";
    std::cout << eps.to_text();
    return kExitOk;
}

struct VerifyOpts {
    std::string suite;
    unsigned vars = 3;
    bool quadratic = false;
    bool exhaustive = false;
    std::size_t sample = 0;
    std::uint64_t seed = 20150917;
    unsigned trunc = 12;
    std::string window = "";
    double tol = -1;
    unsigned max_vertices = 6;
    std::string graph_spec;
    std::string format = "text";
};

std::pair<unsigned, unsigned> parse_window(const std::string& text, unsigned lo_default,
                                           unsigned hi_default) {
    if (text.empty()) return {lo_default, hi_default};
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw InputError("--window expects lo:hi");
    return {static_cast<unsigned>(std::stoul(text.substr(0, colon))),
            static_cast<unsigned>(std::stoul(text.substr(colon + 1)))};
}

Rat tol_to_rat(double tol, const Rat& fallback) {
    if (tol < 0) return fallback;
    // interpret the flag as a decimal with 12 digits
    return Rat(Int(static_cast<long long>(tol * 1e12)), Int(1000000000000LL));
}

int run_verify(const VerifyOpts& opt) {
    CheckReport report;
    if (opt.suite == "lex") {
        std::vector<MonomialIdeal> corpus =
            opt.sample > 0 ? quadratic_ideal_sample(opt.vars, opt.sample, opt.seed)
                           : quadratic_ideal_corpus(opt.vars);
        report = verify_lex(corpus, opt.trunc);
    } else if (opt.suite == "serre") {
        std::vector<MonomialIdeal> corpus =
            opt.sample > 0 ? quadratic_ideal_sample(opt.vars, opt.sample, opt.seed)
                           : quadratic_ideal_corpus(opt.vars);
        report = verify_serre(corpus, std::max(opt.trunc, 16u));
    } else if (opt.suite == "methods") {
        std::vector<MonomialIdeal> corpus =
            opt.sample > 0 ? quadratic_ideal_sample(opt.vars, opt.sample, opt.seed)
                           : quadratic_ideal_corpus(opt.vars);
        report = verify_methods(corpus, std::max(opt.trunc, 16u));
    } else if (opt.suite == "growth") {
        if (!opt.graph_spec.empty()) {
            // single-graph diagnostic, e.g. --graph complete:5
            const auto [wlo, whi] = parse_window(opt.window, 25, 30);
            const HilbertData hd = hilbert_data(edge_ideal(Graph::parse(opt.graph_spec)));
            const GrowthProfile profile = koszul_growth(hd.h_polynomial);
            const DeviationSequence eps = deviations_from_series(
                poincare_koszul(hd, whi), whi);
            const GrowthDiagnostic diag = growth_diagnostic(
                eps, profile, wlo, whi, tol_to_rat(opt.tol, Rat(1, 1000000)));
            report.suite = "growth (" + opt.graph_spec + ")";
            report.checked = 1;
            if (diag.verdict != Verdict::Pass)
                report.fail("diagnostic " + verdict_name(diag.verdict));
            report.notes.push_back(diag.to_text());
        } else {
            const auto [wlo, whi] = parse_window(opt.window, 40, 60);
            report = verify_growth(opt.vars, wlo, whi, tol_to_rat(opt.tol, Rat(1, 10)));
        }
    } else if (opt.suite == "graphgrowth") {
        const auto [wlo, whi] = parse_window(opt.window, 30, 40);
        report = verify_graph_growth(3, 12, 1e-9, wlo, whi,
                                     tol_to_rat(opt.tol, Rat(1, 100)));
    } else if (opt.suite == "sweep") {
        report = verify_graph_sweep(opt.max_vertices);
    } else if (opt.suite == "base") {
        std::vector<MonomialIdeal> corpus =
            opt.sample > 0 ? quadratic_ideal_sample(opt.vars, opt.sample, opt.seed)
                           : quadratic_ideal_corpus(opt.vars);
        report = verify_base_deviations(corpus, opt.trunc);
    } else {
        throw InputError("unknown suite '" + opt.suite +
                         "' (lex|serre|methods|growth|graphgrowth|sweep|base)");
    }
    if (opt.format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.passed() ? kExitOk : kExitViolation;
}

int run_reproduce(const std::string& example, unsigned m, const std::string& format) {
    ReproduceReport report;
    if (example == "r6r8")
        report = reproduce_r6r8();
    else if (example == "remark-eps3")
        report = reproduce_remark_eps3();
    else if (example == "complete-graphs")
        report = reproduce_complete_graphs();
    else if (example == "p4m")
        report = reproduce_p4m(m);
    else if (example == "cycles-paths")
        report = reproduce_cycles_paths();
    else
        throw InputError("unknown example '" + example +
                         "' (r6r8|remark-eps3|complete-graphs|p4m|cycles-paths)");
    if (format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.all_match ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hilbert series, betti numbers, poincare series, and deviation "
                 "sequences of graded algebras presented by monomial ideals"};
    app.require_subcommand(1);
    bool no_header = false;
    app.add_flag("--no-header", no_header, "suppress the timestamp header");

    CommonOpts hilbert_opts;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "K-polynomial, h-polynomial, dimension");
    add_input_flags(hilbert_cmd, hilbert_opts);
    hilbert_cmd->add_option("--format", hilbert_opts.format, "text|json");

    CommonOpts betti_opts;
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers of S/I");
    add_input_flags(betti_cmd, betti_opts);
    betti_cmd->add_option("--format", betti_opts.format, "text|json");

    DeviationOpts dev_opts;
    auto* dev_cmd = app.add_subcommand("deviations", "deviation table from a closed form");
    add_input_flags(dev_cmd, dev_opts.common);
    dev_cmd->add_flag("--golod", dev_opts.golod, "Golod closed form from Betti numbers");
    dev_cmd->add_flag("--koszul", dev_opts.koszul, "Koszul closed form from the h-polynomial");
    dev_cmd->add_flag("--ci", dev_opts.ci, "complete-intersection closed form");
    dev_cmd->add_option("--codim", dev_opts.codim, "codimension for --ci");
    dev_cmd->add_option("--poincare", dev_opts.poincare_text,
                        "rational closed form, e.g. \"1/((z-1)*(z^2-3*z+1))\"");
    dev_cmd->add_option("--trunc", dev_opts.common.trunc, "truncation order (default 32)")
        ->check(CLI::Range(4u, 4096u));
    dev_cmd->add_flag("--force", dev_opts.force, "print CONDITIONAL values without certificate");
    dev_cmd->add_option("--format", dev_opts.common.format, "text|json");

    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "property-verification sweeps");
    verify_cmd->add_option("suite", verify_opts.suite,
                           "lex|serre|methods|growth|graphgrowth|sweep|base")
        ->required();
    verify_cmd->add_option("--vars", verify_opts.vars, "ambient variables (default 3)");
    verify_cmd->add_flag("--quadratic", verify_opts.quadratic, "quadratic corpus (default)");
    verify_cmd->add_flag("--exhaustive", verify_opts.exhaustive, "exhaustive corpus (default)");
    verify_cmd->add_option("--sample", verify_opts.sample, "sample size (0 = exhaustive)");
    verify_cmd->add_option("--seed", verify_opts.seed, "sample seed");
    verify_cmd->add_option("--trunc", verify_opts.trunc, "deviation order for dominance");
    verify_cmd->add_option("--window", verify_opts.window, "diagnostic window lo:hi");
    verify_cmd->add_option("--tol", verify_opts.tol, "diagnostic tolerance");
    verify_cmd->add_option("--max-vertices", verify_opts.max_vertices,
                           "sweep size for suite 'sweep'");
    verify_cmd->add_option("--graph", verify_opts.graph_spec,
                           "single graph for suite 'growth'");
    verify_cmd->add_option("--format", verify_opts.format, "text|json");

    std::string reproduce_example;
    unsigned reproduce_m = 3;
    std::string reproduce_format = "text";
    auto* repro_cmd = app.add_subcommand("reproduce", "bundled example reproductions");
    repro_cmd->add_option("example", reproduce_example,
                          "r6r8|remark-eps3|complete-graphs|p4m|cycles-paths")
        ->required();
    repro_cmd->add_option("--m", reproduce_m, "copy count for p4m (default 3)");
    repro_cmd->add_option("--format", reproduce_format, "text|json");

    unsigned probe_nmax = 6;
    double probe_tol = 1e-8;
    std::string probe_format = "text";
    auto* probe_cmd = app.add_subcommand("probe", "minimum-modulus root sweep (evidence only)");
    probe_cmd->add_option("--nmax", probe_nmax, "max vertex count (default 6, cap 7)");
    probe_cmd->add_option("--tol", probe_tol, "relative tie tolerance (default 1e-8)");
    probe_cmd->add_option("--format", probe_format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hilbert_cmd->parsed()) {
            print_header(no_header, "hilbert");
            return run_hilbert(hilbert_opts);
        }
        if (betti_cmd->parsed()) {
            print_header(no_header, "betti");
            return run_betti(betti_opts);
        }
        if (dev_cmd->parsed()) {
            print_header(no_header, "deviations");
            return run_deviations(dev_opts);
        }
        if (verify_cmd->parsed()) {
            print_header(no_header, "verify " + verify_opts.suite);
            return run_verify(verify_opts);
        }
        if (repro_cmd->parsed()) {
            print_header(no_header, "reproduce " + reproduce_example);
            return run_reproduce(reproduce_example, reproduce_m, reproduce_format);
        }
        if (probe_cmd->parsed()) {
            print_header(no_header, "probe");
            const ProbeReport report = question58_probe(probe_nmax, probe_tol);
            if (probe_format == "json")
                std::cout << report.to_json().dump(2) << "\n";
            else
                std::cout << report.to_text();
            return kExitOk; // non-failing by design
        }
    } catch (const ResourceCap& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NoCertificate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitInput;
}
