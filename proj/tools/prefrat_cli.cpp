// prefrat: analyze/verify/generate/experiment front end for the solver library.
//
// Exit codes: 0 success (verify: consistent), 1 verify found the profile
// inconsistent, 2 usage, parse, or invariant errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "prefrat/halfint.hpp"
#include "prefrat/integral.hpp"
#include "prefrat/matrix.hpp"
#include "prefrat/oracle.hpp"
#include "prefrat/profile.hpp"

using namespace prefrat;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

PreferenceMatrix load_matrix(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    bool csv = format == "csv" ||
               (format.empty() && path.size() > 4 &&
                path.compare(path.size() - 4, 4, ".csv") == 0);
    return csv ? PreferenceMatrix::parse_csv(text) : PreferenceMatrix::parse_json(text);
}

const char* class_name(MatrixClass c) {
    switch (c) {
        case MatrixClass::Integral: return "integral";
        case MatrixClass::HalfIntegral: return "half-integral";
        default: return "general";
    }
}

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

int run_analyze(const std::string& input, const std::string& output,
                const std::string& format, int exact_limit) {
    PreferenceMatrix m = load_matrix(input, format == "csv" ? "csv" : "");
    RationalityResult r = rationality_number(m, exact_limit);
    VotingGraph d = voting_graph(m);
    UnanimityGraph g = unanimity_graph(m);

    std::cout << "class=" << class_name(r.matrix_class) << '\n';
    std::cout << "n=" << m.n() << " voting_arcs=" << d.arcs.size()
              << " unanimity_edges=" << g.edges.size()
              << " voting_acyclic=" << (d.is_acyclic() ? "yes" : "no") << '\n';
    if (r.exact)
        std::cout << "alpha=" << r.upper << '\n';
    else
        std::cout << "alpha in [" << r.lower << "," << r.upper << "]\n";
    std::cout << "method=" << r.method << '\n';
    if (r.certificate) {
        std::cout << "certificate=" << r.certificate->size() << " voter"
                  << (r.certificate->size() == 1 ? "" : "s") << " width="
                  << profile_width(*r.certificate) << '\n';
        if (!output.empty() && format != "dot")
            write_file(output, r.certificate->to_json());
    } else {
        std::cout << "certificate=none\n";
    }
    if (!output.empty() && format == "dot") write_file(output, d.to_dot());
    return 0;
}

int run_verify(const std::string& input, const std::string& profile_path,
               const std::string& output) {
    PreferenceMatrix m = load_matrix(input, "");
    VoterProfile v = VoterProfile::parse_json(read_file(profile_path));
    ConsistencyReport report = check_consistency(v, m);
    std::cout << (report.consistent ? "consistent" : "inconsistent")
              << " voters=" << v.size() << " width=" << profile_width(v) << '\n';
    for (const Violation& viol : report.violations)
        std::cout << "violation (" << viol.i << "," << viol.j << ") "
                  << (viol.side == ViolationSide::Upper ? "upper" : "lower")
                  << ": strong=" << viol.strong_fraction.str()
                  << " p=" << viol.p_ij.str()
                  << " weak=" << viol.weak_fraction.str() << '\n';
    if (!output.empty()) write_file(output, report.to_json());
    return report.consistent ? 0 : 1;
}

int run_generate(const std::string& kind, int n, int k, std::uint64_t seed,
                 const std::string& output, const std::string& format) {
    PreferenceMatrix m = kind == "tournament"
                             ? random_tournament(n, seed).to_matrix()
                             : random_lower_bound_instance(n, k, seed);
    std::string text = format == "csv" ? m.to_csv() : m.to_json();
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
    return 0;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& spec) {
    std::size_t dots = spec.find("..");
    if (dots == std::string::npos) {
        std::uint64_t s = std::stoull(spec);
        return {s, s};
    }
    std::uint64_t lo = std::stoull(spec.substr(0, dots));
    std::uint64_t hi = std::stoull(spec.substr(dots + 2));
    if (hi < lo) throw ParseError("empty seed range " + spec);
    return {lo, hi};
}

int run_experiment(const std::string& name, int n, int k, int s,
                   std::int64_t budget, const std::string& seeds,
                   int exact_limit, const std::string& output) {
    auto [lo, hi] = parse_seed_range(seeds);
    std::ostringstream csv;
    if (name == "triangle-property") {
        csv << "n,k,s,outcome,samples,seed\n";
        for (std::uint64_t seed = lo; seed <= hi; ++seed) {
            PreferenceMatrix m = random_lower_bound_instance(n, k, seed);
            TriangleCheck check = verify_triangle_property(voting_graph(m), s, budget, seed);
            const char* outcome = check.outcome == TriangleOutcome::Proved ? "proved"
                                  : check.outcome == TriangleOutcome::Refuted
                                      ? "refuted"
                                      : "sampled_ok";
            csv << n << ',' << k << ',' << s << ',' << outcome << ','
                << check.subsets_checked << ',' << seed << '\n';
        }
    } else { // greedy-bound and max-acyclic share the row schema
        csv << "n,seed,exact_k,greedy_k,max_acyclic,bound_3n_log,bound_n_over_2logn1\n";
        double log2n = std::log2(static_cast<double>(n));
        for (std::uint64_t seed = lo; seed <= hi; ++seed) {
            Tournament t = random_tournament(n, seed);
            Dicoloring greedy = greedy_dicoloring(t);
            std::string exact_k = "-";
            if (n <= exact_limit)
                exact_k = std::to_string(dichromatic_number_exact(t, exact_limit).k);
            MaxAcyclicResult acyc = max_acyclic_subset(t);
            csv << n << ',' << seed << ',' << exact_k << ',' << greedy.classes.size()
                << ',' << acyc.size << ',' << fixed4(3.0 * n / log2n) << ','
                << fixed4(n / (2.0 * log2n + 1.0)) << '\n';
        }
    }
    if (output.empty())
        std::cout << csv.str();
    else
        write_file(output, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rationality-number solver for preference matrices"};
    app.require_subcommand(1);

    std::string input, profile_path, output, format, kind, name;
    std::string seeds = "1..20";
    std::uint64_t seed = 1;
    int n = 0, k = 2, s = 3, exact_limit = 20;
    std::int64_t budget = 100000;

    CLI::App* analyze = app.add_subcommand("analyze", "classify and solve a matrix");
    analyze->add_option("--input", input, "matrix file (JSON or CSV)")->required();
    analyze->add_option("--output", output, "certificate profile path (or DOT with --format dot)");
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "dot"}));
    analyze->add_option("--exact-limit", exact_limit, "largest n solved exactly");

    CLI::App* verify = app.add_subcommand("verify", "check a profile against a matrix");
    verify->add_option("--input", input, "matrix file")->required();
    verify->add_option("--profile", profile_path, "profile JSON")->required();
    verify->add_option("--output", output, "consistency report JSON path");

    CLI::App* generate = app.add_subcommand("generate", "random instance generators");
    generate->add_option("kind", kind)->check(CLI::IsMember({"tournament", "kpartite"}))
        ->required();
    generate->add_option("--n", n, "candidate count")->required();
    generate->add_option("--k", k, "part count (kpartite)");
    generate->add_option("--seed", seed);
    generate->add_option("--output", output, "matrix path (stdout if omitted)");
    generate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* experiment = app.add_subcommand("experiment", "seeded experiment sweeps");
    experiment->add_option("name", name)
        ->check(CLI::IsMember({"greedy-bound", "max-acyclic", "triangle-property"}))
        ->required();
    experiment->add_option("--n", n, "candidate count")->required();
    experiment->add_option("--k", k, "part count (triangle-property)");
    experiment->add_option("--s", s, "subset size (triangle-property)");
    experiment->add_option("--budget", budget, "Monte Carlo sample budget");
    experiment->add_option("--seeds", seeds, "seed or range lo..hi");
    experiment->add_option("--exact-limit", exact_limit, "largest n solved exactly");
    experiment->add_option("--output", output, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(input, output, format, exact_limit);
        if (*verify) return run_verify(input, profile_path, output);
        if (*generate) return run_generate(kind, n, k, seed, output, format);
        if (*experiment)
            return run_experiment(name, n, k, s, budget, seeds, exact_limit, output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
