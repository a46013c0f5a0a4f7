#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include "lsseq/counts.hpp"
#include "lsseq/csv.hpp"
#include "lsseq/discrepancy.hpp"
#include "lsseq/generators.hpp"
#include "lsseq/ls_sequence.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/qmc.hpp"
#include "lsseq/svg.hpp"

namespace lsseq::cli {

namespace {

// ---------------------------------------------------------------- helpers

LSParams parse_ls(const std::string& text, const char* flag) {
    int l = 0;
    int s = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%d%c", &l, &s, &extra) != 2) {
        throw std::domain_error(std::string(flag) + ": expected L,S, got '" + text + "'");
    }
    return solve_beta(l, s);
}

std::pair<LSParams, LSParams> parse_ls_pair(const std::string& text) {
    int l1 = 0, s1 = 0, l2 = 0, s2 = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%dx%d,%d%c", &l1, &s1, &l2, &s2, &extra) != 4) {
        throw std::domain_error("--ls-halton: expected L1,S1xL2,S2, got '" + text + "'");
    }
    return {solve_beta(l1, s1), solve_beta(l2, s2)};
}

std::vector<std::uint32_t> parse_bases(const std::string& text) {
    std::vector<std::uint32_t> bases;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        bases.push_back(static_cast<std::uint32_t>(std::stoul(field)));
    }
    return bases;
}

// Writes through a temporary ostringstream so the file appears atomically
// and the bytes do not depend on stream state.
void write_output(const std::string& path, const std::string& payload,
                  std::ostream& out) {
    if (path == "-" || path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    file << payload;
}

struct GeneratorOptions {
    bool vdc2d = false;
    bool hammersley2 = false;
    bool rng = false;
    std::string halton_spec;
    std::string ls_vdc_spec;
    std::string ls_halton_spec;
    bool allow_non_coprime = false;
    std::uint64_t seed = kDefaultRngSeed;

    void add_to(CLI::App* sub) {
        sub->add_flag("--vdc", vdc2d, "van der Corput set (n/N, phi_2(n))");
        sub->add_flag("--hammersley", hammersley2, "2D Hammersley set (same as --vdc)");
        sub->add_option("--halton", halton_spec, "Halton bases, e.g. 2,3");
        sub->add_option("--ls-vdc", ls_vdc_spec, "LS 'a la van der Corput', e.g. 3,1");
        sub->add_option("--ls-halton", ls_halton_spec,
                        "pair of LS sequences, e.g. 3,1x4,1");
        sub->add_flag("--rng", rng, "seeded xorshift64* baseline");
        sub->add_flag("--allow-non-coprime", allow_non_coprime,
                      "accept Halton bases sharing a factor");
        sub->add_option("--seed", seed, "seed for --rng");
    }

    std::optional<Generator2DSpec> selected() const {
        std::vector<Generator2DSpec> chosen;
        Generator2DSpec spec;
        if (vdc2d) {
            spec.kind = Generator2DSpec::Kind::vdc;
            chosen.push_back(spec);
        }
        if (hammersley2) {
            spec.kind = Generator2DSpec::Kind::hammersley;
            chosen.push_back(spec);
        }
        if (!halton_spec.empty()) {
            spec.kind = Generator2DSpec::Kind::halton;
            spec.bases = parse_bases(halton_spec);
            spec.allow_non_coprime = allow_non_coprime;
            chosen.push_back(spec);
        }
        if (!ls_vdc_spec.empty()) {
            spec.kind = Generator2DSpec::Kind::ls_vdc;
            spec.ls_x = parse_ls(ls_vdc_spec, "--ls-vdc");
            chosen.push_back(spec);
        }
        if (!ls_halton_spec.empty()) {
            spec.kind = Generator2DSpec::Kind::ls_halton;
            std::tie(spec.ls_x, spec.ls_y) = parse_ls_pair(ls_halton_spec);
            chosen.push_back(spec);
        }
        if (rng) {
            spec.kind = Generator2DSpec::Kind::rng;
            spec.seed = seed;
            chosen.push_back(spec);
        }
        if (chosen.size() > 1) {
            throw std::domain_error("choose exactly one 2D generator");
        }
        if (chosen.empty()) {
            return std::nullopt;
        }
        return chosen.front();
    }
};

std::string csv_quote(const std::string& s) {
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// ------------------------------------------------------------ subcommands

struct PointsCmd {
    std::string ls_spec;
    std::size_t count = 8;
    std::string algo = "auto";
    std::string output = "-";

    int run(std::ostream& out) const {
        const LSParams params = parse_ls(ls_spec, "--ls");
        LSPointSeq seq;
        if (algo == "auto") {
            seq = ls_points(params, count);
        } else if (algo == "fast") {
            seq = fast_points(params, count);
        } else if (algo == "direct") {
            seq = direct_enumeration(params, count);
        } else if (algo == "block") {
            int depth = 0;
            while (counts(params, depth).total < count) {
                ++depth;
            }
            seq = block_points(params, depth);
            seq.points.resize(count);
        } else {
            throw std::domain_error("--algo must be auto, fast, block or direct");
        }
        PointSet1D set{std::move(seq.points), "LS(" + std::to_string(params.L) + "," +
                                                  std::to_string(params.S) + ")"};
        std::ostringstream payload;
        write_csv(payload, set);
        write_output(output, payload.str(), out);
        return 0;
    }
};

struct PartitionCmd {
    std::string ls_spec;
    double kakutani_alpha = 0.0;
    bool has_kakutani = false;
    int depth = 1;
    std::size_t cap = kDefaultPartitionCap;
    std::string output = "-";

    int run(std::ostream& out) const {
        Partition pi;
        if (!ls_spec.empty() && has_kakutani) {
            throw std::domain_error("choose either --ls or --kakutani");
        }
        if (!ls_spec.empty()) {
            pi = ls_partition(parse_ls(ls_spec, "--ls"), depth, cap);
        } else if (has_kakutani) {
            pi = kakutani_partition(kakutani_alpha, depth, cap);
        } else {
            throw std::domain_error("choose --ls L,S or --kakutani ALPHA");
        }
        std::ostringstream payload;
        write_partition_csv(payload, pi);
        write_output(output, payload.str(), out);
        return 0;
    }
};

struct Points2DCmd {
    GeneratorOptions gen;
    std::size_t count = 100;
    bool open_right = false;
    std::string output = "-";

    int run(std::ostream& out) const {
        const auto spec = gen.selected();
        if (!spec) {
            throw std::domain_error("choose a 2D generator");
        }
        const PointSet2D pts =
            spec->make(count, open_right ? IndexBase::zero : IndexBase::one);
        std::ostringstream payload;
        write_csv(payload, pts);
        write_output(output, payload.str(), out);
        return 0;
    }
};

struct ScatterCmd {
    GeneratorOptions gen;
    std::size_t count = 5000;
    bool open_right = false;
    std::string output = "scatter.svg";

    int run(std::ostream& out) const {
        const auto spec = gen.selected();
        if (!spec) {
            throw std::domain_error("choose a 2D generator");
        }
        const PointSet2D pts =
            spec->make(count, open_right ? IndexBase::zero : IndexBase::one);
        write_output(output, scatter_svg(pts), out);
        return 0;
    }
};

struct DiscrepancyCmd {
    std::string input;
    std::string ls_spec;
    bool vdc1d = false;
    double kron_theta = 0.0;
    bool has_kron = false;
    GeneratorOptions gen;
    std::size_t count = 100;
    bool oracle = false;
    bool open_right = false;
    std::string format = "text";
    std::string output = "-";

    static constexpr std::size_t kOracleCap1D = 8192;
    static constexpr std::size_t kOracleCap2D = 4096;

    int run(std::ostream& out) const {
        std::optional<PointSet1D> set1d;
        std::optional<PointSet2D> set2d;
        const auto spec2d = gen.selected();

        int sources = (!input.empty()) + (!ls_spec.empty()) + vdc1d + has_kron +
                      spec2d.has_value();
        if (sources != 1) {
            throw std::domain_error(
                "choose exactly one source: --input, --ls, --vdc1d, --kronecker "
                "or a 2D generator");
        }
        if (!input.empty()) {
            std::ifstream file(input);
            if (!file) {
                throw std::runtime_error("cannot open input file '" + input + "'");
            }
            const CsvPoints data = read_points_csv(file);
            if (data.dim == 1) {
                set1d = PointSet1D{data.xs, input};
            } else {
                bool boundary = false;
                for (double x : data.xs) {
                    boundary = boundary || (x == 1.0);
                }
                set2d = PointSet2D{data.xs, data.ys, input, boundary};
            }
        } else if (!ls_spec.empty()) {
            const LSParams params = parse_ls(ls_spec, "--ls");
            set1d = PointSet1D{ls_points(params, count).points,
                               "LS(" + std::to_string(params.L) + "," +
                                   std::to_string(params.S) + ")"};
        } else if (vdc1d) {
            set1d = van_der_corput(count);
        } else if (has_kron) {
            set1d = kronecker(kron_theta, count);
        } else {
            set2d = spec2d->make(count, open_right ? IndexBase::zero : IndexBase::one);
        }

        DiscrepancyReport star;
        std::optional<DiscrepancyReport> extreme;
        if (set1d) {
            if (oracle && set1d->size() > kOracleCap1D) {
                throw std::domain_error("--oracle is capped at 8192 points in 1D");
            }
            star = oracle ? naive::star_1d(set1d->xs) : star_discrepancy_1d(*set1d);
            extreme =
                oracle ? naive::extreme_1d(set1d->xs) : extreme_discrepancy_1d(*set1d);
        } else {
            if (oracle && set2d->size() > kOracleCap2D) {
                throw std::domain_error("--oracle is capped at 4096 points in 2D");
            }
            star = oracle ? naive::star_2d(*set2d) : star_discrepancy_2d(*set2d);
        }

        std::ostringstream payload;
        if (format == "csv") {
            payload << "n,d_star,d_extreme,witness_star,witness_extreme,mode\n";
            payload << star.count << ',' << format_sig17(*star.d_star) << ',';
            if (extreme) {
                payload << format_sig17(*extreme->d_extreme);
            }
            payload << ',' << csv_quote(format_witness(star.witness)) << ',';
            if (extreme) {
                payload << csv_quote(format_witness(extreme->witness));
            } else {
                payload << "\"\"";
            }
            payload << ',' << (oracle ? "oracle" : "exact") << '\n';
        } else if (format == "text") {
            payload << "points: " << star.count << '\n';
            payload << "d_star: " << format_sig17(*star.d_star) << '\n';
            payload << "witness_star: " << format_witness(star.witness) << '\n';
            if (extreme) {
                payload << "d_extreme: " << format_sig17(*extreme->d_extreme) << '\n';
                payload << "witness_extreme: " << format_witness(extreme->witness)
                        << '\n';
            }
            payload << "mode: " << (oracle ? "oracle" : "exact") << '\n';
        } else {
            throw std::domain_error("--format must be text or csv");
        }
        write_output(output, payload.str(), out);
        return 0;
    }
};

struct IntegrateCmd {
    GeneratorOptions gen;
    std::string integrand = "poly23";
    std::size_t count = 1000;
    std::vector<std::size_t> grid;
    bool open_right = false;
    std::string output = "-";

    int run(std::ostream& out) const {
        const auto spec = gen.selected();
        if (!spec) {
            throw std::domain_error("choose a 2D generator");
        }
        const Integrand2D* f = find_integrand(integrand);
        if (f == nullptr) {
            std::string names;
            for (const std::string& n : integrand_names()) {
                names += (names.empty() ? "" : ", ") + n;
            }
            throw std::domain_error("unknown integrand '" + integrand +
                                    "' (available: " + names + ")");
        }
        const IndexBase base = open_right ? IndexBase::zero : IndexBase::one;
        std::ostringstream payload;
        if (!grid.empty()) {
            payload << "n,estimate,abs_error,n_error_over_log_n\n";
            for (const ConvergenceRow& row : convergence_study(*spec, *f, grid, base)) {
                payload << row.count << ',' << format_sig17(row.estimate) << ','
                        << format_sig17(row.abs_error) << ','
                        << format_sig17(row.scaled_error) << '\n';
            }
        } else {
            const EstimateRow row = estimate(spec->make(count, base), *f);
            payload << "generator,integrand,n,estimate,abs_error\n";
            payload << csv_quote(row.generator) << ',' << f->name << ',' << row.count
                    << ',' << format_sig17(row.estimate) << ',';
            if (row.abs_error) {
                payload << format_sig17(*row.abs_error);
            }
            payload << '\n';
        }
        write_output(output, payload.str(), out);
        return 0;
    }
};

struct Table31Cmd {
    std::vector<std::size_t> grid;
    std::string convention = "zero-based";
    std::uint64_t seed = kDefaultRngSeed;
    std::string output = "-";

    int run(std::ostream& out, std::ostream& err) const {
        IndexBase base;
        if (convention == "zero-based") {
            base = IndexBase::zero;
        } else if (convention == "one-based") {
            base = IndexBase::one;
        } else {
            throw std::domain_error("--convention must be zero-based or one-based");
        }
        const std::vector<Table31Cell> cells = table31(grid, base, seed);
        std::ostringstream payload;
        payload << "generator,n,estimate,reference,deviation\n";
        std::size_t misses = 0;
        std::size_t compared = 0;
        for (const Table31Cell& cell : cells) {
            payload << csv_quote(cell.generator) << ',' << cell.count << ','
                    << format_sig17(cell.estimate) << ',';
            if (cell.reference) {
                payload << format_sig17(*cell.reference);
            }
            payload << ',';
            if (cell.deviation) {
                payload << format_sig17(*cell.deviation);
                ++compared;
                if (*cell.deviation > kTable31Gate) {
                    ++misses;
                }
            }
            payload << '\n';
        }
        write_output(output, payload.str(), out);
        err << "convention: " << convention << "; " << compared
            << " cells compared, " << misses << " above the 5e-3 gate\n";
        return misses == 0 ? 0 : 2;
    }
};

struct CountsCmd {
    std::string ls_spec;
    int depth = 10;
    std::string output = "-";

    int run(std::ostream& out) const {
        const LSParams params = parse_ls(ls_spec, "--ls");
        std::ostringstream payload;
        payload << "n,t,l,s\n";
        for (int n = 0; n <= depth; ++n) {
            const CountTriple c = counts(params, n);
            payload << n << ',' << c.total << ',' << c.longs << ',' << c.shorts << '\n';
        }
        write_output(output, payload.str(), out);
        return 0;
    }
};

// ------------------------------------------------------------- config file

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line without '=': " + line);
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "config") {
            continue;
        }
        if (value == "true" || value == "yes" || value == "1") {
            tokens.push_back("--" + key);
        } else if (value == "false" || value == "no" || value == "0") {
            // flags default to off; nothing to override
        } else {
            tokens.push_back("--" + key);
            tokens.push_back(value);
        }
    }
    return tokens;
}

// Splices config key=value pairs in as trailing options (options take the
// last occurrence, so the config overrides earlier flags).
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (!path.empty()) {
        for (std::string& token : config_tokens(path)) {
            args.push_back(std::move(token));
        }
    }
    return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"LS sequences, low-discrepancy point sets and QMC diagnostics"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    PointsCmd points;
    auto* points_sub = app.add_subcommand("points", "LS point sequence to CSV");
    points_sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    points_sub->add_option("--ls", points.ls_spec, "LS parameters L,S")->required();
    points_sub->add_option("-n,--count", points.count, "number of points");
    points_sub->add_option("--algo", points.algo, "auto|fast|block|direct");
    points_sub->add_option("-o,--output", points.output, "output file (- = stdout)");

    PartitionCmd partition;
    auto* partition_sub = app.add_subcommand("partition", "refined partition to CSV");
    partition_sub->option_defaults()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeLast);
    partition_sub->add_option("--ls", partition.ls_spec, "LS parameters L,S");
    partition_sub->add_option("--kakutani", partition.kakutani_alpha,
                              "alpha in (0,1)");
    partition_sub->add_option("--depth", partition.depth, "refinement depth");
    partition_sub->add_option("--cap", partition.cap, "interval-count cap");
    partition_sub->add_option("-o,--output", partition.output, "output file");

    Points2DCmd points2d;
    auto* points2d_sub = app.add_subcommand("points2d", "2D point set to CSV");
    points2d_sub->option_defaults()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeLast);
    points2d.gen.add_to(points2d_sub);
    points2d_sub->add_option("-n,--count", points2d.count, "number of points");
    points2d_sub->add_flag("--open-right", points2d.open_right,
                           "zero-based indexing, x stays below 1");
    points2d_sub->add_option("-o,--output", points2d.output, "output file");

    ScatterCmd scatter;
    auto* scatter_sub = app.add_subcommand("scatter", "2D point set to SVG");
    scatter_sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    scatter.gen.add_to(scatter_sub);
    scatter_sub->add_option("-n,--count", scatter.count, "number of points");
    scatter_sub->add_flag("--open-right", scatter.open_right,
                          "zero-based indexing, x stays below 1");
    scatter_sub->add_option("-o,--output", scatter.output, "output SVG file");

    DiscrepancyCmd discrepancy;
    auto* disc_sub = app.add_subcommand("discrepancy", "discrepancy report");
    disc_sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    disc_sub->add_option("--input", discrepancy.input, "point CSV file");
    disc_sub->add_option("--ls", discrepancy.ls_spec, "LS parameters L,S (1D)");
    disc_sub->add_flag("--vdc1d", discrepancy.vdc1d, "van der Corput sequence (1D)");
    disc_sub->add_option("--kronecker", discrepancy.kron_theta, "theta (1D)");
    discrepancy.gen.add_to(disc_sub);
    disc_sub->add_option("-n,--count", discrepancy.count, "number of points");
    disc_sub->add_flag("--oracle", discrepancy.oracle, "brute-force reference mode");
    disc_sub->add_flag("--open-right", discrepancy.open_right,
                       "zero-based indexing for generators");
    disc_sub->add_option("--format", discrepancy.format, "text|csv");
    disc_sub->add_option("-o,--output", discrepancy.output, "output file");

    IntegrateCmd integrate;
    auto* integrate_sub = app.add_subcommand("integrate", "QMC integral estimate");
    integrate_sub->option_defaults()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeLast);
    integrate.gen.add_to(integrate_sub);
    integrate_sub->add_option("-f,--integrand", integrate.integrand,
                              "integrand name (poly23, const1, cosprod, quadrant)");
    integrate_sub->add_option("-n,--count", integrate.count, "number of points");
    integrate_sub->add_option("--Ns", integrate.grid,
                              "ascending N grid for a convergence study")
        ->delimiter(',');
    integrate_sub->add_flag("--open-right", integrate.open_right,
                            "zero-based indexing");
    integrate_sub->add_option("-o,--output", integrate.output, "output file");

    Table31Cmd table;
    auto* table_sub =
        app.add_subcommand("table31", "reference integral-estimate comparison");
    table_sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    table_sub->add_option("--Ns", table.grid, "N values (default 100,500,1000,2000)")
        ->delimiter(',');
    table_sub->add_option("--convention", table.convention,
                          "zero-based (reproduces the reference) or one-based");
    table_sub->add_option("--seed", table.seed, "seed for the RNG baseline column");
    table_sub->add_option("-o,--output", table.output, "output file");

    CountsCmd counts_cmd;
    auto* counts_sub = app.add_subcommand("counts", "interval census recurrences");
    counts_sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    counts_sub->add_option("--ls", counts_cmd.ls_spec, "LS parameters L,S")->required();
    counts_sub->add_option("-n,--depth", counts_cmd.depth, "maximum depth");
    counts_sub->add_option("-o,--output", counts_cmd.output, "output file");

    // --config FILE with key=value lines; accepted by every subcommand and
    // applied after the flags, overriding them. The value itself is consumed
    // before parsing, so the option only documents the flag.
    static std::string config_sink;
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->add_option("--config", config_sink, "key=value file overriding flags");
    }

    std::vector<std::string> args;
    try {
        args = apply_config(raw_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        std::vector<const char*> argv;
        argv.push_back("lsseq");
        for (const std::string& a : args) {
            argv.push_back(a.c_str());
        }
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (points_sub->parsed()) {
            return points.run(out);
        }
        if (partition_sub->parsed()) {
            partition.has_kakutani = partition_sub->count("--kakutani") > 0;
            return partition.run(out);
        }
        if (points2d_sub->parsed()) {
            return points2d.run(out);
        }
        if (scatter_sub->parsed()) {
            return scatter.run(out);
        }
        if (disc_sub->parsed()) {
            discrepancy.has_kron = disc_sub->count("--kronecker") > 0;
            return discrepancy.run(out);
        }
        if (integrate_sub->parsed()) {
            return integrate.run(out);
        }
        if (table_sub->parsed()) {
            return table.run(out, err);
        }
        if (counts_sub->parsed()) {
            return counts_cmd.run(out);
        }
        err << "error: no subcommand\n";
        return 1;
    } catch (const csv_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace lsseq::cli
