// Command-line surface for the whirl engine: family enumeration, orbit
// boards, homomesy reports, certificates, parking bijections and conjecture
// sweeps.  All structured output goes to stdout; diagnostics go to stderr.
// Exit status: 0 on success, 1 on usage or validation errors, 2 when a sweep
// reports a counterexample.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "whirl/report_io.hpp"

using namespace whirl;

namespace {

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = 20250809;
    std::uint64_t size_limit = 0;  // 0: keep defaults / env override
};

EnumerationLimits limits_from(const GlobalOptions& opts) {
    EnumerationLimits limits;
    if (const char* env = std::getenv("WHIRL_SIZE_LIMIT")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) limits.max_census = v;
    }
    if (opts.size_limit > 0) limits.max_census = opts.size_limit;
    return limits;
}

void emit(const GlobalOptions& opts, const std::string& text, const Json& json,
          const std::string& csv = {}) {
    if (opts.format == "json") {
        std::cout << json.dump(2) << '\n';
    } else if (opts.format == "csv") {
        if (csv.empty()) throw ParseError("no csv form for this subcommand");
        std::cout << csv;
    } else {
        std::cout << text;
    }
}

int count_entries(const std::string& word_text) {
    if (word_text.find(',') != std::string::npos)
        return 1 + static_cast<int>(std::count(word_text.begin(), word_text.end(), ','));
    return static_cast<int>(word_text.size());
}

void add_format_option(CLI::App* cmd, GlobalOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"whirl dynamics on families of functions between finite ordered sets"};
    app.require_subcommand(1);
    GlobalOptions opts;

    std::string family_text, word_text, order_text = "id", stat_text, kind_text, sweep_name;
    int max_n = 6, max_k = 12, random_orders = 10, toggle_n = 4, toggle_r = 1;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a family in lexicographic order");
    enumerate->add_option("family", family_text, "family descriptor")->required();
    add_format_option(enumerate, opts);
    enumerate->add_option("--size-limit", opts.size_limit, "census ceiling override");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "print the orbit board of a word");
    orbit_cmd->add_option("family", family_text)->required();
    orbit_cmd->add_option("word", word_text)->required();
    orbit_cmd->add_option("--order", order_text, "whirl order")->capture_default_str();
    add_format_option(orbit_cmd, opts);

    CLI::App* partition = app.add_subcommand("partition", "orbit partition of a family");
    partition->add_option("family", family_text)->required();
    partition->add_option("--order", order_text)->capture_default_str();
    add_format_option(partition, opts);
    partition->add_option("--size-limit", opts.size_limit);

    CLI::App* homomesy = app.add_subcommand("homomesy", "exact orbit averages of a statistic");
    homomesy->add_option("family", family_text)->required();
    homomesy->add_option("statistic", stat_text, "statistic descriptor")->required();
    homomesy->add_option("--order", order_text)->capture_default_str();
    add_format_option(homomesy, opts);
    homomesy->add_option("--size-limit", opts.size_limit);

    CLI::App* sweep = app.add_subcommand("sweep", "conjecture sweep; exit 2 on counterexample");
    sweep->add_option("conjecture", sweep_name, "surm | rgnc | divisibility")
        ->required()
        ->check(CLI::IsMember({"surm", "rgnc", "divisibility"}));
    sweep->add_option("--max-n", max_n, "largest domain size")->capture_default_str();
    sweep->add_option("--max-k", max_k, "largest codomain size (divisibility sweep)")
        ->capture_default_str();
    sweep->add_option("--orders", random_orders, "random orders per instance")
        ->capture_default_str();
    sweep->add_option("--seed", opts.seed, "random order seed")->capture_default_str();
    add_format_option(sweep, opts);
    sweep->add_option("--size-limit", opts.size_limit);

    CLI::App* park_factor =
        app.add_subcommand("park-factor", "transposition factorization of a parking word");
    park_factor->add_option("word", word_text)->required();
    add_format_option(park_factor, opts);

    CLI::App* park_tree =
        app.add_subcommand("park-tree", "noncrossing labeled tree of a parking word");
    park_tree->add_option("word", word_text)->required();
    add_format_option(park_tree, opts);

    CLI::App* certify = app.add_subcommand("certify", "build and verify an orbit certificate");
    certify->add_option("family", family_text)->required();
    certify->add_option("word", word_text)->required();
    certify->add_option("--kind", kind_text, "chunks | redlights | snakes")
        ->required()
        ->check(CLI::IsMember({"chunks", "redlights", "snakes"}));
    certify->add_option("--order", order_text)->capture_default_str();
    add_format_option(certify, opts);

    CLI::App* toggle = app.add_subcommand("toggle-check", "cardinality averages of band toggles");
    toggle->add_option("--n", toggle_n, "ground set size")->required();
    toggle->add_option("--r", toggle_r, "band radius")->required();
    toggle->add_option("--order", order_text)->capture_default_str();
    add_format_option(toggle, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        EnumerationLimits limits = limits_from(opts);

        if (*enumerate) {
            FamilySpec family = FamilySpec::parse(family_text);
            FamilyCensus census = enumerate_family(family, limits);
            emit(opts, census_text(census), to_json(census), census_csv(census));
        } else if (*orbit_cmd) {
            FamilySpec family = FamilySpec::parse(family_text);
            FunctionWord word = FunctionWord::parse(word_text, family.n(), family.k());
            WhirlOrder order = WhirlOrder::parse(order_text, family.n());
            OrbitBoard board(orbit_of(family, word, order), word);
            emit(opts, board_text(board), to_json(board));
        } else if (*partition) {
            FamilySpec family = FamilySpec::parse(family_text);
            WhirlOrder order = WhirlOrder::parse(order_text, family.n());
            auto orbits = orbit_partition(family, order, limits);
            emit(opts, partition_text(orbits, family, order), to_json(orbits),
                 partition_csv(orbits));
        } else if (*homomesy) {
            FamilySpec family = FamilySpec::parse(family_text);
            WhirlOrder order = WhirlOrder::parse(order_text, family.n());
            StatisticSpec stat = StatisticSpec::parse(stat_text);
            HomomesyReport report = check_homomesy(family, order, stat, limits);
            emit(opts, homomesy_text(report), to_json(report), homomesy_csv(report));
        } else if (*sweep) {
            SweepReport report;
            if (sweep_name == "surm") {
                report = sweep_surm(max_n, limits);
            } else if (sweep_name == "rgnc") {
                report = sweep_rgnc(max_n, random_orders, opts.seed, limits);
            } else {
                report = sweep_injsur(max_n, max_k, random_orders, opts.seed, limits);
            }
            emit(opts, sweep_text(report), to_json(report));
            if (!report.clean()) return 2;
        } else if (*park_factor) {
            int n = count_entries(word_text);
            FunctionWord word = FunctionWord::parse(word_text, n, n);
            TranspositionFactorization fac = park_to_factorization(word);
            emit(opts, fac.str() + "\n", to_json(fac));
        } else if (*park_tree) {
            int n = count_entries(word_text);
            FunctionWord word = FunctionWord::parse(word_text, n, n);
            LabeledTree tree = factorization_to_tree(park_to_factorization(word));
            emit(opts, tree_text(tree), to_json(tree));
        } else if (*certify) {
            FamilySpec family = FamilySpec::parse(family_text);
            FunctionWord word = FunctionWord::parse(word_text, family.n(), family.k());
            WhirlOrder order = WhirlOrder::parse(order_text, family.n());
            auto board =
                std::make_shared<const OrbitBoard>(orbit_of(family, word, order), word);
            if (kind_text == "chunks") {
                ChunkPartition cert = build_chunk_partition(board);
                std::string why;
                if (!verify_chunk_partition(cert, &why)) throw Error("verification failed: " + why);
                emit(opts, chunk_text(cert), to_json(cert));
            } else if (kind_text == "redlights") {
                RedLightCycles cert = build_red_light_cycles(board);
                std::string why;
                if (!verify_red_light_cycles(cert, &why))
                    throw Error("verification failed: " + why);
                emit(opts, red_light_text(cert), to_json(cert));
            } else {
                SnakeDecomposition cert = build_snake_decomposition(board);
                std::string why;
                if (!verify_snake_decomposition(cert, &why))
                    throw Error("verification failed: " + why);
                emit(opts, snake_text(cert), to_json(cert));
            }
        } else if (*toggle) {
            WhirlOrder order = WhirlOrder::parse(order_text, toggle_n);
            ToggleReport report = check_toggle_homomesy(toggle_n, toggle_r, order);
            emit(opts, toggle_text(report), to_json(report), toggle_csv(report));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
