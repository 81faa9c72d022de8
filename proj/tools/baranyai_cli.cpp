#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "baranyai/core.hpp"
#include "baranyai/enumcode.hpp"
#include "baranyai/io.hpp"
#include "baranyai/quadrupling.hpp"
#include "baranyai/seeds.hpp"
#include "baranyai/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitSearchTimeout = 4;

using namespace baranyai;

struct Options {
    bool quiet = false;
    bool verbose = false;
    bool labeled = false;
};

void emit_class(std::ostream& os, const ParallelClass& c, int n, bool labeled) {
    if (labeled)
        write_class_line_labeled(os, c, n / 4);
    else
        write_class_line(os, c);
}

int run_generate(int n, const std::string& outPath, const Options& opt) {
    Design d = build_bp(n);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!outPath.empty()) {
        file.open(outPath, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << outPath << '\n';
            return kExitValidation;
        }
        os = &file;
    }
    if (opt.labeled) {
        *os << "BARANYAI v1 n=" << d.n << " k=" << d.k << " classes=" << d.classes.size()
            << " provenance=" << d.provenance << '\n';
        for (const ParallelClass& c : d.classes)
            emit_class(*os, c, n, true);
    } else {
        write_design(*os, d);
    }
    if (!opt.quiet)
        std::cerr << "generated BP(" << n << ",4): " << d.classes.size() << " classes\n";
    return kExitOk;
}

int run_verify(const std::string& path, const Options& opt) {
    Design d = read_design_file(path);
    CoverageReport rep;
    bool isBp = static_cast<std::int64_t>(d.classes.size()) == binomial(d.n - 1, d.k - 1);
    if (!isBp && d.k == 4 &&
        static_cast<std::int64_t>(d.classes.size()) ==
            static_cast<std::int64_t>(d.n - 1) * (d.n - 2) / 6) {
        rep = verify_rsqs(d, d.n);
        std::cout << "KIND=rsqs\n";
    } else {
        rep = verify_bp(d, d.n, d.k);
        std::cout << "KIND=bp\n";
    }
    rep.print(std::cout);
    if (d.k == 4 && d.n % 4 == 0 && rep.ok) {
        GroupCensus census = type_census(d, d.n / 4);
        if (census.unclassified.empty()) {
            std::cout << "CENSUS=";
            for (std::size_t i = 0; i < 5; ++i)
                std::cout << (i ? "," : "") << census.classes_by_type[i];
            std::cout << '\n';
        }
    }
    if (!rep.ok && !opt.quiet)
        std::cerr << "verification failed for " << path << '\n';
    return rep.ok ? kExitOk : kExitVerification;
}

int run_seed(const std::string& kind, int n, int k, const Options& opt) {
    Design d;
    if (kind == "bp") {
        if (k == 4)
            d = seeds::bp4_seed(n);
        else if (k == 3)
            d = seeds::bp3_provider(n);
        else
            throw std::invalid_argument("seed: --k must be 3 or 4 for kind bp");
    } else if (kind == "rsqs") {
        d = seeds::resolvable_sqs(n);
        if (n <= 16) {
            // already cached by resolvable_sqs
        } else {
            seeds::default_cache().store(d);
        }
    } else {
        throw std::invalid_argument("seed: unknown kind " + kind);
    }
    if (!opt.quiet)
        std::cerr << "seed " << kind << "(" << n << "," << (kind == "rsqs" ? 4 : k)
                  << "): " << d.classes.size() << " classes, provenance=" << d.provenance << '\n';
    return kExitOk;
}

int run_bench(int n, int queries, const Options& opt) {
    using Clock = std::chrono::steady_clock;
    std::mt19937_64 rng(0xb1a2a7a1u);
    const std::int64_t total = binomial(n - 1, 3);
    std::uniform_int_distribution<std::int64_t> dist(1, total);

    // warm any cached seeds out of the timing path
    (void)column(n, 1);

    auto t0 = Clock::now();
    for (int q = 0; q < queries; ++q)
        (void)column(n, dist(rng));
    auto t1 = Clock::now();
    for (int q = 0; q < queries; ++q)
        (void)entry(n, dist(rng), 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n / 4)));
    auto t2 = Clock::now();

    auto ns = [](auto d) { return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count(); };
    std::cout << "BENCH n=" << n << " queries=" << queries << " col_ns=" << ns(t1 - t0) / queries
              << " ent_ns=" << ns(t2 - t1) / queries << '\n';
    (void)opt;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit Baranyai partitions BP(n,4): generation, queries, verification"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--quiet", opt.quiet, "suppress progress output");
    app.add_flag("--verbose", opt.verbose, "extra progress output");

    int n = 0, k = 4, queries = 200;
    std::int64_t i = 0, j = 0;
    std::string outPath, filePath, kind;

    auto* gen = app.add_subcommand("generate", "list BP(n,4), one parallel class per line");
    gen->add_option("--n", n, "universe size")->required();
    gen->add_option("--out", outPath, "output file (default stdout)");
    gen->add_flag("--labeled", opt.labeled, "print (x,layer) tuples instead of flat points");

    auto* col = app.add_subcommand("column", "print column i without listing");
    col->add_option("--n", n)->required();
    col->add_option("--i", i, "1-based column index")->required();
    col->add_flag("--labeled", opt.labeled);

    auto* ent = app.add_subcommand("entry", "print block j of column i");
    ent->add_option("--n", n)->required();
    ent->add_option("--i", i)->required();
    ent->add_option("--j", j, "1-based block index")->required();

    auto* ver = app.add_subcommand("verify", "verify a design file and print a report");
    ver->add_option("--file", filePath)->required();

    auto* seed = app.add_subcommand("seed", "build or load a cached seed design");
    seed->add_option("--kind", kind, "bp or rsqs")->required();
    seed->add_option("--n", n)->required();
    seed->add_option("--k", k, "block size for kind bp (default 4)");

    auto* bench = app.add_subcommand("bench", "time column/entry queries");
    bench->add_option("--n", n)->required();
    bench->add_option("--queries", queries);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_generate(n, outPath, opt);
        if (col->parsed()) {
            ParallelClass c = column(n, i);
            emit_class(std::cout, c, n, opt.labeled);
            return kExitOk;
        }
        if (ent->parsed()) {
            Block b = entry(n, i, j);
            ParallelClass c;
            c.blocks.push_back(b);
            write_class_line(std::cout, c);
            return kExitOk;
        }
        if (ver->parsed())
            return run_verify(filePath, opt);
        if (seed->parsed())
            return run_seed(kind, n, k, opt);
        if (bench->parsed())
            return run_bench(n, queries, opt);
    } catch (const seeds::SearchTimeout& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSearchTimeout;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}
