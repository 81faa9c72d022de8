// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "baranyai/core.hpp"
#include "baranyai/enumcode.hpp"
#include "baranyai/factor.hpp"
#include "baranyai/io.hpp"
#include "baranyai/latin.hpp"
#include "baranyai/quadrupling.hpp"
#include "baranyai/seeds.hpp"
#include "baranyai/verify.hpp"

using namespace baranyai;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "CRITERION " << criterion << (pass ? " PASS" : " FAIL") << " - " << detail << std::endl;
    if (!pass)
        ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli_generate16() {
#ifdef BARANYAI_CLI_PATH
    std::string cmd = std::string(BARANYAI_CLI_PATH) + " --quiet generate --n 16 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    std::string out;
    char buf[65536];
    std::size_t got;
    while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    ::pclose(pipe);
    return out;
#else
    return {};
#endif
}

// ---- criterion 1: doubling correctness via the CLI ------------------------

void criterion1() {
    auto t0 = Clock::now();
    std::string cliOut = run_cli_generate16();
    double elapsed = seconds_since(t0);

    std::ostringstream detail;
    bool ok = !cliOut.empty();
    if (ok) {
        std::istringstream in(cliOut);
        Design d = read_design(in);
        ok = d.n == 16 && d.classes.size() == 455;
        auto census = stf_census(d, 8);
        ok = ok && census.unclassified.empty() && census.type_s == 280 && census.type_t == 168 &&
             census.type_f == 7;
        auto rep = verify_bp(d, 16, 4);
        ok = ok && rep.ok && rep.covered == 1820;
        ok = ok && cliOut == design_to_string(build_bp(16));
        ok = ok && elapsed < 1.0;
        detail << "generate --n 16: classes=" << d.classes.size() << " census=" << census.type_s << "/"
               << census.type_t << "/" << census.type_f << " covered=" << rep.covered
               << " time=" << elapsed << "s";
    } else {
        detail << "could not run the CLI";
    }
    report(1, ok, detail.str());
}

// ---- criterion 2: doubling at scale ---------------------------------------

void criterion2() {
    Design d32 = build_bp(32);
    auto rep32 = verify_bp(d32, 32, 4);
    bool ok32 = d32.classes.size() == 4495 && rep32.ok && rep32.covered == 35960;

    auto t0 = Clock::now();
    Design d64 = build_bp(64);
    auto rep64 = verify_bp(d64, 64, 4);
    double elapsed = seconds_since(t0);
    bool ok64 = d64.classes.size() == 39711 && rep64.ok && rep64.covered == 635376 && elapsed < 60.0;

    std::ostringstream detail;
    detail << "BP(32,4): " << d32.classes.size() << " classes covered=" << rep32.covered
           << "; BP(64,4): " << d64.classes.size() << " classes covered=" << rep64.covered
           << " gen+verify=" << elapsed << "s";
    report(2, ok32 && ok64, detail.str());
}

// ---- criteria 3/4: quadrupling cases 1 and 2 ------------------------------

void quadrupling_case(int criterion, int t, std::int64_t classes,
                      const std::array<std::int64_t, 5>& census, std::int64_t coverage,
                      double timeLimit) {
    auto t0 = Clock::now();
    Design d = build_bp(4 * t);
    auto actual = type_census(d, t);
    auto rep = verify_bp(d, 4 * t, 4);
    double elapsed = seconds_since(t0);

    bool ok = static_cast<std::int64_t>(d.classes.size()) == classes && actual.matches(census) &&
              rep.ok && rep.covered == coverage && elapsed < timeLimit;
    std::ostringstream detail;
    detail << "BP(" << 4 * t << ",4): classes=" << d.classes.size() << " census=";
    for (std::size_t i = 0; i < 5; ++i)
        detail << (i ? "," : "(") << actual.classes_by_type[i];
    detail << ") covered=" << rep.covered << " time=" << elapsed << "s (limit " << timeLimit << "s)";
    report(criterion, ok, detail.str());
}

// ---- criterion 5: cases 3/5 delegate to the doubling chain ----------------

void criterion5() {
    QuadInput in;
    in.t = 16;
    in.bp4 = build_bp(16);
    Design viaQuad = quadruple_bp(in);
    Design viaDouble = build_bp(64);
    viaQuad.provenance = viaDouble.provenance; // listings must agree byte for byte
    bool ok = design_to_string(viaQuad) == design_to_string(viaDouble);
    report(5, ok, "quadruple_bp(t=16) vs doubling chain listing: byte-identical=" +
                      std::string(ok ? "yes" : "no"));
}

// ---- criterion 6: the t=21 L' algebra, stretch BP(84,4) -------------------

void criterion6() {
    const int t = 21;
    LSets sets = build_Lprime_sets(t);

    bool ok = true;
    std::set<std::uint32_t> all;
    std::size_t total = 0;
    for (const auto& l : sets.L) {
        total += l.size();
        for (const Quad& q : l)
            ok = ok && all.insert(q.code(t)).second;
    }
    ok = ok && total == 194481 && all.size() == total;

    for (int i = 0; i < 3 && ok; ++i) {
        std::set<std::uint32_t> inL;
        for (const Quad& q : sets.L[static_cast<std::size_t>(i + 1)])
            inL.insert(q.code(t));
        ParallelClass c;
        for (const Quad& q : sets.S[static_cast<std::size_t>(i)]) {
            ok = ok && inL.count(q.code(t)) > 0;
            c.blocks.push_back(q.to_block(t));
        }
        c.normalize();
        ok = ok && !verify_class(c, 84, 4).has_value();
    }

    auto checkFreq = [&](const std::vector<Quad>& l, int la, int lb) {
        std::map<std::pair<int, int>, int> freq;
        for (const Quad& q : l)
            ++freq[{q.x[static_cast<std::size_t>(la)], q.x[static_cast<std::size_t>(lb)]}];
        if (freq.size() != static_cast<std::size_t>(t) * t)
            return false;
        return std::all_of(freq.begin(), freq.end(), [&](auto& kv) { return kv.second == (t - 1) / 2; });
    };
    ok = ok && checkFreq(sets.L[1], 0, 1) && checkFreq(sets.L[1], 2, 3);
    ok = ok && checkFreq(sets.L[2], 0, 3) && checkFreq(sets.L[2], 1, 2);
    ok = ok && checkFreq(sets.L[3], 0, 2) && checkFreq(sets.L[3], 1, 3);

    std::string stretch;
    try {
        Design d = build_bp(84);
        auto census = type_census(d, t);
        auto rep = verify_bp(d, 84, 4);
        bool full = static_cast<std::int64_t>(d.classes.size()) == 91881 &&
                    census.matches({1771, 15390, 13167, 55566, 5987}) && rep.ok &&
                    rep.covered == 1929501;
        if (!full) {
            std::ostringstream defect;
            defect << "stretch BP(84,4) DEFECT: classes=" << d.classes.size()
                   << " missing=" << rep.missing.size() << " duplicated=" << rep.duplicated.size();
            stretch = defect.str();
            ok = false; // a found seed means the full run must verify
        } else {
            stretch = "stretch BP(84,4) verified (91881 classes, 1929501 quadruples)";
        }
    } catch (const seeds::SearchTimeout&) {
        stretch = "stretch skipped: BP(21,3) seed search timed out";
    }

    report(6, ok, "L' sets pairwise disjoint, union 21^4, S subsets in place, pair frequency 10; " +
                      stretch);
}

// ---- criterion 7: enumerative coding --------------------------------------

void criterion7() {
    bool ok = true;
    {
        Design d = build_bp(16);
        for (std::int64_t i = 1; i <= 455 && ok; ++i)
            ok = column(16, i) == d.classes[static_cast<std::size_t>(i - 1)];
    }
    std::mt19937_64 rng(4242);
    for (int n : {32, 64}) {
        Design d = build_bp(n);
        std::uniform_int_distribution<std::int64_t> dist(1, binomial(n - 1, 3));
        for (int trial = 0; trial < 200 && ok; ++trial) {
            std::int64_t i = dist(rng);
            ok = column(n, i) == d.classes[static_cast<std::size_t>(i - 1)];
        }
    }

    // latency growth across the chain; medians over repeated queries
    std::vector<int> ns{16, 32, 64, 128, 256, 512, 1024};
    std::map<int, double> medians;
    for (int n : ns) {
        (void)column(n, 1); // warm caches
        std::uniform_int_distribution<std::int64_t> dist(1, binomial(n - 1, 3));
        std::vector<double> samples;
        for (int q = 0; q < 64; ++q) {
            std::int64_t i = dist(rng);
            auto t0 = Clock::now();
            volatile std::size_t sink = column(n, i).blocks.size();
            (void)sink;
            samples.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count());
        }
        std::nth_element(samples.begin(), samples.begin() + 32, samples.end());
        medians[n] = samples[32];
    }
    double growth = medians[1024] / medians[16];
    double budget = 2.0 * (1024.0 / 16.0);
    bool linear = growth <= budget;
    ok = ok && linear;

    std::ostringstream detail;
    detail << "column==listing at n=16 (exhaustive), n=32/64 (200 random); latency ns/col:";
    for (int n : ns)
        detail << " " << n << ":" << static_cast<long>(medians[n]);
    detail << " growth(1024/16)=" << growth << " budget=" << budget;
    report(7, ok, detail.str());
}

// ---- criterion 8: property suites ------------------------------------------

void criterion8() {
    bool ok = true;
    std::ostringstream detail;

    // factorization validity
    for (int m = 2; m <= 200 && ok; m += 2) {
        auto f = one_factorization(m);
        std::set<std::pair<Point, Point>> seen;
        for (const auto& factor : f.factors) {
            std::vector<char> hit(static_cast<std::size_t>(m));
            for (auto [x, y] : factor) {
                ok = ok && !hit[x] && !hit[y] && seen.insert({x, y}).second;
                hit[x] = hit[y] = 1;
            }
        }
        ok = ok && static_cast<std::int64_t>(seen.size()) == static_cast<std::int64_t>(m) * (m - 1) / 2;
    }
    for (int m = 3; m <= 201 && ok; m += 2) {
        auto f = near_one_factorization(m);
        std::set<std::pair<Point, Point>> seen;
        for (int k = 0; k < m; ++k) {
            std::vector<char> hit(static_cast<std::size_t>(m));
            for (auto [x, y] : f.factors[static_cast<std::size_t>(k)]) {
                ok = ok && !hit[x] && !hit[y] && seen.insert({x, y}).second;
                hit[x] = hit[y] = 1;
            }
            ok = ok && !hit[static_cast<std::size_t>(k)];
        }
        ok = ok && static_cast<std::int64_t>(seen.size()) == static_cast<std::int64_t>(m) * (m - 1) / 2;
    }
    detail << "factorizations m<=200/201 ok=" << ok;

    // Latin completion on 1000 random valid instances
    std::mt19937 rng(20200808);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 29);
        int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
        std::vector<int> rp(static_cast<std::size_t>(n)), cp = rp, sp = rp;
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::iota(sp.begin(), sp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        std::shuffle(sp.begin(), sp.end(), rng);
        PartialRows p;
        p.n = n;
        for (int r = 0; r < k; ++r) {
            std::vector<Point> row(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                row[static_cast<std::size_t>(c)] = static_cast<Point>(
                    sp[static_cast<std::size_t>((rp[static_cast<std::size_t>(r)] +
                                                 cp[static_cast<std::size_t>(c)]) %
                                                n)]);
            p.rows.push_back(std::move(row));
        }
        LatinSquare m = complete_latin(p);
        ok = ok && m.valid();
        for (int r = 0; r < k && ok; ++r)
            for (int c = 0; c < n; ++c)
                ok = ok && m.at(r, c) == p.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    detail << ", latin x1000 ok=" << ok;

    // set_sum cardinality t^4
    for (int t : {5, 15, 21}) {
        auto abcd = set_sum(set_sum(quad_set_A(t), quad_set_B(t), t),
                            set_sum(quad_set_C(t), quad_set_D(t), t), t);
        ok = ok && static_cast<std::int64_t>(abcd.size()) == static_cast<std::int64_t>(t) * t * t * t;
    }
    detail << ", set_sum t^4 ok=" << ok;

    // Group 2 exactly-once coverage by Types 1+2 at t in {12, 15}
    for (int t : {12, 15}) {
        QuadInput in;
        in.t = t;
        in.bp4 = build_bp(t + (4 - t % 4) % 4);
        in.bp3 = seeds::bp3_provider(t);
        std::unordered_set<std::int64_t> covered;
        bool local = true;
        auto record = [&](const std::vector<ParallelClass>& classes) {
            for (const auto& c : classes)
                for (const Block& b : c.blocks)
                    if (group_of(classify_configuration(b, t)) == 2)
                        local = local && covered.insert(rank_block(b, 4 * t)).second;
        };
        record(type1_classes(in));
        record(type2_classes(in));
        std::int64_t allG2 = 12 * t * binomial(t, 3);
        ok = ok && local && static_cast<std::int64_t>(covered.size()) == allG2;
    }
    detail << ", group2 coverage t=12,15 ok=" << ok;
    report(8, ok, detail.str());
}

// ---- criterion 9: seed certification ---------------------------------------

void criterion9() {
    bool ok = true;
    std::ostringstream detail;
    try {
        ok = ok && verify_bp(seeds::bp_8_4(), 8, 4).ok;
        ok = ok && verify_bp(seeds::bp4_seed(12), 12, 4).ok;
        ok = ok && verify_bp(seeds::bp3_provider(12), 12, 3).ok;
        ok = ok && verify_bp(seeds::bp3_provider(15), 15, 3).ok;
        ok = ok && verify_rsqs(seeds::resolvable_sqs(8), 8).ok;
        ok = ok && verify_rsqs(seeds::resolvable_sqs(16), 16).ok;
        detail << "bp_8_4, BP(12,4), BP(12,3), BP(15,3), RSQS(8), RSQS(16) verified on load";

        // cache round trip is byte-identical
        auto& cache = seeds::default_cache();
        Design d = cache.load(DesignKind::BP, 12, 4);
        std::string once = design_to_string(d);
        std::istringstream in(once);
        std::string twice = design_to_string(read_design(in));
        ok = ok && once == twice;
        detail << "; round-trip byte-identical=" << (once == twice);
    } catch (const std::exception& e) {
        ok = false;
        detail << "; exception: " << e.what();
    }
    report(9, ok, detail.str());
}

} // namespace

int main() {
    try {
        criterion1();
        criterion2();
        quadrupling_case(3, 12, 16215, {165, 2640, 2178, 9504, 1728}, 194580, 30.0);
        quadrupling_case(4, 15, 32509, {455, 5369, 4725, 20250, 1710}, 487635, 90.0);
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
    } catch (const std::exception& e) {
        std::cout << "ACCEPTANCE ABORTED - " << e.what() << std::endl;
        return 2;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << 9 - failures
              << "/9)" << std::endl;
    return failures == 0 ? 0 : 1;
}
