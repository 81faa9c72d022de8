#include "baranyai/seeds.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include "baranyai/dlx.hpp"
#include "baranyai/io.hpp"
#include "baranyai/verify.hpp"

namespace baranyai::seeds {

SearchBudget default_budget() {
    SearchBudget b;
    if (const char* env = std::getenv("BARANYAI_SEARCH_BUDGET_SEC"))
        b.wallClock = std::chrono::seconds(std::atol(env));
    return b;
}

std::vector<Block> all_blocks(int n, int k) {
    std::vector<Block> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    for (std::int64_t r = 0; r < binomial(n, k); ++r)
        out.push_back(unrank_block(r, n, k));
    return out;
}

namespace {

std::int64_t zero_block_rank(const ParallelClass& c, int n) {
    for (const Block& b : c.blocks)
        if (b.size() > 0 && b[0] == 0)
            return rank_block(b, n);
    throw std::logic_error("class has no block containing point 0");
}

} // namespace

void canonicalize_design(Design& d) {
    for (ParallelClass& c : d.classes)
        c.normalize();
    std::stable_sort(d.classes.begin(), d.classes.end(), [&](const ParallelClass& a, const ParallelClass& b) {
        return zero_block_rank(a, d.n) < zero_block_rank(b, d.n);
    });
}

Design bp_small_complement(int n, int k) {
    Design d;
    d.k = k;
    d.n = n;
    d.kind = DesignKind::BP;
    if (n == k) {
        ParallelClass c;
        std::vector<Point> pts;
        for (int i = 0; i < k; ++i)
            pts.push_back(static_cast<Point>(i));
        c.blocks.push_back(Block(std::span<const Point>(pts.data(), pts.size())));
        d.classes.push_back(std::move(c));
        d.provenance = "trivial";
        return d;
    }
    if (n != 2 * k)
        throw std::invalid_argument("bp_small_complement: supports n == k or n == 2k only");
    for (const Block& b : all_blocks(n - 1, k - 1)) {
        // blocks containing 0, in colex order of the remaining points
        std::vector<Point> first{0}, rest;
        for (Point p : b.points())
            first.push_back(static_cast<Point>(p + 1));
        for (Point p = 1; p < n; ++p)
            if (std::find(first.begin(), first.end(), p) == first.end())
                rest.push_back(p);
        ParallelClass c;
        c.blocks.push_back(Block(std::span<const Point>(first.data(), first.size())));
        c.blocks.push_back(Block(std::span<const Point>(rest.data(), rest.size())));
        c.normalize();
        d.classes.push_back(std::move(c));
    }
    canonicalize_design(d);
    d.provenance = "complement-pairs";
    return d;
}

Design bp_8_4() { return bp_small_complement(8, 4); }

std::vector<Block> sqs8_blocks() {
    std::vector<Block> blocks;
    for (const Block& b : all_blocks(8, 4)) {
        int x = 0;
        for (Point p : b.points())
            x ^= p;
        if (x == 0)
            blocks.push_back(b);
    }
    return blocks;
}

std::vector<Block> sqs16_blocks() {
    std::vector<Block> blocks;
    for (const Block& b : sqs8_blocks()) {
        for (int layer = 0; layer < 2; ++layer) {
            std::array<Point, 4> pts{};
            for (int i = 0; i < 4; ++i)
                pts[static_cast<std::size_t>(i)] = static_cast<Point>(b[i] + 8 * layer);
            blocks.push_back(Block(std::span<const Point>(pts.data(), 4)));
        }
    }
    for (int d = 1; d < 8; ++d) {
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < 8; ++x)
            if (x < (x ^ d))
                pairs.emplace_back(x, x ^ d);
        for (auto [x, y] : pairs)
            for (auto [u, v] : pairs)
                blocks.push_back(Block{static_cast<Point>(x), static_cast<Point>(y),
                                       static_cast<Point>(8 + u), static_cast<Point>(8 + v)});
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

DlxSolver::Status solve_with_budget(DlxSolver& solver, std::vector<int>& rows, const SearchBudget& budget) {
    return solver.solve(rows, budget.nodes, std::chrono::steady_clock::now() + budget.wallClock);
}

} // namespace

Design exact_cover_resolve(const std::vector<Block>& blocks, int n, int k, const SearchBudget& budget) {
    if (blocks.empty() || n % k != 0)
        throw std::invalid_argument("exact_cover_resolve: bad instance");
    const int perClass = n / k;
    if (blocks.size() % static_cast<std::size_t>(perClass) != 0)
        throw std::invalid_argument("exact_cover_resolve: block count not a multiple of n/k");
    const int q = static_cast<int>(blocks.size()) / perClass;

    std::vector<Block> zeroBlocks, rest;
    for (const Block& b : blocks)
        (b.contains(0) ? zeroBlocks : rest).push_back(b);
    std::sort(zeroBlocks.begin(), zeroBlocks.end());
    std::sort(rest.begin(), rest.end());
    if (static_cast<int>(zeroBlocks.size()) != q)
        throw std::invalid_argument("exact_cover_resolve: point replication does not match class count");

    // items: one per remaining block, then (point, class) slots not pinned
    const int blockItems = static_cast<int>(rest.size());
    std::vector<int> slotItem(static_cast<std::size_t>(n) * q, -1);
    int numItems = blockItems;
    for (int c = 0; c < q; ++c)
        for (int p = 1; p < n; ++p)
            if (!zeroBlocks[static_cast<std::size_t>(c)].contains(static_cast<Point>(p)))
                slotItem[static_cast<std::size_t>(p) * q + c] = numItems++;

    DlxSolver solver(numItems);
    std::vector<std::pair<int, int>> rowMeaning; // (block index in rest, class)
    for (int bi = 0; bi < blockItems; ++bi) {
        const Block& b = rest[static_cast<std::size_t>(bi)];
        for (int c = 0; c < q; ++c) {
            bool clash = false;
            for (Point p : b.points())
                if (zeroBlocks[static_cast<std::size_t>(c)].contains(p)) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            std::vector<int> items{bi};
            for (Point p : b.points())
                items.push_back(slotItem[static_cast<std::size_t>(p) * q + c]);
            solver.add_row(items);
            rowMeaning.emplace_back(bi, c);
        }
    }

    std::vector<int> solution;
    auto status = solve_with_budget(solver, solution, budget);
    if (status == DlxSolver::Status::BudgetExceeded)
        throw SearchTimeout("exact_cover_resolve: search budget exceeded");
    if (status != DlxSolver::Status::Solved)
        throw std::runtime_error("exact_cover_resolve: instance is infeasible");

    Design d;
    d.n = n;
    d.k = k;
    d.kind = DesignKind::BP;
    d.classes.resize(static_cast<std::size_t>(q));
    for (int c = 0; c < q; ++c)
        d.classes[static_cast<std::size_t>(c)].blocks.push_back(zeroBlocks[static_cast<std::size_t>(c)]);
    for (int row : solution) {
        auto [bi, c] = rowMeaning[static_cast<std::size_t>(row)];
        d.classes[static_cast<std::size_t>(c)].blocks.push_back(rest[static_cast<std::size_t>(bi)]);
    }
    canonicalize_design(d);
    d.provenance = "search:dlx";
    return d;
}

namespace {

Block rotate_block(const Block& b, int shift, int g) {
    std::array<Point, 4> pts{};
    for (int i = 0; i < b.size(); ++i) {
        Point p = b[i];
        pts[static_cast<std::size_t>(i)] = p < g ? static_cast<Point>((p + shift) % g) : p;
    }
    return Block(std::span<const Point>(pts.data(), static_cast<std::size_t>(b.size())));
}

Block orbit_rep(const Block& b, int g) {
    Block best = b;
    for (int s = 1; s < g; ++s)
        best = std::min(best, rotate_block(b, s, g));
    return best;
}

} // namespace

std::optional<Design> cyclic_resolve(int n, int k, int fixedCount, const SearchBudget& budget) {
    const int g = n - fixedCount;
    if (fixedCount < 1 || g < 2)
        return std::nullopt;
    const std::int64_t totalClasses = binomial(n - 1, k - 1);
    if (totalClasses % g != 0)
        return std::nullopt;
    const int q = static_cast<int>(totalClasses / g);
    const Point anchor = static_cast<Point>(n - 1);

    // orbits of k-subsets under the rotation; bail out on any short orbit
    std::map<Block, int> orbitIndex;
    std::vector<Block> anchorReps;
    std::vector<Block> freeReps;
    for (const Block& b : all_blocks(n, k)) {
        Block rep = orbit_rep(b, g);
        if (!(b == rep))
            continue;
        for (int s = 1; s < g; ++s)
            if (rotate_block(rep, s, g) == rep)
                return std::nullopt; // short orbit, construction inapplicable
        if (rep.contains(anchor))
            anchorReps.push_back(rep);
        else
            freeReps.push_back(rep);
    }
    if (static_cast<int>(anchorReps.size()) != q)
        return std::nullopt;
    std::sort(anchorReps.begin(), anchorReps.end());
    std::sort(freeReps.begin(), freeReps.end());
    for (std::size_t i = 0; i < freeReps.size(); ++i)
        orbitIndex[freeReps[i]] = static_cast<int>(i);

    // items: free orbits once each, plus (point, base class) slots
    const int orbitItems = static_cast<int>(freeReps.size());
    std::vector<int> slotItem(static_cast<std::size_t>(n) * q, -1);
    int numItems = orbitItems;
    for (int c = 0; c < q; ++c)
        for (int p = 0; p < n - 1; ++p)
            if (!anchorReps[static_cast<std::size_t>(c)].contains(static_cast<Point>(p)))
                slotItem[static_cast<std::size_t>(p) * q + c] = numItems++;

    DlxSolver solver(numItems);
    std::vector<std::pair<Block, int>> rowMeaning;
    for (const Block& b : all_blocks(n - 1, k)) { // every block avoiding the anchor point
        int orbit = orbitIndex.at(orbit_rep(b, g));
        for (int c = 0; c < q; ++c) {
            bool clash = false;
            for (Point p : b.points())
                if (anchorReps[static_cast<std::size_t>(c)].contains(p)) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            std::vector<int> items{orbit};
            for (Point p : b.points())
                items.push_back(slotItem[static_cast<std::size_t>(p) * q + c]);
            solver.add_row(items);
            rowMeaning.emplace_back(b, c);
        }
    }

    std::vector<int> solution;
    auto status = solve_with_budget(solver, solution, budget);
    if (status != DlxSolver::Status::Solved)
        return std::nullopt;

    std::vector<ParallelClass> base(static_cast<std::size_t>(q));
    for (int c = 0; c < q; ++c)
        base[static_cast<std::size_t>(c)].blocks.push_back(anchorReps[static_cast<std::size_t>(c)]);
    for (int row : solution) {
        auto& [b, c] = rowMeaning[static_cast<std::size_t>(row)];
        base[static_cast<std::size_t>(c)].blocks.push_back(b);
    }

    Design d;
    d.n = n;
    d.k = k;
    d.kind = DesignKind::BP;
    for (const ParallelClass& bc : base)
        for (int s = 0; s < g; ++s) {
            ParallelClass c;
            for (const Block& b : bc.blocks)
                c.blocks.push_back(rotate_block(b, s, g));
            c.normalize();
            d.classes.push_back(std::move(c));
        }
    canonicalize_design(d);
    d.provenance = "search:cyclic-dlx:g=" + std::to_string(g);
    return d;
}

// --- cache ---------------------------------------------------------------

namespace {

struct LockFile {
    std::string path;
    int fd = -1;

    explicit LockFile(std::string p) : path(std::move(p)) {
        for (int attempt = 0; attempt < 600; ++attempt) {
            fd = ::open(path.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
            if (fd >= 0)
                return;
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
        throw std::runtime_error("seed cache: could not acquire lock " + path);
    }
    ~LockFile() {
        if (fd >= 0) {
            ::close(fd);
            ::unlink(path.c_str());
        }
    }
};

bool file_exists(const std::string& path) {
    struct stat st{};
    return ::stat(path.c_str(), &st) == 0;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void verify_loaded(const Design& d, DesignKind kind, int n, int k, const std::string& path) {
    if (d.n != n || d.k != k)
        throw std::runtime_error("seed cache: header mismatch in " + path);
    CoverageReport rep;
    if (kind == DesignKind::BP)
        rep = verify_bp(d, n, k);
    else if (kind == DesignKind::RSQS)
        rep = verify_rsqs(d, n);
    else
        throw std::runtime_error("seed cache: unsupported kind");
    if (!rep.ok)
        throw std::runtime_error("seed cache: " + path + " failed verification");
}

} // namespace

SeedCache::SeedCache(std::string directory) : dir_(std::move(directory)) {
    if (!dir_.empty() && !file_exists(dir_))
        ::mkdir(dir_.c_str(), 0755);
}

std::string SeedCache::path_for(DesignKind kind, int n, int k) const {
    return dir_ + "/" + design_kind_name(kind) + "_" + std::to_string(n) + "_" + std::to_string(k) +
           ".design";
}

bool SeedCache::has(DesignKind kind, int n, int k) const { return file_exists(path_for(kind, n, k)); }

Design SeedCache::load(DesignKind kind, int n, int k) const {
    const std::string path = path_for(kind, n, k);
    std::string bytes = read_all(path);
    if (file_exists(path + ".sha")) {
        std::string recorded = read_all(path + ".sha");
        while (!recorded.empty() && (recorded.back() == '\n' || recorded.back() == '\r'))
            recorded.pop_back();
        if (recorded != content_digest(bytes))
            throw std::runtime_error("seed cache: digest mismatch for " + path);
    }
    std::istringstream in(bytes);
    Design d = read_design(in);
    d.kind = kind;
    verify_loaded(d, kind, n, k, path);
    return d;
}

void SeedCache::store(const Design& d) {
    const std::string path = path_for(d.kind, d.n, d.k);
    LockFile lock(path + ".lock");
    std::string bytes = design_to_string(d);
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("seed cache: cannot write " + path);
        out << bytes;
    }
    std::ofstream sha(path + ".sha", std::ios::binary);
    sha << content_digest(bytes) << '\n';
}

SeedCache& default_cache() {
    static SeedCache cache = [] {
        if (const char* env = std::getenv("BARANYAI_CACHE"))
            return SeedCache(env);
#ifdef BARANYAI_DEFAULT_SEED_DIR
        return SeedCache(BARANYAI_DEFAULT_SEED_DIR);
#else
        return SeedCache("data/seeds");
#endif
    }();
    return cache;
}

// --- resolvable SQS ------------------------------------------------------

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// 2-subspaces {0,a,b,a^b} of F_2^e ordered by (a,b); a is the least nonzero
// element, b the second least, so a^b > b (b has the top bit of a clear).
std::int64_t plane_count_for(int a, int e) {
    int h = 0;
    while ((2 << h) <= a)
        ++h;
    return (1ll << (e - 1)) - (1ll << h);
}

std::pair<int, int> unrank_plane(std::int64_t idx, int e) {
    for (int a = 1; a < (1 << e); ++a) {
        std::int64_t c = plane_count_for(a, e);
        if (idx < c) {
            int h = 0;
            while ((2 << h) <= a)
                ++h;
            std::int64_t u = 1 + idx / (1ll << h);
            std::int64_t v = idx % (1ll << h);
            return {a, static_cast<int>(u * (1ll << (h + 1)) + v)};
        }
        idx -= c;
    }
    throw std::out_of_range("unrank_plane: index out of range");
}

ParallelClass affine_parallel_class(int v, std::int64_t index) {
    int e = 0;
    while ((1 << e) < v)
        ++e;
    auto [a, b] = unrank_plane(index, e);
    ParallelClass c;
    std::vector<char> done(static_cast<std::size_t>(v), 0);
    for (int x = 0; x < v; ++x) {
        if (done[static_cast<std::size_t>(x)])
            continue;
        std::array<Point, 4> pts{static_cast<Point>(x), static_cast<Point>(x ^ a),
                                 static_cast<Point>(x ^ b), static_cast<Point>(x ^ a ^ b)};
        for (Point p : pts)
            done[p] = 1;
        std::sort(pts.begin(), pts.end());
        c.blocks.push_back(Block(std::span<const Point>(pts.data(), 4)));
    }
    return c;
}

const Design& cached_rsqs(int v) {
    static std::map<int, Design> memo;
    auto it = memo.find(v);
    if (it == memo.end()) {
        auto blocks = v == 8 ? sqs8_blocks() : sqs16_blocks();
        Design d = default_cache().get_or_build(DesignKind::RSQS, v, 4, [&] {
            Design r = exact_cover_resolve(blocks, v, 4);
            r.kind = DesignKind::RSQS;
            r.provenance = v == 8 ? "sqs8-xor+search:dlx" : "sqs16-doubled+search:dlx";
            return r;
        });
        it = memo.emplace(v, std::move(d)).first;
    }
    return it->second;
}

} // namespace

std::int64_t rsqs_class_count(int v) { return static_cast<std::int64_t>(v - 1) * (v - 2) / 6; }

ParallelClass rsqs_class(int v, std::int64_t index) {
    if (index < 0 || index >= rsqs_class_count(v))
        throw std::out_of_range("rsqs_class: index out of range");
    if (v == 8 || v == 16)
        return cached_rsqs(v).classes[static_cast<std::size_t>(index)];
    if (!is_power_of_two(v) || v < 32)
        throw std::invalid_argument("rsqs_class: unsupported order " + std::to_string(v));
    return affine_parallel_class(v, index);
}

Design resolvable_sqs(int v) {
    if (v == 8 || v == 16)
        return cached_rsqs(v);
    if (!is_power_of_two(v) || v < 32)
        throw std::invalid_argument("resolvable_sqs: unsupported order " + std::to_string(v));
    Design d;
    d.kind = DesignKind::RSQS;
    d.n = v;
    d.k = 4;
    d.provenance = "xor-blocks+affine-parallelism";
    const std::int64_t count = rsqs_class_count(v);
    d.classes.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        d.classes.push_back(affine_parallel_class(v, i));
    return d;
}

// --- seed designs ---------------------------------------------------------

namespace {

Design searched_bp(int n, int k) {
    return default_cache().get_or_build(DesignKind::BP, n, k, [&] {
        for (int fixedCount : {1, 2, 3})
            if (auto d = cyclic_resolve(n, k, fixedCount))
                return *d;
        return exact_cover_resolve(all_blocks(n, k), n, k);
    });
}

} // namespace

Design bp3_provider(int m) {
    if (m % 3 != 0 || m < 3)
        throw std::invalid_argument("bp3_provider: m must be a positive multiple of 3");
    if (m == 3)
        return bp_small_complement(3, 3);
    if (m == 6)
        return bp_small_complement(6, 3);
    return searched_bp(m, 3);
}

Design bp4_seed(int n) {
    switch (n) {
    case 4: return bp_small_complement(4, 4);
    case 8: return bp_8_4();
    case 12: return searched_bp(12, 4);
    }
    throw std::invalid_argument("bp4_seed: supports n in {4, 8, 12}");
}

} // namespace baranyai::seeds
