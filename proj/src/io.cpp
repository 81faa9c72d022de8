#include "baranyai/io.hpp"

#include <fstream>
#include <sstream>

namespace baranyai {

void write_class_line(std::ostream& os, const ParallelClass& c) {
    for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
        if (bi)
            os << ';';
        const Block& b = c.blocks[bi];
        for (int i = 0; i < b.size(); ++i)
            os << (i ? " " : "") << b[i];
    }
    os << '\n';
}

void write_class_line_labeled(std::ostream& os, const ParallelClass& c, int t) {
    for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
        if (bi)
            os << ';';
        const Block& b = c.blocks[bi];
        for (int i = 0; i < b.size(); ++i)
            os << (i ? " " : "") << '(' << b[i] % t << ',' << b[i] / t << ')';
    }
    os << '\n';
}

void write_design(std::ostream& os, const Design& d) {
    os << "BARANYAI v1 n=" << d.n << " k=" << d.k << " classes=" << d.classes.size()
       << " provenance=" << (d.provenance.empty() ? "unknown" : d.provenance) << '\n';
    for (const ParallelClass& c : d.classes)
        write_class_line(os, c);
}

std::string design_to_string(const Design& d) {
    std::ostringstream os;
    write_design(os, d);
    return os.str();
}

namespace {

std::string expect_field(std::istringstream& header, const std::string& key) {
    std::string token;
    if (!(header >> token) || token.rfind(key + "=", 0) != 0)
        throw std::runtime_error("design file: malformed header, expected " + key + "=...");
    return token.substr(key.size() + 1);
}

} // namespace

Design read_design(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("design file: empty input");
    std::istringstream header(line);
    std::string magic, version;
    header >> magic >> version;
    if (magic != "BARANYAI" || version != "v1")
        throw std::runtime_error("design file: bad magic");

    Design d;
    d.n = std::stoi(expect_field(header, "n"));
    d.k = std::stoi(expect_field(header, "k"));
    std::size_t classCount = static_cast<std::size_t>(std::stoll(expect_field(header, "classes")));
    d.provenance = expect_field(header, "provenance");

    d.classes.reserve(classCount);
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        ParallelClass c;
        std::istringstream ls(line);
        std::string blockText;
        while (std::getline(ls, blockText, ';')) {
            std::istringstream bs(blockText);
            std::vector<Point> pts;
            long v;
            while (bs >> v) {
                if (v < 0 || v >= d.n)
                    throw std::runtime_error("design file: point out of range: " + std::to_string(v));
                pts.push_back(static_cast<Point>(v));
            }
            if (pts.size() != static_cast<std::size_t>(d.k))
                throw std::runtime_error("design file: block size mismatch");
            for (std::size_t i = 1; i < pts.size(); ++i)
                if (pts[i - 1] >= pts[i])
                    throw std::runtime_error("design file: block points must be strictly ascending");
            c.blocks.push_back(Block(std::span<const Point>(pts.data(), pts.size())));
        }
        d.classes.push_back(std::move(c));
    }
    if (d.classes.size() != classCount)
        throw std::runtime_error("design file: header announces " + std::to_string(classCount) +
                                 " classes, body has " + std::to_string(d.classes.size()));
    return d;
}

Design read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open design file: " + path);
    return read_design(in);
}

void write_design_file(const std::string& path, const Design& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write design file: " + path);
    write_design(out, d);
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

} // namespace baranyai
