#ifndef RCN_POINT_IO_HPP
#define RCN_POINT_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcn/geometry.hpp"

namespace rcn {

// Sets that fail general position are kept out of `sets` and reported in
// `invalid` as (set index, reason); structural problems throw.
struct PointFileData {
    std::vector<PointSet> sets;
    std::vector<std::pair<int, std::string>> invalid;
};

namespace detail {

inline bool data_line(const std::string& line, std::string& out) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) return false;       // blank
    if (line[i] == '#') return false;               // comment
    out = line.substr(i);
    while (!out.empty() && (out.back() == '\r' || out.back() == ' ' || out.back() == '\t'))
        out.pop_back();
    return true;
}

}  // namespace detail

// Text format: first line of a set is n, followed by n lines "x y".
// '#' starts a comment line; a blank line separates sets.
inline PointFileData read_point_file(std::istream& in) {
    PointFileData out;
    std::string line, data;
    int lineno = 0, expect = 0, set_index = 0;
    std::vector<Point> cur;
    bool in_set = false;
    auto flush = [&](int at_line) {
        if (!in_set) return;
        if (static_cast<int>(cur.size()) != expect)
            throw std::runtime_error("line " + std::to_string(at_line) + ": set " +
                                     std::to_string(set_index) + " has " +
                                     std::to_string(cur.size()) + " of " +
                                     std::to_string(expect) + " points");
        std::string why = cur.size() < 3 ? std::string("fewer than 3 points")
                                         : general_position_violation(cur);
        if (why.empty())
            out.sets.push_back(PointSet{cur});
        else
            out.invalid.emplace_back(set_index, why);
        cur.clear();
        in_set = false;
        ++set_index;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!detail::data_line(line, data)) {
            // blank line ends the current set (errors if short); comments do not
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos && in_set) flush(lineno);
            continue;
        }
        std::istringstream ls(data);
        if (!in_set) {
            if (!(ls >> expect) || expect < 1 || !(ls >> std::ws).eof())
                throw std::runtime_error("line " + std::to_string(lineno) + ": expected set size");
            in_set = true;
        } else {
            Point p;
            if (!(ls >> p.x >> p.y) || !(ls >> std::ws).eof())
                throw std::runtime_error("line " + std::to_string(lineno) + ": expected \"x y\"");
            cur.push_back(p);
            if (static_cast<int>(cur.size()) > expect)
                throw std::runtime_error("line " + std::to_string(lineno) + ": extra point in set");
        }
    }
    flush(lineno);
    if (out.sets.empty() && out.invalid.empty()) throw std::runtime_error("no point sets in input");
    return out;
}

inline PointFileData read_point_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_point_file(f);
}

inline void write_point_file(std::ostream& os, const PointSet& ps, const std::string& comment = {}) {
    if (!comment.empty()) os << "# " << comment << "\n";
    os << ps.n() << "\n";
    for (const Point& p : ps.points) os << p.x << " " << p.y << "\n";
}

// Headerless binary order-type database: per point two unsigned coordinates,
// 1 byte each (bits=8) or 2 bytes little-endian (bits=16); n supplied out of band.
inline PointFileData read_order_type_db(std::istream& in, int n, int bits) {
    if (n < 3) throw std::invalid_argument("order-type db: n must be at least 3");
    if (bits != 8 && bits != 16) throw std::invalid_argument("order-type db: bits must be 8 or 16");
    std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const size_t per_coord = bits / 8, per_set = static_cast<size_t>(n) * 2 * per_coord;
    if (raw.empty()) throw std::runtime_error("order-type db: empty file");
    if (raw.size() % per_set != 0)
        throw std::runtime_error("order-type db: truncated record at byte offset " +
                                 std::to_string(raw.size() - raw.size() % per_set));
    PointFileData out;
    const unsigned char* b = reinterpret_cast<const unsigned char*>(raw.data());
    int num_sets = static_cast<int>(raw.size() / per_set);
    for (int s = 0; s < num_sets; ++s) {
        std::vector<Point> pts(n);
        const unsigned char* rec = b + s * per_set;
        for (int i = 0; i < n; ++i) {
            auto rd = [&](size_t off) -> long long {
                return bits == 8 ? rec[off] : rec[off] | (rec[off + 1] << 8);
            };
            pts[i].x = rd(static_cast<size_t>(i) * 2 * per_coord);
            pts[i].y = rd(static_cast<size_t>(i) * 2 * per_coord + per_coord);
        }
        std::string why = general_position_violation(pts);
        if (why.empty())
            out.sets.push_back(PointSet{std::move(pts)});
        else
            out.invalid.emplace_back(s, why);
    }
    return out;
}

inline PointFileData read_order_type_db(const std::string& path, int n, int bits) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_order_type_db(f, n, bits);
}

inline void write_order_type_db(std::ostream& os, const std::vector<PointSet>& sets, int bits) {
    if (bits != 8 && bits != 16) throw std::invalid_argument("order-type db: bits must be 8 or 16");
    const long long cap = bits == 8 ? 255 : 65535;
    for (const PointSet& ps : sets)
        for (const Point& p : ps.points) {
            if (p.x < 0 || p.y < 0 || p.x > cap || p.y > cap)
                throw std::invalid_argument("order-type db: coordinate out of unsigned range");
            for (long long v : {p.x, p.y}) {
                os.put(static_cast<char>(v & 0xff));
                if (bits == 16) os.put(static_cast<char>((v >> 8) & 0xff));
            }
        }
}

}  // namespace rcn

#endif
