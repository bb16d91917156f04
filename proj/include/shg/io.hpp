#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "shg/errors.hpp"
#include "shg/family.hpp"

namespace shg {

// Text formats
// ------------
// SHG (single family):            SHGM (one family per color):
//   SHG 1                           SHGM 1
//   n=5 k=2                         n=6 t=2
//   1 2                             family k=2
//   1 3                             1 2
//                                   family k=3
//                                   1 2 3
// Vertices are 1-based and strictly increasing within a line. Lines starting
// with '#' (after optional whitespace) and blank lines are ignored. Parse
// errors carry the 1-based line number.

namespace detail {

inline std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Reads the next content line, skipping blanks and comments. Returns false at
// end of input; line_no tracks the position for error messages.
inline bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        line = trimmed(raw);
        if (line.empty() || line[0] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] inline void fail(int line_no, const std::string& msg) {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
}

inline int parse_int(const std::string& tok, int line_no, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        fail(line_no, "expected integer " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) fail(line_no, "expected integer " + what + ", got '" + tok + "'");
    return value;
}

// Parses "key=value" returning value; the key must match exactly.
inline int parse_keyed(const std::string& tok, const std::string& key, int line_no) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0) fail(line_no, "expected '" + prefix + "<int>', got '" + tok + "'");
    return parse_int(tok.substr(prefix.size()), line_no, key);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline Edge parse_edge_line(const std::string& line, int n, int k, int line_no) {
    std::vector<std::string> toks = split_ws(line);
    if (static_cast<int>(toks.size()) != k)
        fail(line_no, "expected " + std::to_string(k) + " vertices, got " +
                          std::to_string(toks.size()));
    std::vector<Vertex> vs;
    vs.reserve(toks.size());
    for (const std::string& tok : toks) {
        int v = parse_int(tok, line_no, "vertex");
        if (v < 1 || v > n)
            fail(line_no, "vertex " + std::to_string(v) + " outside 1..n with n=" +
                              std::to_string(n));
        if (!vs.empty() && v <= vs.back())
            fail(line_no, "vertices must be strictly increasing");
        vs.push_back(v);
    }
    return Edge(std::move(vs));
}

}  // namespace detail

inline SetFamily parse_shg(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!detail::next_content_line(in, line, line_no)) detail::fail(line_no + 1, "missing 'SHG 1' header");
    if (line != "SHG 1") detail::fail(line_no, "expected 'SHG 1' header, got '" + line + "'");
    if (!detail::next_content_line(in, line, line_no)) detail::fail(line_no + 1, "missing 'n=<int> k=<int>' line");
    std::vector<std::string> toks = detail::split_ws(line);
    if (toks.size() != 2) detail::fail(line_no, "expected 'n=<int> k=<int>', got '" + line + "'");
    int n = detail::parse_keyed(toks[0], "n", line_no);
    int k = detail::parse_keyed(toks[1], "k", line_no);
    if (n < 0) detail::fail(line_no, "n must be nonnegative");
    if (k < 1) detail::fail(line_no, "k must be at least 1");
    std::vector<Edge> edges;
    while (detail::next_content_line(in, line, line_no))
        edges.push_back(detail::parse_edge_line(line, n, k, line_no));
    return make_family(n, k, std::move(edges));
}

inline ColoredFamilies parse_shgm(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!detail::next_content_line(in, line, line_no)) detail::fail(line_no + 1, "missing 'SHGM 1' header");
    if (line != "SHGM 1") detail::fail(line_no, "expected 'SHGM 1' header, got '" + line + "'");
    if (!detail::next_content_line(in, line, line_no)) detail::fail(line_no + 1, "missing 'n=<int> t=<int>' line");
    std::vector<std::string> toks = detail::split_ws(line);
    if (toks.size() != 2) detail::fail(line_no, "expected 'n=<int> t=<int>', got '" + line + "'");
    int n = detail::parse_keyed(toks[0], "n", line_no);
    int t = detail::parse_keyed(toks[1], "t", line_no);
    if (n < 0) detail::fail(line_no, "n must be nonnegative");
    if (t < 1) detail::fail(line_no, "t must be at least 1");

    std::vector<SetFamily> fams;
    int cur_k = 0;
    std::vector<Edge> cur_edges;
    bool in_family = false;
    auto flush = [&]() {
        if (in_family) fams.push_back(make_family(n, cur_k, std::move(cur_edges)));
        cur_edges.clear();
    };
    while (detail::next_content_line(in, line, line_no)) {
        if (line.rfind("family", 0) == 0) {
            std::vector<std::string> ftoks = detail::split_ws(line);
            if (ftoks.size() != 2 || ftoks[0] != "family")
                detail::fail(line_no, "expected 'family k=<int>', got '" + line + "'");
            flush();
            cur_k = detail::parse_keyed(ftoks[1], "k", line_no);
            if (cur_k < 1) detail::fail(line_no, "k must be at least 1");
            in_family = true;
        } else {
            if (!in_family) detail::fail(line_no, "edge line before any 'family k=<int>' header");
            cur_edges.push_back(detail::parse_edge_line(line, n, cur_k, line_no));
        }
    }
    flush();
    if (static_cast<int>(fams.size()) != t)
        detail::fail(line_no, "declared t=" + std::to_string(t) + " but found " +
                                  std::to_string(fams.size()) + " family blocks");
    return ColoredFamilies(n, std::move(fams));
}

inline void serialize_shg(const SetFamily& f, std::ostream& out) {
    out << "SHG 1\n";
    out << "n=" << f.n() << " k=" << f.k() << "\n";
    for (const Edge& e : f.edges()) {
        bool first = true;
        for (Vertex v : e) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

inline void serialize_shgm(const ColoredFamilies& fams, std::ostream& out) {
    out << "SHGM 1\n";
    out << "n=" << fams.n() << " t=" << fams.t() << "\n";
    for (const SetFamily& f : fams.families()) {
        out << "family k=" << f.k() << "\n";
        for (const Edge& e : f.edges()) {
            bool first = true;
            for (Vertex v : e) {
                if (!first) out << ' ';
                out << v;
                first = false;
            }
            out << '\n';
        }
    }
}

inline std::string to_shg_string(const SetFamily& f) {
    std::ostringstream os;
    serialize_shg(f, os);
    return os.str();
}

inline std::string to_shgm_string(const ColoredFamilies& fams) {
    std::ostringstream os;
    serialize_shgm(fams, os);
    return os.str();
}

inline SetFamily parse_shg_string(const std::string& s) {
    std::istringstream is(s);
    return parse_shg(is);
}

inline ColoredFamilies parse_shgm_string(const std::string& s) {
    std::istringstream is(s);
    return parse_shgm(is);
}

}  // namespace shg
