#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mmcycle/bigraph.hpp"
#include "mmcycle/errors.hpp"
#include "mmcycle/skew.hpp"

namespace mmc {

namespace detail {

struct TokenLine {
    int line_no = 0;
    std::vector<std::string> tokens;
};

/// Splits input into token lines, dropping blank lines and `#` comments.
inline std::vector<TokenLine> tokenize(const std::string& text) {
    std::vector<TokenLine> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        TokenLine tl{no, {}};
        std::string tok;
        while (ls >> tok) tl.tokens.push_back(tok);
        if (!tl.tokens.empty()) out.push_back(std::move(tl));
    }
    return out;
}

inline std::int64_t parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw parse_error(line, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

inline Sign parse_sign(const std::string& tok, int line) {
    if (tok == "i") return Sign::In;
    if (tok == "o") return Sign::Out;
    throw parse_error(line, "expected endpoint direction 'i' or 'o', got '" + tok + "'");
}

} // namespace detail

/// Grammar: header `bigraph <n> <m>`, then m lines
/// `e <id> <u> <v> <du> <dv> <w>` with du,dv in {i,o}; `#` comments.
/// Node ids are 1-based, edge ids dense 0-based. The parsed graph is
/// validated; violations surface as parse errors with the edge's line.
inline BidirectedGraph parse_bigraph(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty input, expected 'bigraph <n> <m>'");
    const auto& hdr = lines.front();
    if (hdr.tokens.size() != 3 || hdr.tokens[0] != "bigraph")
        throw parse_error(hdr.line_no, "expected header 'bigraph <n> <m>'");
    std::int64_t n = detail::parse_int(hdr.tokens[1], hdr.line_no, "node count");
    std::int64_t m = detail::parse_int(hdr.tokens[2], hdr.line_no, "edge count");
    if (n <= 0 || n > 1'000'000) throw parse_error(hdr.line_no, "node count out of range");
    if (m < 0 || m > 10'000'000) throw parse_error(hdr.line_no, "edge count out of range");

    BidirectedGraph g;
    g.node_count = static_cast<int>(n);
    g.edges.assign(static_cast<std::size_t>(m), Edge{});
    std::vector<int> line_of(static_cast<std::size_t>(m), 0);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    if (static_cast<std::int64_t>(lines.size()) - 1 != m)
        throw parse_error(lines.back().line_no,
                          "expected " + std::to_string(m) + " edge lines, got " +
                              std::to_string(lines.size() - 1));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& tl = lines[i];
        if (tl.tokens.size() != 7 || tl.tokens[0] != "e")
            throw parse_error(tl.line_no, "expected 'e <id> <u> <v> <du> <dv> <w>'");
        std::int64_t id = detail::parse_int(tl.tokens[1], tl.line_no, "edge id");
        if (id < 0 || id >= m)
            throw parse_error(tl.line_no, "edge id " + std::to_string(id) +
                                              " outside [0, " + std::to_string(m - 1) + "]");
        if (seen[static_cast<std::size_t>(id)])
            throw parse_error(tl.line_no, "duplicate edge id " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = 1;
        Edge e;
        e.u = static_cast<int>(detail::parse_int(tl.tokens[2], tl.line_no, "node id"));
        e.v = static_cast<int>(detail::parse_int(tl.tokens[3], tl.line_no, "node id"));
        e.sign_u = detail::parse_sign(tl.tokens[4], tl.line_no);
        e.sign_v = detail::parse_sign(tl.tokens[5], tl.line_no);
        e.weight = detail::parse_int(tl.tokens[6], tl.line_no, "weight");
        g.edges[static_cast<std::size_t>(id)] = e;
        line_of[static_cast<std::size_t>(id)] = tl.line_no;
    }
    for (const BigraphViolation& v : validate_bidirected(g)) {
        int ln = v.edge >= 0 ? line_of[static_cast<std::size_t>(v.edge)] : hdr.line_no;
        throw parse_error(ln, v.detail);
    }
    return g;
}

inline std::string serialize_bigraph(const BidirectedGraph& g) {
    std::ostringstream out;
    out << "bigraph " << g.node_count << " " << g.m() << "\n";
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        out << "e " << e << " " << ed.u << " " << ed.v << " " << sign_char(ed.sign_u)
            << " " << sign_char(ed.sign_v) << " " << ed.weight << "\n";
    }
    return out.str();
}

/// Grammar: header `skewgraph <N> <M>` (N even), then M lines
/// `a <id> <mate_id> <tail> <head> <w>` followed by one line
/// `mates <m1> ... <mN>` giving the node involution.
inline SkewGraph parse_skew(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty input, expected 'skewgraph <N> <M>'");
    const auto& hdr = lines.front();
    if (hdr.tokens.size() != 3 || hdr.tokens[0] != "skewgraph")
        throw parse_error(hdr.line_no, "expected header 'skewgraph <N> <M>'");
    std::int64_t n = detail::parse_int(hdr.tokens[1], hdr.line_no, "node count");
    std::int64_t m = detail::parse_int(hdr.tokens[2], hdr.line_no, "arc count");
    if (n <= 0 || n % 2 != 0 || n > 1'000'000)
        throw parse_error(hdr.line_no, "node count must be positive and even");
    if (m < 0 || m > 10'000'000) throw parse_error(hdr.line_no, "arc count out of range");

    SkewGraph g;
    g.node_count = static_cast<int>(n);
    g.node_mate.assign(static_cast<std::size_t>(n) + 1, 0);
    g.arcs.assign(static_cast<std::size_t>(m), Arc{});
    std::vector<int> line_of(static_cast<std::size_t>(m), 0);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    bool have_mates = false;
    int mates_line = hdr.line_no;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& tl = lines[i];
        if (tl.tokens[0] == "mates") {
            if (have_mates) throw parse_error(tl.line_no, "duplicate 'mates' line");
            if (static_cast<std::int64_t>(tl.tokens.size()) - 1 != n)
                throw parse_error(tl.line_no, "expected " + std::to_string(n) +
                                                  " node mates");
            for (std::int64_t v = 1; v <= n; ++v)
                g.node_mate[static_cast<std::size_t>(v)] = static_cast<int>(
                    detail::parse_int(tl.tokens[static_cast<std::size_t>(v)], tl.line_no,
                                      "node id"));
            have_mates = true;
            mates_line = tl.line_no;
            continue;
        }
        if (tl.tokens.size() != 6 || tl.tokens[0] != "a")
            throw parse_error(tl.line_no, "expected 'a <id> <mate_id> <tail> <head> <w>'");
        std::int64_t id = detail::parse_int(tl.tokens[1], tl.line_no, "arc id");
        if (id < 0 || id >= m)
            throw parse_error(tl.line_no, "arc id " + std::to_string(id) + " outside [0, " +
                                              std::to_string(m - 1) + "]");
        if (seen[static_cast<std::size_t>(id)])
            throw parse_error(tl.line_no, "duplicate arc id " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = 1;
        Arc a;
        a.mate = static_cast<int>(detail::parse_int(tl.tokens[2], tl.line_no, "arc id"));
        a.tail = static_cast<int>(detail::parse_int(tl.tokens[3], tl.line_no, "node id"));
        a.head = static_cast<int>(detail::parse_int(tl.tokens[4], tl.line_no, "node id"));
        a.weight = detail::parse_int(tl.tokens[5], tl.line_no, "weight");
        g.arcs[static_cast<std::size_t>(id)] = a;
        line_of[static_cast<std::size_t>(id)] = tl.line_no;
    }
    if (!have_mates)
        throw parse_error(lines.back().line_no, "missing 'mates' line");
    for (std::size_t id = 0; id < seen.size(); ++id)
        if (!seen[id])
            throw parse_error(lines.back().line_no,
                              "missing arc id " + std::to_string(id));

    for (const SkewViolation& v : validate_skew(g)) {
        if (v.kind == SkewViolationKind::AsymmetricWeight) continue; // caller's call
        int ln = mates_line;
        if (v.index >= 0 && (v.kind == SkewViolationKind::SelfMateArc ||
                             v.kind == SkewViolationKind::BrokenArcInvolution ||
                             v.kind == SkewViolationKind::BrokenArcSymmetry ||
                             v.kind == SkewViolationKind::DanglingEndpoint))
            ln = line_of[static_cast<std::size_t>(v.index)];
        throw parse_error(ln, v.detail);
    }
    return g;
}

inline std::string serialize_skew(const SkewGraph& g) {
    std::ostringstream out;
    out << "skewgraph " << g.node_count << " " << g.m() << "\n";
    for (int a = 0; a < g.m(); ++a) {
        const Arc& arc = g.arcs[static_cast<std::size_t>(a)];
        out << "a " << a << " " << arc.mate << " " << arc.tail << " " << arc.head << " "
            << arc.weight << "\n";
    }
    out << "mates";
    for (int v = 1; v <= g.node_count; ++v) out << " " << g.mate_of(v);
    out << "\n";
    return out.str();
}

/// Cycle rendering: `v0 e<id> v1 e<id> ... v0`.
inline std::string format_cycle(const BidirectedGraph& g, const Path& p) {
    std::ostringstream out;
    std::vector<int> nodes = walk_nodes(g, p);
    for (std::size_t i = 0; i < p.size(); ++i)
        out << nodes[i] << " e" << p[i].edge << " ";
    out << nodes.back();
    return out.str();
}

inline std::string format_arc_cycle(const SkewGraph& g, const std::vector<int>& arcs) {
    std::ostringstream out;
    for (int a : arcs)
        out << g.arcs[static_cast<std::size_t>(a)].tail << " a" << a << " ";
    out << g.arcs[static_cast<std::size_t>(arcs.front())].tail;
    return out.str();
}

} // namespace mmc
