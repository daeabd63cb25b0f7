#include "rotg/mgf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rotg/errors.hpp"

namespace rotg {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string token;
        while (ls >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long long parse_int(const Line& line, size_t idx, const char* what) {
    if (idx >= line.tokens.size()) throw ParseError(line.number, std::string("missing ") + what);
    const std::string& tok = line.tokens[idx];
    try {
        size_t used = 0;
        const long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

MgfDocument read_mgf(const std::string& text) {
    const auto lines = tokenize(text);
    size_t at = 0;
    auto next = [&]() -> const Line& {
        if (at >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "unexpected end of document");
        return lines[at++];
    };

    {
        const Line& header = next();
        if (header.tokens.size() != 2 || header.tokens[0] != "mgf" || header.tokens[1] != "1")
            throw ParseError(header.number, "expected header 'mgf 1'");
    }
    const Line& counts = next();
    const long long n = parse_int(counts, 0, "vertex count");
    const long long m = parse_int(counts, 1, "edge count");
    if (counts.tokens.size() != 2) throw ParseError(counts.number, "expected '<n> <m>'");
    if (n < 0 || m < 0) throw ParseError(counts.number, "counts must be non-negative");

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (long long i = 0; i < m; ++i) {
        const Line& line = next();
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
        const long long u = parse_int(line, 0, "edge endpoint");
        const long long v = parse_int(line, 1, "edge endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line.number, "edge endpoint out of range");
        if (u == v) throw ParseError(line.number, "loop edges are not allowed");
        if (u > v) throw ParseError(line.number, "edge endpoints must satisfy u < v");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }

    MgfDocument doc;
    doc.graph = MultiGraph(static_cast<int>(n), edges);

    while (at < lines.size()) {
        const Line& section = next();
        const std::string& kind = section.tokens[0];
        if (kind == "tree") {
            if (doc.tree) throw ParseError(section.number, "duplicate tree section");
            if (section.tokens.size() != 3) throw ParseError(section.number, "expected 'tree <root> <t>'");
            RootedSpanningTree tree;
            tree.root = static_cast<VertexId>(parse_int(section, 1, "tree root"));
            const long long count = parse_int(section, 2, "tree edge count");
            for (long long i = 0; i < count; ++i) {
                const Line& line = next();
                if (line.tokens.size() != 1) throw ParseError(line.number, "expected one tree edge index");
                const long long e = parse_int(line, 0, "tree edge index");
                if (e < 0 || e >= m) throw ParseError(line.number, "tree edge index out of range");
                tree.edges.push_back(static_cast<EdgeId>(e));
            }
            try {
                analyze_tree(doc.graph, tree);
            } catch (const std::exception& ex) {
                throw ParseError(section.number, std::string("invalid tree section: ") + ex.what());
            }
            doc.tree = std::move(tree);
        } else if (kind == "perm") {
            if (doc.permutation) throw ParseError(section.number, "duplicate perm section");
            if (section.tokens.size() != 2) throw ParseError(section.number, "expected 'perm <n>'");
            const long long count = parse_int(section, 1, "perm size");
            if (count != n) throw ParseError(section.number, "perm size must equal the vertex count");
            VertexPermutation perm;
            for (long long i = 0; i < count; ++i) {
                const Line& line = next();
                if (line.tokens.size() != 1) throw ParseError(line.number, "expected one image");
                const long long image = parse_int(line, 0, "image");
                if (image < 0 || image >= n) throw ParseError(line.number, "image out of range");
                perm.image.push_back(static_cast<VertexId>(image));
            }
            if (!is_bijection(perm)) throw ParseError(section.number, "perm section is not a bijection");
            doc.permutation = std::move(perm);
        } else if (kind == "script") {
            if (doc.script) throw ParseError(section.number, "duplicate script section");
            if (section.tokens.size() != 2) throw ParseError(section.number, "expected 'script <s>'");
            const long long count = parse_int(section, 1, "script length");
            ReductionScript script;
            for (long long i = 0; i < count; ++i) {
                const Line& line = next();
                if (line.tokens.empty() || line.tokens[0] != "reduce")
                    throw ParseError(line.number, "expected 'reduce <k> <v1> ... <vk>'");
                const long long k = parse_int(line, 1, "set size");
                if (k < 0 || k % 2 != 0) throw ParseError(line.number, "reduction sets must have even size");
                if (static_cast<long long>(line.tokens.size()) != k + 2)
                    throw ParseError(line.number, "set size does not match the listed vertices");
                ReductionStep step;
                for (long long j = 0; j < k; ++j) {
                    const long long v = parse_int(line, static_cast<size_t>(2 + j), "set member");
                    if (v < 0 || v >= n) throw ParseError(line.number, "set member out of range");
                    step.vertices.push_back(static_cast<VertexId>(v));
                }
                std::sort(step.vertices.begin(), step.vertices.end());
                script.steps.push_back(std::move(step));
            }
            doc.script = std::move(script);
        } else {
            throw ParseError(section.number, "unknown section '" + kind + "'");
        }
    }
    return doc;
}

std::string write_mgf(const MgfDocument& doc) {
    const MultiGraph& g = doc.graph;
    const int m = g.edge_count();

    // canonical edge order: by endpoints, parallel copies in original order
    std::vector<EdgeId> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return std::pair(g.edge(a).u, g.edge(a).v) < std::pair(g.edge(b).u, g.edge(b).v);
    });
    std::vector<EdgeId> position(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) position[order[i]] = i;

    std::ostringstream out;
    out << "mgf 1\n" << g.vertex_count() << ' ' << m << '\n';
    for (EdgeId e : order) out << g.edge(e).u << ' ' << g.edge(e).v << '\n';

    if (doc.tree) {
        std::vector<EdgeId> ids;
        ids.reserve(doc.tree->edges.size());
        for (EdgeId e : doc.tree->edges) ids.push_back(position[e]);
        std::sort(ids.begin(), ids.end());
        out << "tree " << doc.tree->root << ' ' << ids.size() << '\n';
        for (EdgeId e : ids) out << e << '\n';
    }
    if (doc.permutation) {
        out << "perm " << doc.permutation->size() << '\n';
        for (VertexId v : doc.permutation->image) out << v << '\n';
    }
    if (doc.script) {
        out << "script " << doc.script->steps.size() << '\n';
        for (const auto& step : doc.script->steps) {
            std::vector<VertexId> vs = step.vertices;
            std::sort(vs.begin(), vs.end());
            out << "reduce " << vs.size();
            for (VertexId v : vs) out << ' ' << v;
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace rotg
