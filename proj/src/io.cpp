#include "satpart/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "satpart/errors.hpp"

namespace satpart {

namespace {

struct Line {
    int number = 0;
    std::string directive;
    std::vector<long long> args;
};

// Splits into directive lines, dropping comments and blanks. Every argument
// must be a plain non-negative integer.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        Line line{number, head, {}};
        std::string tok;
        while (ls >> tok) {
            try {
                size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                line.args.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("expected non-negative integer, got '" + tok + "'", number);
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

void expect_args(const Line& l, size_t count) {
    if (l.args.size() != count)
        throw ParseError("directive '" + l.directive + "' takes " + std::to_string(count) +
                             " argument(s), got " + std::to_string(l.args.size()),
                         l.number);
}

int vertex_arg(const Line& l, size_t idx, long long n) {
    long long v = l.args[idx];
    if (v >= n)
        throw ParseError("vertex id " + std::to_string(v) + " out of range [0," +
                             std::to_string(n) + ")",
                         l.number);
    return static_cast<int>(v);
}

struct Header {
    long long n = 0;
    long long m = 0;
};

Header parse_header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError("empty instance", 1);
    const Line& p = lines.front();
    if (p.directive != "p") throw ParseError("expected 'p <n> <m>' header", p.number);
    expect_args(p, 2);
    if (p.args[0] > 2'000'000)
        throw ParseError("vertex count too large", p.number);
    return Header{p.args[0], p.args[1]};
}

}  // namespace

FscInstance parse_instance(const std::string& text) {
    const auto lines = tokenize(text);
    const Header hdr = parse_header(lines);

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::vector<int> forced_one, forced_two;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.directive == "e") {
            expect_args(l, 2);
            int u = vertex_arg(l, 0, hdr.n), v = vertex_arg(l, 1, hdr.n);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), l.number);
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
                throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v),
                                 l.number);
            edges.emplace_back(u, v);
        } else if (l.directive == "tri") {
            expect_args(l, 1);
            forced_one.push_back(vertex_arg(l, 0, hdr.n));
        } else if (l.directive == "sq") {
            expect_args(l, 1);
            forced_two.push_back(vertex_arg(l, 0, hdr.n));
        } else if (l.directive == "pair") {
            expect_args(l, 2);
            pairs.emplace_back(vertex_arg(l, 0, hdr.n), vertex_arg(l, 1, hdr.n));
        } else {
            throw ParseError("unknown directive '" + l.directive + "'", l.number);
        }
    }
    if (static_cast<long long>(edges.size()) != hdr.m)
        throw ParseError("header announces " + std::to_string(hdr.m) + " edges, found " +
                             std::to_string(edges.size()),
                         lines.front().number);
    try {
        return FscInstance(Graph::from_edges(static_cast<int>(hdr.n), edges),
                           std::move(forced_one), std::move(forced_two), std::move(pairs));
    } catch (const InputError& err) {
        throw ParseError(err.what(), lines.front().number);
    }
}

std::string serialize_instance(const FscInstance& inst) {
    std::ostringstream out;
    out << "p " << inst.graph.n() << " " << inst.graph.m() << "\n";
    for (auto [u, v] : inst.graph.edges()) out << "e " << u << " " << v << "\n";
    for (int v : inst.forced_one) out << "tri " << v << "\n";
    for (int v : inst.forced_two) out << "sq " << v << "\n";
    for (auto [a, b] : inst.pairs) out << "pair " << a << " " << b << "\n";
    return out.str();
}

MmoInstance parse_mmo(const std::string& text) {
    const auto lines = tokenize(text);
    const Header hdr = parse_header(lines);

    std::vector<WeightedEdge> edges;
    long long r = -1;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.directive == "e") {
            expect_args(l, 3);
            int u = vertex_arg(l, 0, hdr.n), v = vertex_arg(l, 1, hdr.n);
            if (l.args[2] < 1 || l.args[2] > kMaxMmoWeight)
                throw ParseError("edge weight must be in [1," + std::to_string(kMaxMmoWeight) + "]",
                                 l.number);
            edges.push_back({u, v, static_cast<int>(l.args[2])});
        } else if (l.directive == "r") {
            expect_args(l, 1);
            if (r >= 0) throw ParseError("duplicate 'r' line", l.number);
            r = l.args[0];
        } else {
            throw ParseError("unknown directive '" + l.directive + "' in MMO instance", l.number);
        }
    }
    if (static_cast<long long>(edges.size()) != hdr.m)
        throw ParseError("header announces " + std::to_string(hdr.m) + " edges, found " +
                             std::to_string(edges.size()),
                         lines.front().number);
    if (r < 1) throw ParseError("missing or non-positive 'r' line", lines.front().number);
    try {
        return MmoInstance(static_cast<int>(hdr.n), std::move(edges), static_cast<int>(r));
    } catch (const InputError& err) {
        throw ParseError(err.what(), lines.front().number);
    }
}

std::string serialize_mmo(const MmoInstance& m) {
    std::ostringstream out;
    out << "p " << m.graph.n() << " " << m.edges.size() << "\n";
    for (const WeightedEdge& e : m.edges) out << "e " << e.u << " " << e.v << " " << e.w << "\n";
    out << "r " << m.r << "\n";
    return out.str();
}

Orientation parse_orientation(const std::string& text, const MmoInstance& m) {
    const auto lines = tokenize(text);
    std::map<std::pair<int, int>, std::pair<int, int>> by_edge;  // {min,max} -> (tail,head)
    for (const Line& l : lines) {
        if (l.directive != "o")
            throw ParseError("orientation files contain only 'o <tail> <head>' lines", l.number);
        expect_args(l, 2);
        int t = vertex_arg(l, 0, m.graph.n()), h = vertex_arg(l, 1, m.graph.n());
        auto key = std::make_pair(std::min(t, h), std::max(t, h));
        if (!by_edge.emplace(key, std::make_pair(t, h)).second)
            throw ParseError("edge oriented twice", l.number);
    }
    Orientation o;
    for (const WeightedEdge& e : m.edges) {
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        auto it = by_edge.find(key);
        if (it == by_edge.end())
            throw InputError("orientation missing edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v));
        o.dir.push_back(it->second);
        by_edge.erase(it);
    }
    if (!by_edge.empty()) throw InputError("orientation contains edges not in the instance");
    return o;
}

std::string serialize_orientation(const MmoInstance& m, const Orientation& o) {
    internal_check(o.dir.size() == m.edges.size(), "orientation size mismatch");
    std::ostringstream out;
    for (auto [t, h] : o.dir) out << "o " << t << " " << h << "\n";
    return out.str();
}

std::string partition_to_json(const Partition& p) {
    nlohmann::json j;
    j["one"] = p.vertices_on(Side::One);
    j["two"] = p.vertices_on(Side::Two);
    return j.dump();
}

Partition partition_from_json(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw InputError(std::string("bad witness JSON: ") + err.what());
    }
    if (!j.is_object() || !j.contains("one") || !j.contains("two"))
        throw InputError("witness JSON must contain 'one' and 'two' vertex lists");
    std::vector<bool> placed(static_cast<size_t>(n), false);
    std::vector<int> ones;
    auto take = [&](const nlohmann::json& arr, bool to_one) {
        if (!arr.is_array()) throw InputError("witness sides must be arrays");
        for (const auto& el : arr) {
            if (!el.is_number_integer()) throw InputError("witness vertices must be integers");
            long long v = el.get<long long>();
            if (v < 0 || v >= n) throw InputError("witness vertex out of range");
            if (placed[static_cast<size_t>(v)]) throw InputError("witness assigns a vertex twice");
            placed[static_cast<size_t>(v)] = true;
            if (to_one) ones.push_back(static_cast<int>(v));
        }
    };
    take(j["one"], true);
    take(j["two"], false);
    for (bool b : placed)
        if (!b) throw InputError("witness does not cover every vertex");
    return Partition::from_side_one(n, ones);
}

std::string reduction_map_to_json(const ReductionMap& map) {
    nlohmann::json names = nlohmann::json::object();
    for (size_t i = 0; i < map.gadget_names().size(); ++i)
        names[map.gadget_names()[i]] = map.original_count() + static_cast<int>(i);
    nlohmann::json j;
    j["schema"] = 1;
    j["original_count"] = map.original_count();
    j["names"] = names;
    return j.dump(2) + "\n";
}

ReductionMap reduction_map_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw InputError(std::string("bad name-table JSON: ") + err.what());
    }
    if (!j.is_object() || !j.contains("original_count") || !j.contains("names"))
        throw InputError("name table needs 'original_count' and 'names'");
    ReductionMap map(j["original_count"].get<int>());
    std::map<int, std::string> ordered;
    for (auto& [name, id] : j["names"].items()) {
        if (!id.is_number_integer()) throw InputError("name table ids must be integers");
        if (!ordered.emplace(id.get<int>(), name).second)
            throw InputError("name table assigns an id twice");
    }
    for (auto& [id, name] : ordered) map.insert(name, id);
    return map;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

}  // namespace satpart
