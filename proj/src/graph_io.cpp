#include "qwalk/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

[[noreturn]] void bad_graph6(const std::string& why) {
    throw std::invalid_argument("graph6: " + why);
}

} // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        bad_graph6("empty input");
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126)
        bad_graph6("extended (n > 62) forms are not supported");
    if (first < 63 || first > 125)
        bad_graph6("invalid order byte");
    const int n = first - 63;
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) != 1 + bytes)
        bad_graph6("malformed length: expected " + std::to_string(1 + bytes) +
                   " characters for n=" + std::to_string(n) + ", got " +
                   std::to_string(line.size()));
    Graph g(n);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
            if (c < 63 || c > 126)
                bad_graph6("character outside ASCII 63..126");
            if ((c - 63) >> (5 - bit % 6) & 1)
                g.add_edge(u, v);
        }
    for (; bit < 6 * bytes; ++bit) {
        unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
        if (c < 63 || c > 126)
            bad_graph6("character outside ASCII 63..126");
        if ((c - 63) >> (5 - bit % 6) & 1)
            bad_graph6("nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    if (g.is_weighted())
        throw std::invalid_argument("to_graph6: weighted graphs cannot be encoded");
    const int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("to_graph6: n > 62 requires the extended form, "
                                    "which is not supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    out.resize(1 + (bits + 5) / 6, static_cast<char>(63));
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v))
                out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("edge list: missing header line \"n m\"");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: malformed header line \"" + line + "\"");
    std::string trailing;
    if (header >> trailing)
        throw std::invalid_argument("edge list: trailing tokens in header");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edge lines, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0, w = 1;
        if (!(es >> u >> v))
            throw std::invalid_argument("edge list: malformed edge line \"" + line + "\"");
        if (!(es >> w))
            w = 1;
        else if (es >> trailing)
            throw std::invalid_argument("edge list: trailing tokens in edge line \"" + line +
                                        "\"");
        g.add_edge(static_cast<int>(u), static_cast<int>(v), w);
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    const bool weighted = g.is_weighted();
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (weighted)
            out << ' ' << e.w;
        out << '\n';
    }
    return out.str();
}

Graph parse_generator_spec(std::string_view spec) {
    auto take_param = [&](std::string_view rest) -> int {
        if (!rest.empty() && (rest[0] == ':' || rest[0] == ' '))
            rest.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            throw std::invalid_argument("generator spec: bad parameter in \"" +
                                        std::string(spec) + "\"");
        return value;
    };
    // longest prefix first, so "p3power" is not read as path(3)
    struct Family {
        std::string_view name;
        Graph (*make)(int);
    };
    static constexpr auto p3power = [](int k) { return cartesian_power(path(3), k); };
    const Family families[] = {
        {"p3power", +p3power},   {"hypercube", &hypercube}, {"complete", &complete},
        {"cycle", &cycle},       {"path", &path},           {"star", &star},
        {"q", &hypercube},       {"k", &complete},          {"c", &cycle},
        {"p", &path},            {"s", &star},
    };
    for (const Family& f : families)
        if (spec.substr(0, f.name.size()) == f.name)
            return f.make(take_param(spec.substr(f.name.size())));
    throw std::invalid_argument("generator spec: unknown family in \"" + std::string(spec) +
                                "\"");
}

} // namespace qwalk
