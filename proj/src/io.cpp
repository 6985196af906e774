#include "pmpack/io.hpp"

#include <fstream>
#include <sstream>

namespace pmpack {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t at = line.find_first_not_of(" \t");
        if (at == std::string::npos) continue;
        if (line[at] == '#') continue;
        return true;
    }
    return false;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::ParseError, "cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorKind::ParseError, "cannot open " + path + " for writing");
    return out;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    require(next_data_line(in, line), ErrorKind::ParseError, "missing graph header");
    std::istringstream head(line);
    long long n = -1, m = -1;
    head >> n >> m;
    require(!head.fail() && n >= 0 && m >= 0, ErrorKind::ParseError,
            "bad graph header: " + line);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        require(next_data_line(in, line), ErrorKind::ParseError,
                "expected " + std::to_string(m) + " edges, file ended after " + std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        row >> u >> v;
        require(!row.fail(), ErrorKind::ParseError, "bad edge line: " + line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

MatchingFamily read_family(std::istream& in, int host_n) {
    MatchingFamily fam(host_n);
    EdgeSet current;
    bool any_line = false;
    std::string line;
    while (next_data_line(in, line)) {
        any_line = true;
        std::size_t at = line.find_first_not_of(" \t");
        if (line.compare(at, 2, "--") == 0) {
            fam.matchings.emplace_back(current, host_n);
            current.clear();
            continue;
        }
        std::size_t dash = line.find('-', at);
        require(dash != std::string::npos, ErrorKind::ParseError, "bad matching line: " + line);
        try {
            int u = std::stoi(line.substr(at, dash - at));
            int v = std::stoi(line.substr(dash + 1));
            current.emplace_back(u, v);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad matching line: " + line);
        }
    }
    if (any_line || !current.empty()) fam.matchings.emplace_back(current, host_n);
    return fam;
}

MatchingFamily read_family_file(const std::string& path, int host_n) {
    auto in = open_in(path);
    return read_family(in, host_n);
}

void write_family(std::ostream& out, const MatchingFamily& fam) {
    for (int i = 0; i < fam.size(); ++i) {
        if (i > 0) out << "--\n";
        for (const Edge& e : fam.matchings[i].edges) out << e.u << '-' << e.v << '\n';
    }
}

void write_family_file(const std::string& path, const MatchingFamily& fam) {
    auto out = open_out(path);
    write_family(out, fam);
}

std::string family_to_string(const MatchingFamily& fam) {
    std::ostringstream out;
    write_family(out, fam);
    return out.str();
}

} // namespace pmpack
