#include "ic/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ic {

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header");
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.n() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
}

Graph parse_graph6(const std::string& line) {
    std::size_t at = 0;
    if (line.rfind(">>graph6<<", 0) == 0) at = 10;
    if (at >= line.size()) throw std::runtime_error("graph6: empty");
    int n = line[at] - 63;
    if (n < 0 || n > 62) throw std::runtime_error("graph6: only n < 63 supported");
    ++at;
    Graph g(n);
    int bitpos = 0;
    auto next_bit = [&]() -> int {
        std::size_t byte = at + static_cast<std::size_t>(bitpos / 6);
        if (byte >= line.size()) throw std::runtime_error("graph6: truncated");
        int b = (line[byte] - 63) >> (5 - bitpos % 6) & 1;
        ++bitpos;
        return b;
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (next_bit()) g.add_edge(u, v);
    return g;
}

Graph load_graph(const std::string& path) {
    if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line);
        throw std::runtime_error("graph6 file has no graphs: " + path);
    }
    return read_edge_list_file(path);
}

}  // namespace ic
