#include "kordered/graph6.hpp"

#include <istream>
#include <sstream>

#include "kordered/errors.hpp"

namespace kord {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxOrder = 68719476735ull; // 2^36 - 1

void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }
}

class Reader {
public:
    Reader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    bool done() const { return pos_ == text_.size(); }
    std::size_t offset() const { return base_ + pos_; }

    unsigned take() {
        if (done()) {
            throw ParseError("graph6: truncated input", offset());
        }
        const auto c = static_cast<unsigned char>(text_[pos_]);
        if (c < 63 || c > 126) {
            throw ParseError("graph6: invalid character", offset());
        }
        ++pos_;
        return c - 63u;
    }

    unsigned peek_raw() const { return static_cast<unsigned char>(text_[pos_]); }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::size_t read_order(Reader& r) {
    if (r.done()) {
        throw ParseError("graph6: empty input", r.offset());
    }
    if (r.peek_raw() != 126) {
        return r.take();
    }
    r.take();
    std::size_t digits = 3;
    if (!r.done() && r.peek_raw() == 126) {
        r.take();
        digits = 6;
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < digits; ++i) {
        n = (n << 6) | r.take();
    }
    if (n > kMaxOrder) {
        throw ParseError("graph6: order too large", r.offset());
    }
    return n;
}

} // namespace

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_order(out, n);
    unsigned chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    }
    return out;
}

Graph decode_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    Reader r(text, base);
    const std::size_t n = read_order(r);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;

    GraphBuilder b(n);
    Vertex i = 0;
    Vertex j = 1;
    std::size_t consumed = 0;
    for (std::size_t k = 0; k < bytes; ++k) {
        const std::size_t at = r.offset();
        const unsigned chunk = r.take();
        for (int bit = 5; bit >= 0; --bit) {
            const bool set = (chunk >> bit) & 1u;
            if (consumed == bits) {
                if (set) {
                    throw ParseError("graph6: nonzero padding bits", at);
                }
                continue;
            }
            if (set) {
                b.add_edge(i, j);
            }
            ++consumed;
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    if (!r.done()) {
        throw ParseError("graph6: trailing bytes after adjacency data", r.offset());
    }
    return b.build();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n " << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    bool have_n = false;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, key;
            std::size_t value = 0;
            if (ls >> hash >> key >> value && key == "n") {
                n = value;
                have_n = true;
            }
            continue;
        }
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0) {
            throw ParseError("edge list: expected 'u v'", line_start);
        }
        std::string rest;
        if (ls >> rest) {
            throw ParseError("edge list: trailing tokens", line_start);
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!have_n) {
            n = std::max<std::size_t>({n, static_cast<std::size_t>(u) + 1, static_cast<std::size_t>(v) + 1});
        }
    }
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw PreconditionError("edge list: endpoint exceeds declared vertex count");
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace kord
