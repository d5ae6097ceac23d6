#include <ramseylab/graph6.hpp>

namespace ramseylab {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";
constexpr std::string_view sparse6_header = ">>sparse6<<";

int sextet(char c)
{
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63)
        throw FormatError(std::string("invalid character in graph string: code ") +
                          std::to_string(static_cast<unsigned char>(c)));
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.remove_suffix(1);
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    return s;
}

/// Decodes N(n) and advances s past it.
long decode_order(std::string_view & s)
{
    if (s.empty())
        throw FormatError("empty graph string");
    int first = sextet(s[0]);
    if (first < 63) {
        s.remove_prefix(1);
        return first;
    }
    std::size_t digits = 3;
    std::size_t skip = 1;
    if (s.size() > 1 && sextet(s[1]) == 63) {
        digits = 6;
        skip = 2;
    }
    if (s.size() < skip + digits)
        throw FormatError("truncated vertex count");
    long n = 0;
    for (std::size_t i = 0; i < digits; ++i)
        n = (n << 6) | sextet(s[skip + i]);
    s.remove_prefix(skip + digits);
    return n;
}

void encode_order(std::string & out, int n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    }
    else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int checked_order(long n)
{
    if (n > max_graph_order)
        throw FormatError("graph has " + std::to_string(n) + " vertices; at most " +
                          std::to_string(max_graph_order) + " are supported");
    return static_cast<int>(n);
}

}

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    int n = checked_order(decode_order(text));
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = (bits + 5) / 6;
    if (text.size() != expected)
        throw FormatError("graph6 length mismatch: expected " + std::to_string(expected) +
                          " data bytes, found " + std::to_string(text.size()));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((sextet(text[k / 6]) >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
    if (bits % 6 != 0) {
        int pad = 6 - static_cast<int>(bits % 6);
        if (sextet(text.back()) & ((1 << pad) - 1))
            throw FormatError("non-zero padding bits in graph6 string");
    }
    return g;
}

std::string emit_graph6(const Graph & g)
{
    std::string out;
    int n = g.order();
    encode_order(out, n);
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_sparse6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(sparse6_header))
        text.remove_prefix(sparse6_header.size());
    if (text.empty() || text.front() != ':')
        throw FormatError("sparse6 string must start with ':'");
    text.remove_prefix(1);
    int n = checked_order(decode_order(text));
    int k = 0;
    for (int x = n - 1; x > 0; x >>= 1)
        ++k;

    Graph g(n);
    std::size_t total_bits = text.size() * 6;
    std::size_t pos = 0;
    auto read_bit = [&]() { return (sextet(text[pos / 6]) >> (5 - pos % 6)) & 1; };

    long v = 0;
    while (pos + 1 + k <= total_bits) {
        int b = read_bit();
        ++pos;
        long x = 0;
        for (int i = 0; i < k; ++i, ++pos)
            x = (x << 1) | read_bit();
        if (b)
            ++v;
        if (x > v)
            v = x;
        else if (v < n) {
            if (x == v)
                throw FormatError("sparse6 loops are not supported");
            g.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return g;
}

Graph parse_graph_line(std::string_view text)
{
    auto t = trim(text);
    if (t.starts_with(':') || t.starts_with(sparse6_header))
        return parse_sparse6(t);
    return parse_graph6(t);
}

std::vector<Graph> read_graphs(std::istream & in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        out.push_back(parse_graph_line(line));
    }
    return out;
}

}
