#include "hadwiger/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hadwiger {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("graph6: " + why);
}

// Appends x as `groups` big-endian 6-bit groups, each offset by 63.
void append_groups(std::string& out, std::uint64_t x, int groups) {
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(char(63 + ((x >> (6 * i)) & 63)));
}

} // namespace

std::string write_graph6(const Graph& g) {
    std::uint64_t n = std::uint64_t(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        append_groups(out, n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_groups(out, n, 6);
    }
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) cur |= char(1 << bit);
            if (--bit < 0) {
                out.push_back(char(63 + cur));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(char(63 + cur));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.size() >= kHeader.size() && text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) malformed("empty input");

    for (unsigned char c : text)
        if (c < 63 || c > 126) malformed("byte out of range");

    std::size_t pos = 0;
    auto take = [&]() -> std::uint64_t {
        if (pos >= text.size()) malformed("truncated length prefix");
        return std::uint64_t(text[pos++]) - 63;
    };

    std::uint64_t n;
    if (std::uint8_t(text[0]) != 126) {
        n = take();
    } else {
        ++pos;
        bool wide = pos < text.size() && std::uint8_t(text[pos]) == 126;
        if (wide) ++pos;
        int groups = wide ? 6 : 3;
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | take();
        if (!wide && n <= 62) malformed("non-canonical length prefix");
        if (wide && n <= 258047) malformed("non-canonical length prefix");
        if (n >= (std::uint64_t{1} << 36)) malformed("vertex count too large");
    }

    std::uint64_t bits = n >= 2 ? n * (n - 1) / 2 : 0;
    std::uint64_t need = (bits + 5) / 6;
    if (text.size() - pos != need) {
        if (text.size() - pos > need) malformed("trailing garbage");
        malformed("truncated adjacency data");
    }

    Graph g(static_cast<int>(n));
    std::uint64_t b = 0;
    for (int j = 1; j < int(n); ++j)
        for (int i = 0; i < j; ++i, ++b) {
            std::uint64_t byte = std::uint64_t(text[pos + b / 6]) - 63;
            if ((byte >> (5 - b % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (std::uint64_t p = bits; p < need * 6; ++p) {
        std::uint64_t byte = std::uint64_t(text[pos + p / 6]) - 63;
        if ((byte >> (5 - p % 6)) & 1) malformed("nonzero padding");
    }
    return g;
}

} // namespace hadwiger
