#include "scm/graph6.hpp"

#include <cstdint>
#include <stdexcept>

namespace scm {

namespace {

void append_six_bit_groups(std::string& out, std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

} // namespace

std::string encode_graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_six_bit_groups(out, static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_six_bit_groups(out, static_cast<std::uint64_t>(n), 6);
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view bytes) {
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);
    if (bytes.empty())
        throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size())
            throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(bytes[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int second = next();
        if (second < 63) {
            n = (static_cast<long>(second) << 12) | (next() << 6) | next();
            if (n <= 62)
                throw std::invalid_argument("graph6: non-canonical long-form header");
        } else {
            std::uint64_t v = 0;
            for (int i = 0; i < 6; ++i)
                v = (v << 6) | static_cast<unsigned>(next());
            if (v <= 258047)
                throw std::invalid_argument("graph6: non-canonical long-form header");
            if (v > 1000000)
                throw std::invalid_argument("graph6: order too large for this decoder");
            n = static_cast<long>(v);
        }
    }

    Graph g(static_cast<int>(n));
    long total_bits = n * (n - 1) / 2;
    int acc = 0, avail = 0;
    for (long k = 0, v = 1, u = 0; k < total_bits; ++k) {
        if (avail == 0) {
            acc = next();
            avail = 6;
        }
        if ((acc >> (avail - 1)) & 1)
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        --avail;
        if (++u == v) {
            u = 0;
            ++v;
        }
    }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != bytes.size())
        throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

} // namespace scm
