#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace radmoore {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};

namespace graph6_detail {

// Largest order this codec will materialize; the format itself allows 2^36.
inline constexpr std::uint64_t kMaxOrder = 100000;

inline void append_order(std::string& out, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("graph6: order must be positive");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else if (n < (1ULL << 36)) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order exceeds 2^36 - 1");
    }
}

inline std::uint64_t parse_order(std::string_view s, std::size_t& pos) {
    auto need = [&](std::size_t count) {
        if (s.size() - pos < count) throw Graph6Error("graph6: truncated order field", s.size());
    };
    auto sixbits = [&](std::size_t at) -> std::uint64_t {
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside printable range", at);
        return c - 63;
    };
    need(1);
    if (s[pos] != 126) {
        std::uint64_t n = sixbits(pos);
        pos += 1;
        return n;
    }
    need(2);
    if (s[pos + 1] != 126) {
        need(4);
        std::uint64_t n = (sixbits(pos + 1) << 12) | (sixbits(pos + 2) << 6) | sixbits(pos + 3);
        pos += 4;
        return n;
    }
    need(8);
    std::uint64_t n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sixbits(pos + i);
    pos += 8;
    return n;
}

}  // namespace graph6_detail

// Standard graph6: order field, then the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per printable byte.
inline std::string graph6_encode(const Graph& g) {
    std::string out;
    graph6_detail::append_order(out, static_cast<std::uint64_t>(g.order()));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits != 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view s) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) pos = header.size();
    if (pos >= s.size()) throw Graph6Error("graph6: empty input", pos);

    std::uint64_t n64 = graph6_detail::parse_order(s, pos);
    if (n64 < 1) throw Graph6Error("graph6: order must be positive", 0);
    if (n64 > graph6_detail::kMaxOrder) throw Graph6Error("graph6: order too large for this tool", 0);
    int n = static_cast<int>(n64);

    std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < nbytes) throw Graph6Error("graph6: truncated edge data", s.size());
    if (s.size() - pos > nbytes) throw Graph6Error("graph6: trailing bytes after edge data", pos + nbytes);

    GraphBuilder b(n);
    std::uint64_t bit = 0;
    int ei = 0, ej = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char c = static_cast<unsigned char>(s[pos + k]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside printable range", pos + k);
        int v = c - 63;
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            int on = (v >> shift) & 1;
            if (bit >= nbits) {
                if (on) throw Graph6Error("graph6: nonzero padding bits", pos + k);
                continue;
            }
            if (on) b.add_edge(ei, ej);
            if (++ei == ej) {
                ei = 0;
                ++ej;
            }
        }
    }
    return b.build();
}

}  // namespace radmoore
