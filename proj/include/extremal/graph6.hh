#ifndef EXTREMAL_GRAPH6_HH
#define EXTREMAL_GRAPH6_HH 1

#include <extremal/graph.hh>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace extremal
{
    /**
     * graph6 for orders 0 .. 62: one header byte 63 + n, then the upper
     * triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
     * byte, most significant bit first, zero padded, each byte offset by 63.
     */
    auto graph6_encode(const Graph & g) -> std::string;

    /// Throws ParseError on a bad header, a truncated or overlong body, a
    /// non-printable byte, or nonzero padding bits.
    auto graph6_decode(std::string_view text) -> Graph;

    /// One graph per non-empty line; lines starting with '>' (a common
    /// ">>graph6<<" banner) are skipped.
    auto read_graph6_lines(std::istream & in) -> std::vector<Graph>;

    auto write_graph6_lines(std::ostream & out, const std::vector<std::string> & encoded) -> void;
}

#endif
