#include <extremal/graph6.hh>
#include <extremal/errors.hh>

#include <istream>
#include <ostream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace extremal
{
    auto graph6_encode(const Graph & g) -> string
    {
        int n = g.order();
        string result;
        result.push_back(char(63 + n));

        int bits = 0, pending = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                pending = (pending << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    result.push_back(char(63 + pending));
                    bits = pending = 0;
                }
            }

        if (bits != 0)
            result.push_back(char(63 + (pending << (6 - bits))));

        return result;
    }

    auto graph6_decode(string_view text) -> Graph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);

        if (text.empty())
            throw ParseError{ "graph6: empty input" };

        for (char c : text)
            if (c < 63 || c > 126)
                throw ParseError{ "graph6: byte " + to_string(int(static_cast<unsigned char>(c))) + " outside 63..126" };

        int n = text[0] - 63;
        if (n > max_order)
            throw ParseError{ "graph6: header declares order " + to_string(n) + ", only orders up to 62 are supported" };

        long pairs = long(n) * (n - 1) / 2;
        long expected_bytes = (pairs + 5) / 6;
        if (long(text.size()) - 1 != expected_bytes)
            throw ParseError{ "graph6: expected " + to_string(expected_bytes) + " data bytes for order "
                + to_string(n) + ", got " + to_string(text.size() - 1) };

        Graph result{ n };
        long bit = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++bit) {
                int byte = text[1 + bit / 6] - 63;
                if ((byte >> (5 - bit % 6)) & 1)
                    result.set_edge(i, j);
            }

        for ( ; bit < expected_bytes * 6 ; ++bit)
            if (((text[1 + bit / 6] - 63) >> (5 - bit % 6)) & 1)
                throw ParseError{ "graph6: nonzero padding bits" };

        return result;
    }

    auto read_graph6_lines(std::istream & in) -> vector<Graph>
    {
        vector<Graph> result;
        string line;
        while (std::getline(in, line)) {
            while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty() || line[0] == '>')
                continue;
            result.push_back(graph6_decode(line));
        }
        return result;
    }

    auto write_graph6_lines(std::ostream & out, const vector<string> & encoded) -> void
    {
        for (auto & s : encoded)
            out << s << '\n';
    }
}
