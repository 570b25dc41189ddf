#include <extremal/pattern.hh>
#include <extremal/canonical.hh>
#include <extremal/constructions.hh>
#include <extremal/errors.hh>
#include <extremal/graph6.hh>

#include <cctype>
#include <charconv>

using std::string;
using std::to_string;
using std::vector;

namespace extremal
{
    Pattern::Pattern(const Graph & h, string name) :
        _graph(h),
        _automorphisms(0),
        _name(std::move(name))
    {
        if (h.order() == 0)
            throw RangeError{ "pattern must have at least one vertex" };
        for (int v = 0 ; v < h.order() ; ++v)
            if (h.degree(v) == 0)
                throw RangeError{ "pattern has isolated vertex " + to_string(v) };

        _automorphisms = extremal::automorphism_count(h);

        // tag the shapes that have closed-form counters, however h was built
        int n = h.order(), e = h.size();
        if (e == n - 1 && n >= 3 && h.max_degree() == n - 1) {
            _kind = PatternKind::star;
            _parameter = n - 1;
        }
        else if (n >= 4 && e == 2 * (n - 2) + 1 && are_isomorphic(h, book_graph(n - 2))) {
            _kind = PatternKind::book;
            _parameter = n - 2;
        }
        else if (n == 4 && e == 4 && is_regular(h, 2))
            _kind = PatternKind::cycle4;
        else if (n == 3 && e == 3)
            _kind = PatternKind::triangle;

        if (_name.empty())
            _name = "g6:" + graph6_encode(h);
    }

    auto Pattern::star(int p) -> Pattern
    {
        return Pattern{ star_graph(p), "s:" + to_string(p) };
    }

    auto Pattern::book(int p) -> Pattern
    {
        return Pattern{ book_graph(p), "b:" + to_string(p) };
    }

    auto Pattern::cycle(int n) -> Pattern
    {
        return Pattern{ cycle_graph(n), n == 4 ? "c4" : "c:" + to_string(n) };
    }

    auto Pattern::complete(int n) -> Pattern
    {
        return Pattern{ complete_graph(n), "k:" + to_string(n) };
    }

    auto Pattern::path(int n) -> Pattern
    {
        if (n < 2)
            throw RangeError{ "path pattern needs at least two vertices" };
        return Pattern{ path_graph(n), "p:" + to_string(n) };
    }

    auto Pattern::complete_bipartite(int s, int t) -> Pattern
    {
        if (s < 1 || t < 1)
            throw RangeError{ "complete bipartite pattern needs both parts non-empty" };
        return Pattern{ complete_bipartite_graph(s, t), "kab:" + to_string(s) + "," + to_string(t) };
    }

    namespace
    {
        auto to_int(std::string_view text, const string & context) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{ } || ptr != text.data() + text.size())
                throw ParseError{ "bad number '" + string(text) + "' in pattern '" + context + "'" };
            return value;
        }

        auto parse_family_token(const string & token) -> Pattern
        {
            if (token.size() >= 2 && std::isdigit(static_cast<unsigned char>(token[1]))) {
                std::string_view digits{ token };
                digits.remove_prefix(1);
                switch (token[0]) {
                    case 'c': return Pattern::cycle(to_int(digits, token));
                    case 'p': return Pattern::path(to_int(digits, token));
                    case 'k':
                        if (digits.size() == 2)
                            return Pattern::complete_bipartite(digits[0] - '0', digits[1] - '0');
                        return Pattern::complete(to_int(digits, token));
                }
            }
            return parse_pattern(token);
        }
    }

    auto parse_pattern(const string & text) -> Pattern
    {
        if (text == "c4")
            return Pattern::cycle(4);
        if (text == "c3" || text == "k3")
            return Pattern::complete(3);

        auto colon = text.find(':');
        if (colon == string::npos)
            throw ParseError{ "unrecognised pattern '" + text + "'" };

        string head = text.substr(0, colon), rest = text.substr(colon + 1);
        if (head == "k")
            return Pattern::complete(to_int(rest, text));
        if (head == "s")
            return Pattern::star(to_int(rest, text));
        if (head == "b")
            return Pattern::book(to_int(rest, text));
        if (head == "c")
            return Pattern::cycle(to_int(rest, text));
        if (head == "p")
            return Pattern::path(to_int(rest, text));
        if (head == "kab") {
            auto comma = rest.find(',');
            if (comma == string::npos)
                throw ParseError{ "kab needs two sizes, e.g. kab:2,3" };
            return Pattern::complete_bipartite(to_int(std::string_view(rest).substr(0, comma), text),
                    to_int(std::string_view(rest).substr(comma + 1), text));
        }
        if (head == "g6")
            return Pattern{ graph6_decode(rest), text };
        if (head == "family")
            throw ParseError{ "'" + text + "' is a pattern family, not a single pattern" };

        throw ParseError{ "unrecognised pattern '" + text + "'" };
    }

    auto parse_pattern_family(const string & text) -> vector<Pattern>
    {
        if (text.rfind("family:", 0) != 0)
            throw ParseError{ "pattern family must start with 'family:'" };
        vector<Pattern> result;
        string rest = text.substr(7);
        size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            string token = rest.substr(start, comma == string::npos ? string::npos : comma - start);
            if (token.empty())
                throw ParseError{ "empty token in pattern family '" + text + "'" };
            result.push_back(parse_family_token(token));
            if (comma == string::npos)
                break;
            start = comma + 1;
        }
        return result;
    }

    auto parse_patterns(const string & text) -> vector<Pattern>
    {
        if (text.rfind("family:", 0) == 0)
            return parse_pattern_family(text);
        return { parse_pattern(text) };
    }
}
