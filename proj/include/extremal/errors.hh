#ifndef EXTREMAL_ERRORS_HH
#define EXTREMAL_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace extremal
{
    /// Base class for everything this library throws on bad input.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A parameter lies outside the range an operation supports (vertex index,
    /// order cap, family parameter).
    class RangeError : public Error
    {
        public:
            using Error::Error;
    };

    /// A construction needs a parity its parameters do not have, e.g. K_n - PM
    /// for odd n, or a k-regular graph of order n with kn odd.
    class ParityError : public Error
    {
        public:
            using Error::Error;
    };

    /// Malformed graph6 text, construction spec or pattern string.
    class ParseError : public Error
    {
        public:
            using Error::Error;
    };

    /// An exhaustive task lies outside the feasibility envelope. Carries the
    /// estimated number of isomorphism classes the run would have to visit.
    class InfeasibleTask : public Error
    {
        public:
            InfeasibleTask(const std::string & what, double estimate) :
                Error(what),
                _estimate(estimate)
            {
            }

            auto estimate() const -> double
            {
                return _estimate;
            }

        private:
            double _estimate;
    };
}

#endif
