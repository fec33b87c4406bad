#ifndef DICHROMA_ERROR_HPP
#define DICHROMA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dichroma
{
    /// Malformed input to an operation (bad parameters, mismatched operands).
    class InvalidArgument : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A configured size limit (vertices, edges, members, ...) would be exceeded.
    class LimitExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A search ran out of time or space before deciding. Carries the best
    /// bracketing interval known at the point it stopped.
    class BudgetExceeded : public std::runtime_error
    {
        public:
            BudgetExceeded(const std::string & what, int lower, int upper) :
                std::runtime_error(what),
                _lower(lower),
                _upper(upper)
            {
            }

            auto lower() const -> int { return _lower; }
            auto upper() const -> int { return _upper; }

        private:
            int _lower, _upper;
    };

    /// Rejection sampling gave up.
    class AttemptsExhausted : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & what, std::size_t line) :
                std::runtime_error("line " + std::to_string(line) + ": " + what),
                _line(line)
            {
            }

            auto line() const -> std::size_t { return _line; }

        private:
            std::size_t _line;
    };
}

#endif
