#pragma once

#include <stdexcept>
#include <string>

namespace ramseylab
{
    enum class ErrorCode
    {
        invalid_parameters,
        invalid_vertex,
        parse_error,
        invalid_assignment,
        too_large,
        internal_error,
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string & message, int line = 0) :
            std::runtime_error(message),
            code_(code),
            line_(line)
        {
        }

        auto code() const -> ErrorCode { return code_; }

        /// 1-based input line for parse errors, 0 otherwise.
        auto line() const -> int { return line_; }

    private:
        ErrorCode code_;
        int line_;
    };

    [[noreturn]] inline auto fail(ErrorCode code, const std::string & message) -> void
    {
        throw Error(code, message);
    }
}
