#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittspan {

enum class ErrorKind {
    InvalidInput,
    PreconditionViolated,
    DegenerateForm,
    RankUnderflow,
    InconsistentCongruence,
    FactorizationLimitExceeded,
    SearchLimitExceeded,
    OracleTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/*
 * Single exception type for the library. The kind distinguishes bad input
 * (caller's fault) from computational limits (input too large for the
 * configured effort).
 */
class Error : public std::runtime_error
{
    ErrorKind kind_;

  public:
    Error(ErrorKind kind, std::string const & message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

    bool is_limit() const noexcept
    {
        return kind_ == ErrorKind::FactorizationLimitExceeded ||
               kind_ == ErrorKind::SearchLimitExceeded ||
               kind_ == ErrorKind::OracleTooLarge;
    }
};

} // namespace wittspan
