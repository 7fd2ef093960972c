#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace aims {

enum class errc {
    time_before_start,
    non_monotone_timestamp,
    negative_deposit,
    insufficient_balance,
    malformed_log,
    schema_error,
    decimal_parse,
    decimal_precision,
    invalid_timestamp,
    invalid_config,
    division_by_zero,
    overflow,
    integrity_violation,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::time_before_start:      return "TimeBeforeStart";
        case errc::non_monotone_timestamp: return "NonMonotoneTimestamp";
        case errc::negative_deposit:       return "NegativeDeposit";
        case errc::insufficient_balance:   return "InsufficientBalance";
        case errc::malformed_log:          return "MalformedLog";
        case errc::schema_error:           return "SchemaError";
        case errc::decimal_parse:          return "DecimalParseError";
        case errc::decimal_precision:      return "DecimalPrecisionError";
        case errc::invalid_timestamp:      return "InvalidTimestamp";
        case errc::invalid_config:         return "InvalidConfig";
        case errc::division_by_zero:       return "DivisionByZero";
        case errc::overflow:               return "Overflow";
        case errc::integrity_violation:    return "IntegrityViolation";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Error(errc code, std::string message, std::uint64_t seq)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message +
                             " (seq " + std::to_string(seq) + ")"),
          code_(code), seq_(seq) {}

    errc code() const { return code_; }
    std::optional<std::uint64_t> seq() const { return seq_; }

private:
    errc code_;
    std::optional<std::uint64_t> seq_;
};

} // namespace aims
