/**
 * Error codes and the exception type shared across the library.
 */

#ifndef SHAPECX_ERROR_HPP
#define SHAPECX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shapecx {

enum class ErrorCode {
    DEGENERATE_TRIANGLE,
    TOO_FEW_VERTICES,
    POLYGON_INVALID,
    TRIANGULATION_IMPOSSIBLE,
    ISOLATED_VERTEX,
    HOST_MISMATCH,
    SCHEMA_ERROR,
    NUMBER_PARSE_ERROR,
    UNKNOWN_VERTEX,
    EMPTY_COVER,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::DEGENERATE_TRIANGLE:      return "DEGENERATE_TRIANGLE";
        case ErrorCode::TOO_FEW_VERTICES:         return "TOO_FEW_VERTICES";
        case ErrorCode::POLYGON_INVALID:          return "POLYGON_INVALID";
        case ErrorCode::TRIANGULATION_IMPOSSIBLE: return "TRIANGULATION_IMPOSSIBLE";
        case ErrorCode::ISOLATED_VERTEX:          return "ISOLATED_VERTEX";
        case ErrorCode::HOST_MISMATCH:            return "HOST_MISMATCH";
        case ErrorCode::SCHEMA_ERROR:             return "SCHEMA_ERROR";
        case ErrorCode::NUMBER_PARSE_ERROR:       return "NUMBER_PARSE_ERROR";
        case ErrorCode::UNKNOWN_VERTEX:           return "UNKNOWN_VERTEX";
        case ErrorCode::EMPTY_COVER:              return "EMPTY_COVER";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code)
    {
    }

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}   // namespace shapecx

#endif
