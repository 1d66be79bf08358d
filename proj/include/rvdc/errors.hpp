#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rvdc {

class Error : public std::runtime_error {
 public:
  enum class Kind {
    ZeroInverse,
    DimensionMismatch,
    Singular,
    StreamExhausted,
    InvalidRank,
    IndexOutOfRange,
    InvalidChallenge,
    PhaseViolation,
    MalformedTranscript,
    MalformedSignature,
    InvalidParams,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Error(Kind kind, const std::string& msg, std::size_t byte_offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
        kind_(kind),
        offset_(byte_offset) {}

  Kind kind() const { return kind_; }
  std::optional<std::size_t> byte_offset() const { return offset_; }

 private:
  Kind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace rvdc
