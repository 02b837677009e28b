#pragma once

#include <stdexcept>
#include <string>

namespace rugbypi {

enum class ErrorCode {
    // parsing / data contract
    MissingHeader,
    UnknownColumn,
    PairingViolation,
    RangeViolation,
    OpponentMismatch,
    // statistics
    EmptySample,
    SampleTooSmall,
    DegenerateSample,
    AllZeroDifferences,
    LengthMismatch,
    ExactWithTies,
    OutOfRange,
    // rule induction / datasets
    NotBinary,
    EmptyDataset,
    EmptyStage,
    // io
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace rugbypi
