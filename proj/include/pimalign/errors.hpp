#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pimalign {

// Input-side failures (bad sequences, bad files). CLI maps these to exit 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration failures (bad keys, inconsistent settings). CLI maps to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCharacterError : InputError {
    InvalidCharacterError(std::size_t pos, char c)
        : InputError("invalid character '" + std::string(1, c) + "' at position " +
                     std::to_string(pos)),
          position(pos), character(c) {}
    std::size_t position;
    char character;
};

// Full-matrix fill refused; the golden oracle is memory-heavy by design.
struct SizeCapError : InputError {
    using InputError::InputError;
};

// Vault image would exceed the per-vault DRAM share.
struct CapacityError : InputError {
    using InputError::InputError;
};

// AGU programming rejected (address outside the vault, overlapping regions).
struct AddressError : InputError {
    using InputError::InputError;
};

struct NoWinnerError : InputError {
    using InputError::InputError;
};

struct IoError : InputError {
    using InputError::InputError;
};

} // namespace pimalign
