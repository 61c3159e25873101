#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tokenalg {

/// Arbitrary-precision rational. GMP keeps values canonical: lowest terms,
/// positive denominator.
using Rat = mpq_class;

/// Raised on malformed user input (files, CLI arguments, out-of-range
/// parameters). The CLI maps it to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat rat_of(long num, long den = 1);

/// Parses "p" or "p/q" with optional sign; rejects zero denominators.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

bool rat_is_integer(const Rat& value);

}  // namespace tokenalg
