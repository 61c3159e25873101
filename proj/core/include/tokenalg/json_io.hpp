#pragma once

#include <string>

#include "tokenalg/matrix.hpp"
#include "tokenalg/polynomial.hpp"
#include "tokenalg/spectrum.hpp"

namespace tokenalg {

// JSON wire formats. Matrices: {rows, cols, entries: ["p/q", ...]} row-major;
// polynomials: ["p/q", ...] ascending degree; spectra:
// {mode, entries: [[value, multiplicity], ...]} with a tolerance field in
// approximate mode. Fractions are in lowest terms with positive denominator.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

}  // namespace tokenalg
