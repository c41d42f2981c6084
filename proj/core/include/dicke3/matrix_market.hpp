#pragma once

#include <iosfwd>

#include "dicke3/hamiltonian.hpp"

namespace dicke3 {

/// Writes the Hamiltonian in Matrix Market coordinate format with 17
/// significant digits. Real Hamiltonians are written as "real symmetric"
/// (lower triangle only), the non-Hermitian one as "complex general".
void write_matrix_market(std::ostream& out, const Hamiltonian& h);

/// Reads a coordinate Matrix Market file written by write_matrix_market
/// (real/complex, general/symmetric). Throws std::runtime_error on
/// malformed input.
ComplexSparse read_matrix_market(std::istream& in);

}  // namespace dicke3
