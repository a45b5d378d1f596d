#pragma once

#include "qdnc/states.hpp"

#include <iosfwd>
#include <string>

// State files are JSON documents with integer fields dim_a, dim_b and two
// rectangular (dA*dB)^2 arrays re, im holding the real and imaginary parts
// of the density matrix. Writing uses shortest round-trip decimals, so
// read(write(rho)) reproduces rho bit for bit.

namespace qdnc {

// Raised when a document cannot be parsed or has inconsistent shape. A
// well-formed file whose matrix fails validation raises state_error
// instead.
class statefile_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DensityMatrix read_state(std::istream& in);
DensityMatrix read_state_file(const std::string& path);

void write_state(std::ostream& out, const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

}  // namespace qdnc
