#include "dicke3/matrix_market.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke3 {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_matrix_market(std::ostream& out, const Hamiltonian& h) {
  const Eigen::Index dim = h.dimension();
  if (h.is_real_symmetric()) {
    const RealSparse& m = h.real();
    std::vector<Eigen::Triplet<double>> lower;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
      for (RealSparse::InnerIterator it(m, k); it; ++it)
        if (it.row() >= it.col()) lower.emplace_back(it.row(), it.col(), it.value());
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << "% dicke3 Hamiltonian gauge=" << to_string(h.gauge()) << " N=" << h.atoms()
        << " n_max=" << h.n_max() << "\n";
    out << dim << ' ' << dim << ' ' << lower.size() << '\n';
    for (const auto& t : lower) out << t.row() + 1 << ' ' << t.col() + 1 << ' ' << num(t.value()) << '\n';
    return;
  }

  const ComplexSparse m = h.as_complex();
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << "% dicke3 Hamiltonian gauge=" << to_string(h.gauge()) << " N=" << h.atoms()
      << " n_max=" << h.n_max() << "\n";
  out << dim << ' ' << dim << ' ' << m.nonZeros() << '\n';
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (ComplexSparse::InnerIterator it(m, k); it; ++it)
      out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << num(it.value().real()) << ' '
          << num(it.value().imag()) << '\n';
}

ComplexSparse read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw std::runtime_error("matrix market: missing banner");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (object != "matrix" || format != "coordinate")
    throw std::runtime_error("matrix market: only coordinate matrices are supported");
  const bool is_complex = field == "complex";
  if (!is_complex && field != "real") throw std::runtime_error("matrix market: unsupported field " + field);
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general")
    throw std::runtime_error("matrix market: unsupported symmetry " + symmetry);

  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream size_line(line);
  long long rows = 0, cols = 0, entries = 0;
  if (!(size_line >> rows >> cols >> entries)) throw std::runtime_error("matrix market: bad size line");

  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  triplets.reserve(static_cast<std::size_t>(symmetric ? 2 * entries : entries));
  for (long long e = 0; e < entries; ++e) {
    long long i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(in >> i >> j >> re)) throw std::runtime_error("matrix market: truncated entry list");
    if (is_complex && !(in >> im)) throw std::runtime_error("matrix market: missing imaginary part");
    if (i < 1 || j < 1 || i > rows || j > cols) throw std::runtime_error("matrix market: index out of range");
    triplets.emplace_back(i - 1, j - 1, std::complex<double>(re, im));
    if (symmetric && i != j) triplets.emplace_back(j - 1, i - 1, std::complex<double>(re, im));
  }
  ComplexSparse m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

}  // namespace dicke3
