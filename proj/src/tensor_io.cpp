#include "lpl/tensor_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpl {

std::string to_text(const StructureTensor& c) {
  std::ostringstream out;
  out << "dim " << c.dim() << "\n";
  char buf[64];
  for (int l = 0; l < c.dim(); ++l)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = j + 1; k < c.dim(); ++k) {
        const double v = c.coeff(l, j, k);
        if (v == 0.0) continue;
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << (l + 1) << ' ' << (j + 1) << ' ' << (k + 1) << ' ' << buf << "\n";
      }
  return out.str();
}

StructureTensor tensor_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int dim = 0;
  bool have_dim = false;
  std::vector<StructureTensor::Entry> entries;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_dim) {
      std::string tag;
      fields >> tag >> dim;
      if (fields.fail() || tag != "dim" || dim < 1)
        throw std::runtime_error("tensor format: expected header 'dim n' at line " + std::to_string(lineno));
      have_dim = true;
      continue;
    }
    int l, j, k;
    double value;
    fields >> l >> j >> k >> value;
    if (fields.fail())
      throw std::runtime_error("tensor format: expected 'l j k value' at line " + std::to_string(lineno));
    if (l < 1 || l > dim || j < 1 || j > dim || k < 1 || k > dim || j == k)
      throw std::runtime_error("tensor format: bad indices at line " + std::to_string(lineno) +
                               " (1-based, j != k, all <= dim)");
    entries.push_back({l - 1, j - 1, k - 1, value});
  }
  if (!have_dim) throw std::runtime_error("tensor format: missing 'dim n' header");
  return StructureTensor(dim, entries);
}

StructureTensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return tensor_from_text(buf.str());
}

void write_tensor_file(const StructureTensor& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tensor file: " + path);
  out << to_text(c);
}

}  // namespace lpl
