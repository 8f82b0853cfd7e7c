#pragma once

#include "lpl/structure_tensor.hpp"

#include <iosfwd>
#include <string>

namespace lpl {

/// Text format for structure tensors:
///   dim n
///   l j k value        (one line per nonzero c^l_{jk} with j < k, 1-based
///                       indices; the antisymmetric partner is implied)
/// Blank lines and lines starting with '#' are ignored.
std::string to_text(const StructureTensor& c);
StructureTensor tensor_from_text(const std::string& text);

StructureTensor read_tensor_file(const std::string& path);
void write_tensor_file(const StructureTensor& c, const std::string& path);

}  // namespace lpl
