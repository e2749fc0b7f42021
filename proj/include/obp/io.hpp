#ifndef OBP_IO_HPP
#define OBP_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "obp/core.hpp"
#include "obp/matrix.hpp"

namespace obp {

/// Malformed input file. The message names the first offending byte offset or JSON path.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n_vertices": N, "bicliques": [{"u": [...], "w": [...]}, ...]}, 1-based, sides sorted.
std::string format_partition(const OrderedPartition& partition);
OrderedPartition parse_partition(std::string_view text);

/// "N\n" followed by N rows of N characters from {0,1}, each newline-terminated.
std::string format_matrix(const BooleanMatrix& m);
BooleanMatrix parse_matrix(std::string_view text);

/// JSON array of 1-based [row, column] pairs.
FoolingSetClaim parse_cells(std::string_view text, int z);

std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace obp

#endif  // OBP_IO_HPP
