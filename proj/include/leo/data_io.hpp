#pragma once

#include <string>
#include <vector>

namespace leo {

/// Auxiliary matrix file: header line `# id dimension kind`, then one
/// whitespace-separated row of decimals per line.
struct MatrixFile {
  std::string id;
  int dimension = 0;
  std::string kind;
  std::vector<std::vector<double>> rows;
};

MatrixFile read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixFile& data);

/// Resolves the auxiliary data directory: $LEO_DATA_DIR when set, otherwise
/// the location baked in at build time.
std::string data_directory();

}  // namespace leo
