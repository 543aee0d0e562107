#include "leo/data_io.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef LEO_DEFAULT_DATA_DIR
#define LEO_DEFAULT_DATA_DIR "data"
#endif

namespace leo {

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing data file: " + path);
  MatrixFile data;
  std::string line;
  if (!std::getline(in, line) || line.empty() || line[0] != '#')
    throw std::runtime_error("data file lacks `# id dimension kind` header: " + path);
  {
    std::stringstream ss(line.substr(1));
    if (!(ss >> data.id >> data.dimension >> data.kind))
      throw std::runtime_error("malformed data header in " + path);
  }
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    if (!row.empty()) data.rows.push_back(std::move(row));
  }
  return data;
}

void write_matrix_file(const std::string& path, const MatrixFile& data) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write data file: " + path);
  out << "# " << data.id << ' ' << data.dimension << ' ' << data.kind << '\n';
  char buf[32];
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), row[i]);
      (void)ec;
      if (i) out << ' ';
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

std::string data_directory() {
  if (const char* env = std::getenv("LEO_DATA_DIR"); env && *env) return env;
  return LEO_DEFAULT_DATA_DIR;
}

}  // namespace leo
