// Regenerates the bundled auxiliary data files under data/ from recorded
// seeds. The files are versioned with the repository; run this only to
// rebuild them from scratch (output is byte-identical for the same seeds).
//
// File format: header `# id dimension kind`, then whitespace-separated rows.
// Official CEC-2019 data can be dropped in by replacing the cec*_shift.txt
// and cec*_rotation.txt files with same-shaped matrices.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "leo/data_io.hpp"
#include "leo/random.hpp"

namespace {

constexpr std::uint64_t kCompositeSeed = 20230219;  // composite optima o_1..o_10
constexpr std::uint64_t kCecSeed = 20190100;        // CEC-2019 shifts and rotations

// Random orthogonal matrix: QR of a Gaussian matrix via modified Gram-Schmidt.
std::vector<std::vector<double>> random_rotation(int d, leo::RandomStream& rng) {
  std::vector<std::vector<double>> m(static_cast<std::size_t>(d),
                                     std::vector<double>(static_cast<std::size_t>(d)));
  for (auto& row : m)
    for (auto& v : row) v = rng.normal();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      double dot = 0.0;
      for (int k = 0; k < d; ++k) dot += m[i][k] * m[j][k];
      for (int k = 0; k < d; ++k) m[i][k] -= dot * m[j][k];
    }
    double norm = 0.0;
    for (int k = 0; k < d; ++k) norm += m[i][k] * m[i][k];
    norm = std::sqrt(norm);
    for (int k = 0; k < d; ++k) m[i][k] /= norm;
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : leo::data_directory();
  std::filesystem::create_directories(dir);

  {
    leo::RandomStream rng(kCompositeSeed);
    for (int tf = 14; tf <= 19; ++tf) {
      leo::MatrixFile file;
      file.id = "TF" + std::to_string(tf);
      file.dimension = 10;
      file.kind = "optima";
      for (int i = 0; i < 10; ++i) {
        std::vector<double> row(10);
        for (auto& v : row) v = rng.uniform(-5.0, 5.0);
        file.rows.push_back(std::move(row));
      }
      leo::write_matrix_file(dir + "/tf" + std::to_string(tf) + "_optima.txt", file);
    }
  }

  {
    leo::RandomStream rng(kCecSeed);
    for (int fn = 4; fn <= 10; ++fn) {
      const int d = 10;
      char id[8];
      std::snprintf(id, sizeof(id), "cec%02d", fn);

      leo::MatrixFile shift;
      shift.id = id;
      shift.dimension = d;
      shift.kind = "shift";
      std::vector<double> row(d);
      for (auto& v : row) v = rng.uniform(-80.0, 80.0);
      shift.rows.push_back(std::move(row));
      leo::write_matrix_file(dir + "/" + id + "_shift.txt", shift);

      leo::MatrixFile rotation;
      rotation.id = id;
      rotation.dimension = d;
      rotation.kind = "rotation";
      rotation.rows = random_rotation(d, rng);
      leo::write_matrix_file(dir + "/" + id + "_rotation.txt", rotation);
    }
  }

  std::printf("data files written to %s\n", dir.c_str());
  return 0;
}
