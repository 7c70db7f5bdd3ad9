#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <string>

#include "qtransport/errors.hpp"
#include "qtransport/io.hpp"
#include "qtransport/random.hpp"
#include "test_support.hpp"

using namespace qtransport;
using qtransport::testing::avk43;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qtransport_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("model files round trip") {
  TempDir dir;
  const ModelSpec spec = avk43();
  const std::string path = dir.file("model.json");
  io::write_model(path, spec);

  const ModelSpec back = io::read_model(path);
  CHECK(back.num_levels == spec.num_levels);
  CHECK(back.dims == spec.dims);
  CHECK(back.energies == spec.energies);
  CHECK(back.gamma_minus == spec.gamma_minus);
  CHECK(back.gamma_plus == spec.gamma_plus);
  CHECK(back.beta == spec.beta);
  CHECK(back.validated);
}

TEST_CASE("reading a missing or invalid model fails cleanly") {
  TempDir dir;
  CHECK_THROWS_AS(io::read_model(dir.file("absent.json")), IoError);

  const std::string bad = dir.file("bad.json");
  {
    std::ofstream out(bad);
    out << "{\"format\": 1, \"N\": 2}";
  }
  CHECK_THROWS_AS(io::read_model(bad), IoError);

  const std::string wrong_version = dir.file("v2.json");
  {
    std::ofstream out(wrong_version);
    out << "{\"format\": 2}";
  }
  CHECK_THROWS_AS(io::read_model(wrong_version), IoError);
}

TEST_CASE("invalid model content surfaces as a validation error") {
  TempDir dir;
  ModelSpec raw = avk43();
  raw.dims = {1, 2, 3, 1};
  const std::string path = dir.file("order.json");
  io::write_model(path, raw);
  CHECK_THROWS_AS(io::read_model(path), ValidationError);
}

TEST_CASE("state files round trip") {
  TempDir dir;
  Rng rng(109);
  const Matrix rho = rng.density(6);
  const std::string path = dir.file("state.json");
  io::write_state(path, rho);
  CHECK((io::read_state(path) - rho).norm() <= 1e-15);
}

TEST_CASE("vector files round trip with labels") {
  TempDir dir;
  Rng rng(113);
  Vector v = rng.gaussian_matrix(5, 1).col(0);
  const std::string path = dir.file("vector.json");
  io::write_vector(path, v, "seed");
  CHECK((io::read_vector(path) - v).norm() <= 1e-15);
}

TEST_CASE("subspace files round trip") {
  TempDir dir;
  Rng rng(127);
  const SubspaceBasis s = orthonormalize(7, rng.gaussian_matrix(7, 3));
  const std::string path = dir.file("subspace.json");
  io::write_subspace(path, "test", s);
  const SubspaceBasis back = io::read_subspace(path);
  CHECK(back.ambient_dim == 7);
  CHECK(back.dim() == 3);
  CHECK((back.vectors - s.vectors).norm() <= 1e-15);
}

TEST_CASE("trajectory CSV layout") {
  TempDir dir;
  std::vector<TrajectoryRow> rows(2);
  rows[0].t = 0.0;
  rows[0].occupations = {0.25, 0.75};
  rows[0].trace = 1.0;
  rows[0].min_eig = -1e-12;
  rows[0].dist_to_limit = 0.5;
  rows[1].t = 1.0 / 3.0;
  rows[1].occupations = {0.5, 0.5};
  rows[1].trace = 1.0;
  rows[1].min_eig = 0.0;
  rows[1].dist_to_limit = 0.25;

  const std::string path = dir.file("trajectory.csv");
  io::write_trajectory_csv(path, rows);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t, occ_0, occ_1, trace, min_eig, dist_to_limit");
  std::string line;
  std::getline(in, line);
  CHECK(line.find("0, 0.25, 0.75, 1, ") == 0);
  std::getline(in, line);
  // 17 significant digits of 1/3.
  CHECK(line.find("0.33333333333333331") == 0);
}

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("operator dumps include the convention header") {
  TempDir dir;
  const std::string path = dir.file("operators.json");
  io::write_operators(path, {{"I", Matrix::Identity(2, 2)}});
  std::ifstream in(path);
  std::string all((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  CHECK(all.find("convention") != std::string::npos);
  CHECK(all.find("column-stacking") != std::string::npos);
  CHECK(all.find("\"I\"") != std::string::npos);
}
