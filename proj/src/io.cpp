#include "qtransport/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qtransport/errors.hpp"

namespace qtransport::io {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json complex_entry(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw IoError("expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_entry(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw IoError("expected a non-empty matrix array");
  }
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (static_cast<Index>(j[i].size()) != cols) {
      throw IoError("ragged matrix rows");
    }
    for (Index c = 0; c < cols; ++c) {
      m(i, c) = parse_complex(j[i][c]);
    }
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json entries = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    entries.push_back(complex_entry(v(i)));
  }
  return entries;
}

Vector vector_from_json(const json& j) {
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = parse_complex(j[i]);
  }
  return v;
}

json convention_header() {
  return json{{"vectorization", convention_vectorization()},
              {"phase", convention_phase()}};
}

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  if (j.value("format", 0) != kFormatVersion) {
    throw IoError(path + ": unsupported format version");
  }
  return j;
}

void save(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  out << j.dump(2) << "\n";
}

}  // namespace

std::string convention_vectorization() {
  return "column-stacking; X -> A X B is (B^T kron A)";
}

std::string convention_phase() {
  return "phi_{a_k} = n_k^{-1/2} sum_b zeta_k^{-ab} |b_k>, "
         "Z_k entries zeta_k^{+ab} n_k^{-1/2}, zeta_k = exp(2 pi i / n_k)";
}

ModelSpec read_model(const std::string& path) {
  const json j = load(path);
  ModelSpec raw;
  try {
    raw.num_levels = j.at("N").get<int>();
    raw.dims = j.at("dims").get<std::vector<int>>();
    raw.energies = j.at("energies").get<std::vector<double>>();
    raw.gamma_minus = j.at("gamma_minus").get<std::vector<double>>();
    raw.gamma_plus = j.at("gamma_plus").get<std::vector<double>>();
    raw.shift_minus = j.at("shift_minus").get<std::vector<double>>();
    raw.shift_plus = j.at("shift_plus").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  return validate_spec(std::move(raw));
}

void write_model(const std::string& path, const ModelSpec& spec) {
  json j{{"format", kFormatVersion},
         {"N", spec.num_levels},
         {"dims", spec.dims},
         {"energies", spec.energies},
         {"gamma_minus", spec.gamma_minus},
         {"gamma_plus", spec.gamma_plus},
         {"shift_minus", spec.shift_minus},
         {"shift_plus", spec.shift_plus}};
  save(path, j);
}

Matrix read_state(const std::string& path) {
  const json j = load(path);
  if (!j.contains("matrix")) {
    throw IoError(path + ": missing matrix field");
  }
  Matrix m = matrix_from_json(j["matrix"]);
  if (m.rows() != m.cols()) {
    throw IoError(path + ": state matrix must be square");
  }
  return m;
}

void write_state(const std::string& path, const Matrix& rho) {
  json j{{"format", kFormatVersion},
         {"convention", convention_header()},
         {"dim", rho.rows()},
         {"matrix", matrix_to_json(rho)}};
  save(path, j);
}

Vector read_vector(const std::string& path) {
  const json j = load(path);
  if (!j.contains("entries")) {
    throw IoError(path + ": missing entries field");
  }
  return vector_from_json(j["entries"]);
}

void write_vector(const std::string& path, const Vector& v,
                  const std::string& label) {
  json j{{"format", kFormatVersion},
         {"convention", convention_header()},
         {"dim", v.size()},
         {"entries", vector_to_json(v)}};
  if (!label.empty()) j["label"] = label;
  save(path, j);
}

void write_subspace(const std::string& path, const std::string& name,
                    const SubspaceBasis& basis) {
  json vectors = json::array();
  for (int i = 0; i < basis.dim(); ++i) {
    vectors.push_back(vector_to_json(basis.vectors.col(i)));
  }
  json j{{"format", kFormatVersion},
         {"convention", convention_header()},
         {"name", name},
         {"ambient_dim", basis.ambient_dim},
         {"dim", basis.dim()},
         {"vectors", std::move(vectors)}};
  save(path, j);
}

SubspaceBasis read_subspace(const std::string& path) {
  const json j = load(path);
  const Index ambient = j.at("ambient_dim").get<Index>();
  const auto& vecs = j.at("vectors");
  Matrix cols(ambient, static_cast<Index>(vecs.size()));
  for (Index i = 0; i < cols.cols(); ++i) {
    Vector v = vector_from_json(vecs[i]);
    if (v.size() != ambient) {
      throw IoError(path + ": vector length mismatch");
    }
    cols.col(i) = v;
  }
  return {ambient, std::move(cols)};
}

void write_operators(const std::string& path,
                     const std::vector<std::pair<std::string, Matrix>>& ops) {
  json entries = json::object();
  for (const auto& [name, m] : ops) {
    entries[name] = matrix_to_json(m);
  }
  json j{{"format", kFormatVersion},
         {"convention", convention_header()},
         {"operators", std::move(entries)}};
  save(path, j);
}

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void write_trajectory_csv(const std::string& path,
                          const std::vector<TrajectoryRow>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  if (rows.empty()) {
    throw IoError("trajectory is empty");
  }
  out << "t";
  for (size_t k = 0; k < rows.front().occupations.size(); ++k) {
    out << ", occ_" << k;
  }
  out << ", trace, min_eig, dist_to_limit\n";
  for (const auto& row : rows) {
    out << format_double(row.t);
    for (double occ : row.occupations) {
      out << ", " << format_double(occ);
    }
    out << ", " << format_double(row.trace) << ", "
        << format_double(row.min_eig) << ", "
        << format_double(row.dist_to_limit) << "\n";
  }
}

}  // namespace qtransport::io
