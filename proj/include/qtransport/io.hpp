// io.hpp — file formats: model/state/vector/subspace documents (JSON,
// format-versioned, complex entries as [re, im] pairs, row-major) and the
// trajectory CSV
#pragma once

#include <string>
#include <vector>

#include "qtransport/evolution.hpp"
#include "qtransport/model.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/types.hpp"

namespace qtransport::io {

// Fixed convention header written into every operator/state document.
std::string convention_vectorization();
std::string convention_phase();

ModelSpec read_model(const std::string& path);      // validated on read
void write_model(const std::string& path, const ModelSpec& spec);

Matrix read_state(const std::string& path);         // d x d complex matrix
void write_state(const std::string& path, const Matrix& rho);

Vector read_vector(const std::string& path);
void write_vector(const std::string& path, const Vector& v,
                  const std::string& label = "");

void write_subspace(const std::string& path, const std::string& name,
                    const SubspaceBasis& basis);
SubspaceBasis read_subspace(const std::string& path);

// Named operator matrices with the convention header.
void write_operators(const std::string& path,
                     const std::vector<std::pair<std::string, Matrix>>& ops);

// Header: t, occ_0..occ_{N+1}, trace, min_eig, dist_to_limit;
// floating point rendered with 17 significant digits.
void write_trajectory_csv(const std::string& path,
                          const std::vector<TrajectoryRow>& rows);

std::string format_double(double x);  // %.17g

}  // namespace qtransport::io
