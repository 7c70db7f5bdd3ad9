// random.hpp — seeded, implementation-independent random draws used by the
// verification suite and tests (reports must be reproducible byte-for-byte)
#pragma once

#include <cstdint>
#include <random>

#include "qtransport/model.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1); derived from raw bits so the stream does not depend
  // on the standard library's distribution implementations.
  double uniform();
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  double gaussian();                // Box-Muller
  Complex complex_gaussian();

  Matrix gaussian_matrix(Index rows, Index cols);
  Matrix hermitian(Index d);
  Matrix density(Index d);
  // Density matrix supported in the given subspace (full rank there).
  Matrix density_on(const SubspaceBasis& s);
  // Unit vector in the span of the given basis.
  Vector unit_vector_in(const SubspaceBasis& s);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Random valid spec with N <= max_levels and n_1 <= max_n1; when force_dh
// is set the intermediate dimensions n_2..n_N are equal.
ModelSpec random_spec(Rng& rng, int max_levels = 4, int max_n1 = 5,
                      bool force_dh = false);

}  // namespace qtransport
