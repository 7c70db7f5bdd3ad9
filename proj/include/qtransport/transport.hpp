// transport.hpp — transition operators Z_k, the transport operator Z, and
// the partial-isometry projectors |Z_k|, |Z_k|^perp
#pragma once

#include "qtransport/model.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

// Z_k : E_k -> E_{k+1}, embedded as a d x d matrix supported on the
// (k+1, k) block, with <a_{k+1}| Z_k |b_k> = zeta_k^{ab} / sqrt(n_k).
Matrix transition_operator(const ModelSpec& spec, int k);

// Z = sum_k Z_k P_k, the block-subdiagonal transport operator.
Matrix transport_operator(const ModelSpec& spec);

// |Z_k| = Z_k† Z_k = sum_{a < n_{k+1}} |phi_{a_k}><phi_{a_k}|, k = 1..N.
// k = 0 is rejected: Z_0† Z_0 = n_1 P_0 is not a projector.
Matrix abs_z(const ModelSpec& spec, int k);

// |Z_k|^perp = P_k - |Z_k|, the projector onto ker Z_k within E_k.
Matrix abs_z_perp(const ModelSpec& spec, int k);

// Projector onto the bright pure vector phi_{0_1}.
Matrix bright_projector(const ModelSpec& spec);

// Z^p |0_k> by repeated application, cross-checked against the closed form
//   Z^{2m-1}|0_k> = prod_j sqrt(n_{k+2j+1}/n_{k+2j}) phi_{0_{k+2m-1}}
//   Z^{2m}  |0_k> = prod_j sqrt(n_{k+2j+1}/n_{k+2j}) |0_{k+2m}>
// within 1e-12; a mismatch raises ClosedFormMismatch.
Vector transport_power_on_zero(const ModelSpec& spec, int k, int p);

}  // namespace qtransport
