// presets.hpp — one-call constructors for the two photosynthesis models and
// their closed-form limit formulas
#pragma once

#include <vector>

#include "qtransport/model.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

struct PresetRates {
  std::vector<double> gamma_minus;  // one entry per k = 0..N
  std::vector<double> gamma_plus;   // last entry must be 0
  std::vector<double> shift_minus;
  std::vector<double> shift_plus;
};

// Uniform defaults: Gamma_- = 1, Gamma_+ = 0.5 (0 for k = N), shifts 0.1.
PresetRates default_rates(int num_levels);

// Single-level chain (N = 1) with dims (1, n1, 1); energies auto-chosen
// with distinct gaps (N+1, N, ..., 1) down to 0.
ModelSpec kv_model(int n1, const PresetRates& rates);
ModelSpec kv_model(int n1);

// Two-level chain (N = 2) with dims (1, n1, n2, 1).
ModelSpec avk_model(int n1, int n2, const PresetRates& rates);
ModelSpec avk_model(int n1, int n2);

enum class AvkVariant { Level1, Level2 };

// Closed-form long-time limit of the pure state seeded by u in the AVK
// model. u must carry norm (1+e^{beta_1})^{-1/2} and be supported in
// span{phi_{a_1} - phi_{(a+1)_1}} (Level1) or the level-2 analogue (Level2).
Matrix avk_limit_formula(const ModelSpec& spec, AvkVariant variant,
                         const Vector& u);

}  // namespace qtransport
