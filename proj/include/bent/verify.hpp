#pragma once

#include <string>
#include <vector>

#include <cstdint>

namespace bent {

struct VerifyRow {
  std::string id;
  std::string claim;       // human-readable statement being checked
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

enum class TolProfile { defaults, strict };

/// Full verification sweep over the headline values: state identities,
/// entanglement eigenvalues, certificate and optimized roof values,
/// negativity closed forms, relative-entropy upper bounds, and the
/// inequality/distillability tables. `strict` raises the sampling effort.
std::vector<VerifyRow> run_verify(TolProfile profile = TolProfile::defaults,
                                  std::uint64_t seed = 0);

bool all_pass(const std::vector<VerifyRow>& rows);

}  // namespace bent
