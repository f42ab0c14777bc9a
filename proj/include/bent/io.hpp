#pragma once

#include <string>
#include <variant>

#include "bent/convex_roof.hpp"
#include "bent/types.hpp"

namespace bent {

/// Fixed-width float formatting so reruns emit byte-identical files.
std::string format_float(double v, int significant_digits = 17);

using AnyState = std::variant<PureState, DensityMatrix>;

std::string state_to_json(const AnyState& state);
AnyState state_from_json(const std::string& text);

void save_state(const AnyState& state, const std::string& path);
AnyState load_state(const std::string& path);

std::string decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const std::string& text, int n_parties);

/// Parse the CLI state grammar: smolin, ghz:N[:alpha], dur:N:x, bell:i,
/// x:i, u:N:k, v:N:k, psiy:N:y:sign:type:k, sigma-smolin, sigma-dur:N:x.
/// Throws std::invalid_argument naming the bad token.
AnyState parse_state_spec(const std::string& spec);

}  // namespace bent
