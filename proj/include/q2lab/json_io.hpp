#pragma once

#include <string>

#include <json.hpp>

#include "q2lab/evolution.hpp"
#include "q2lab/pauli.hpp"

namespace q2lab {

using Json = nlohmann::json;

/// {phase_exponent, x_bits, z_bits}; bit arrays are position-indexed with
/// entry 0 = leftmost letter.
Json pauli_to_json(const PauliString& p);
PauliString pauli_from_json(const Json& j);

/// Drive file: {"dimension": 5|6, "coefficients": [{"mu", "nu", "constant",
/// "sinusoids": [{"amplitude", "angular_frequency", "phase"}]}]}.
/// Unlisted pairs are zero; duplicate pairs are rejected.
DriveSpec drive_from_json(const Json& j);
Json drive_to_json(const DriveSpec& spec);

DriveSpec load_drive_file(const std::string& path);

}  // namespace q2lab
