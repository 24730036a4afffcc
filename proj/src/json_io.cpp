#include "q2lab/json_io.hpp"

#include <fstream>

namespace q2lab {

Json pauli_to_json(const PauliString& p) {
  Json j;
  j["phase_exponent"] = p.phase_exponent();
  j["x_bits"] = p.x_bits();
  j["z_bits"] = p.z_bits();
  return j;
}

PauliString pauli_from_json(const Json& j) {
  return PauliString::from_bits(j.at("x_bits").get<std::vector<uint8_t>>(),
                                j.at("z_bits").get<std::vector<uint8_t>>(),
                                j.value("phase_exponent", 0));
}

DriveSpec drive_from_json(const Json& j) {
  DriveSpec spec(j.at("dimension").get<int>());
  for (const Json& c : j.value("coefficients", Json::array())) {
    DriveCoefficient dc;
    dc.constant = c.value("constant", 0.0);
    for (const Json& s : c.value("sinusoids", Json::array())) {
      SinusoidTerm term;
      term.amplitude = s.at("amplitude").get<double>();
      term.angular_frequency = s.at("angular_frequency").get<double>();
      term.phase = s.value("phase", 0.0);
      dc.sinusoids.push_back(term);
    }
    spec.set(c.at("mu").get<int>(), c.at("nu").get<int>(), std::move(dc));
  }
  return spec;
}

Json drive_to_json(const DriveSpec& spec) {
  Json j;
  j["dimension"] = spec.dimension();
  Json coeffs = Json::array();
  for (int mu = 2; mu <= spec.dimension(); ++mu)
    for (int nu = 1; nu < mu; ++nu) {
      if (!spec.is_set(mu, nu)) continue;
      const DriveCoefficient& dc = spec.coefficient(mu, nu);
      Json c;
      c["mu"] = mu;
      c["nu"] = nu;
      c["constant"] = dc.constant;
      Json sins = Json::array();
      for (const SinusoidTerm& s : dc.sinusoids)
        sins.push_back({{"amplitude", s.amplitude},
                        {"angular_frequency", s.angular_frequency},
                        {"phase", s.phase}});
      c["sinusoids"] = sins;
      coeffs.push_back(c);
    }
  j["coefficients"] = coeffs;
  return j;
}

DriveSpec load_drive_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open drive file: " + path);
  Json j;
  in >> j;
  return drive_from_json(j);
}

}  // namespace q2lab
