// Spacetime configuration files and the structured output format.
//
// Config grammar (line oriented, # comments):
//   dimension = 3
//   V = r^-1            # potential route: V and optional Omega
//   Omega = 0
// or explicit components in the chart variable names:
//   h_xx = 1  h_yy = 1  h_zz = 1
//   theta_t = 1
//   U_t = 1
//   A_t = -r^-1
// Unlisted components are zero.  The potential route and the explicit route
// are mutually exclusive.
#pragma once

#include "ncsym/geometry.hpp"
#include <string>

namespace ncsym {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NCSpacetime load_spacetime_config(const std::string& text);
NCSpacetime load_spacetime_config_file(const std::string& path);

} // namespace ncsym
