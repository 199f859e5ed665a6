#pragma once

#include <string>
#include <vector>

#include "oscillent/system_model.hpp"

namespace oscillent::cli {

/// State syntax:
///   coherent                      ground state
///   coherent:ar,ai,br,bi          alpha = ar + i ai, beta = br + i bi
///   number:m,n
///   sup:m,n,re[,im];m,n,re[,im]   normalized before use
///   unbound:m[,tau]               tau defaults to 0
///   theta:m1,n1;m2,n2             cos(theta)|m1,n1> + sin(theta)|m2,n2>
StateSpec parse_state(const std::string& text, double theta = 0.0);

bool is_theta_state(const std::string& text);

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool logarithmic = false;

  std::vector<double> values() const;
};

/// start:stop:count[:lin|log]
SweepRange parse_range(const std::string& text);

}  // namespace oscillent::cli
