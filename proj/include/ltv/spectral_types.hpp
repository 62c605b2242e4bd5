#pragma once

#include <string>
#include <vector>

namespace ltv {

// A sum evaluation carrying a rigorous upper bound on its truncation error:
// the true sum lies in [value, value + tail_bound].
struct CertifiedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  long long terms_used = 0;  // series cutoff N or lattice point count
};

enum class Domain { Sphere2, Torus2, Sphere3, Torus3 };

std::string domain_name(Domain d);
Domain domain_from_name(const std::string& s);

struct SweepPoint {
  double mu;
  CertifiedValue cv;
  double margin;  // limit - (value + tail_bound)
};

struct SweepReport {
  Domain domain;
  double k;
  double limit;
  std::vector<SweepPoint> points;
  double min_margin = 0.0;
  bool passed = false;
};

}  // namespace ltv
