#pragma once

#include <string>
#include <vector>

#include "gap/geometry.hpp"
#include "gap/report.hpp"

namespace gap {

// Derivative-based global sensitivity: with a certified spectral-gap lower
// bound lambda, the Poincare inequality turns mean squared partial
// derivatives (DGSM) into upper bounds on total Sobol indices.

struct SampleSet {
  int dim = 0;
  long long n = 0;
  std::vector<double> x;     // n * dim, row-major
  std::vector<double> f;     // n
  std::vector<double> grad;  // n * dim, row-major
  std::string source;
};

// CSV with header x1,..,xd,f,g1,..,gd; '.' decimal, comma separated
SampleSet load_sample_csv(const std::string& path);

// throws if more than 0.1% of the points fall outside the body
void require_inside(const SampleSet& samples, const Body& body);

struct DgsmEstimate {
  std::vector<double> nu;     // mean (d_i f)^2 per coordinate
  std::vector<double> nu_se;  // standard errors of the means
  double variance = 0.0;      // unbiased sample variance of f
  double variance_se = 0.0;   // jackknife standard error
  long long n = 0;
};

DgsmEstimate estimate_dgsm(const SampleSet& samples);

struct GsaReport {
  DgsmEstimate dgsm;
  std::vector<double> sobol_upper;     // nu_i / (lambda * variance)
  std::vector<double> sobol_upper_se;  // first-order error propagation
  std::vector<bool> exceeds_one;       // valid but uninformative entries
  BoundReport lambda_used;
};

// lambda must be a certified lower bound or exact value with positive value
GsaReport sobol_upper_bound(const SampleSet& samples,
                            const BoundReport& lambda);

}  // namespace gap
