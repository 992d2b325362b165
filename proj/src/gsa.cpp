#include "gap/gsa.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gap {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& tok, long long line_no) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0'))
    throw std::runtime_error("csv: line " + std::to_string(line_no) +
                             ": not a number: '" + tok + "'");
  if (!std::isfinite(v))
    throw std::runtime_error("csv: line " + std::to_string(line_no) +
                             ": non-finite value");
  return v;
}

}  // namespace

SampleSet load_sample_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("csv: " + path + " is empty");
  const auto header = split_csv_line(line);
  const size_t cols = header.size();
  if (cols < 3 || cols % 2 == 0)
    throw std::runtime_error("csv: header must be x1..xd,f,g1..gd");
  const int d = (int)((cols - 1) / 2);
  for (int i = 0; i < d; ++i) {
    if (header[i] != "x" + std::to_string(i + 1) ||
        header[d + 1 + i] != "g" + std::to_string(i + 1))
      throw std::runtime_error("csv: header must be x1..xd,f,g1..gd, got '" +
                               header[i] + "' in position " +
                               std::to_string(i + 1));
  }
  if (header[d] != "f")
    throw std::runtime_error("csv: header must name column " +
                             std::to_string(d + 1) + " 'f'");
  SampleSet s;
  s.dim = d;
  s.source = path;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto toks = split_csv_line(line);
    if (toks.size() != cols)
      throw std::runtime_error("csv: line " + std::to_string(line_no) +
                               ": expected " + std::to_string(cols) +
                               " columns, got " + std::to_string(toks.size()));
    for (int i = 0; i < d; ++i) s.x.push_back(parse_number(toks[i], line_no));
    s.f.push_back(parse_number(toks[d], line_no));
    for (int i = 0; i < d; ++i)
      s.grad.push_back(parse_number(toks[d + 1 + i], line_no));
    ++s.n;
  }
  if (s.n < 2) throw std::runtime_error("csv: need at least 2 rows");
  return s;
}

void require_inside(const SampleSet& samples, const Body& body) {
  if (samples.dim != dim(body))
    throw std::invalid_argument("require_inside: dimension mismatch");
  long long outside = 0;
  std::vector<double> x(samples.dim);
  for (long long r = 0; r < samples.n; ++r) {
    for (int i = 0; i < samples.dim; ++i) x[i] = samples.x[r * samples.dim + i];
    if (!contains(body, x)) ++outside;
  }
  if (outside * 1000 > samples.n)
    throw std::runtime_error("samples: " + std::to_string(outside) + " of " +
                             std::to_string(samples.n) +
                             " points fall outside the declared body");
}

DgsmEstimate estimate_dgsm(const SampleSet& s) {
  if (s.n < 2) throw std::invalid_argument("estimate_dgsm: need >= 2 rows");
  const int d = s.dim;
  const long long n = s.n;
  DgsmEstimate est;
  est.n = n;
  est.nu.assign(d, 0.0);
  est.nu_se.assign(d, 0.0);
  for (long long r = 0; r < n; ++r)
    for (int i = 0; i < d; ++i) {
      const double g = s.grad[r * d + i];
      est.nu[i] += g * g / n;
    }
  for (long long r = 0; r < n; ++r)
    for (int i = 0; i < d; ++i) {
      const double g = s.grad[r * d + i];
      const double dev = g * g - est.nu[i];
      est.nu_se[i] += dev * dev;
    }
  for (int i = 0; i < d; ++i)
    est.nu_se[i] = std::sqrt(est.nu_se[i] / (n - 1.0) / n);

  double s1 = 0.0, s2 = 0.0;
  for (long long r = 0; r < n; ++r) {
    s1 += s.f[r];
    s2 += s.f[r] * s.f[r];
  }
  est.variance = (s2 - s1 * s1 / n) / (n - 1.0);
  if (n > 2) {
    // leave-one-out variances in closed form, then the jackknife formula
    double mean_loo = 0.0;
    std::vector<double> loo((size_t)n);
    for (long long r = 0; r < n; ++r) {
      const double t1 = s1 - s.f[r];
      const double t2 = s2 - s.f[r] * s.f[r];
      loo[(size_t)r] = (t2 - t1 * t1 / (n - 1.0)) / (n - 2.0);
      mean_loo += loo[(size_t)r] / n;
    }
    double acc = 0.0;
    for (long long r = 0; r < n; ++r) {
      const double dev = loo[(size_t)r] - mean_loo;
      acc += dev * dev;
    }
    est.variance_se = std::sqrt(acc * (n - 1.0) / n);
  }
  return est;
}

GsaReport sobol_upper_bound(const SampleSet& samples,
                            const BoundReport& lambda) {
  if (lambda.kind == BoundKind::upper)
    throw std::invalid_argument(
        "sobol_upper_bound: lambda must be a lower bound or exact value");
  if (!lambda.assumptions_ok || !(lambda.value > 0.0))
    throw std::invalid_argument(
        "sobol_upper_bound: lambda is not a usable certificate");
  GsaReport rep;
  rep.dgsm = estimate_dgsm(samples);
  if (!(rep.dgsm.variance > 0.0))
    throw std::runtime_error("sobol_upper_bound: sample variance is zero");
  rep.lambda_used = lambda;
  const int d = samples.dim;
  rep.sobol_upper.resize(d);
  rep.sobol_upper_se.resize(d);
  rep.exceeds_one.resize(d);
  const double lv = lambda.value * rep.dgsm.variance;
  for (int i = 0; i < d; ++i) {
    const double s = rep.dgsm.nu[i] / lv;
    rep.sobol_upper[i] = s;
    const double rel_nu =
        rep.dgsm.nu[i] > 0.0 ? rep.dgsm.nu_se[i] / rep.dgsm.nu[i] : 0.0;
    const double rel_var = rep.dgsm.variance_se / rep.dgsm.variance;
    rep.sobol_upper_se[i] =
        rep.dgsm.nu[i] > 0.0
            ? s * std::sqrt(rel_nu * rel_nu + rel_var * rel_var)
            : rep.dgsm.nu_se[i] / lv;
    rep.exceeds_one[i] = s > 1.0;
  }
  return rep;
}

}  // namespace gap
