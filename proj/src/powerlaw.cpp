#include "mpa/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mpa/error.hpp"

namespace mpa {

const char* to_string(FitMethod method) noexcept {
  return method == FitMethod::DiscreteMle ? "discrete_mle" : "ccdf_regression";
}

namespace {

// Distinct values of a sorted sample with the index of their first occurrence.
struct Runs {
  std::vector<std::uint64_t> value;
  std::vector<std::size_t> start;
};

Runs runs_of(const std::vector<std::uint64_t>& sorted) {
  Runs r;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      r.value.push_back(sorted[i]);
      r.start.push_back(i);
    }
  }
  return r;
}

double model_ccdf(double x, double k_min, double gamma) {
  return std::pow((x - 0.5) / (k_min - 0.5), 1.0 - gamma);
}

// Sup distance over the tail starting at run `first`, evaluated at every
// distinct value and one past it (where the empirical CCDF steps down).
double ks_distance(const Runs& runs, std::size_t first, std::size_t n_total, double gamma) {
  const double k_min = static_cast<double>(runs.value[first]);
  const double tail = static_cast<double>(n_total - runs.start[first]);
  double d = 0.0;
  for (std::size_t r = first; r < runs.value.size(); ++r) {
    const double emp = static_cast<double>(n_total - runs.start[r]) / tail;
    const double x = static_cast<double>(runs.value[r]);
    d = std::max(d, std::abs(emp - model_ccdf(x, k_min, gamma)));
    const double emp_next =
        r + 1 < runs.value.size() ? static_cast<double>(n_total - runs.start[r + 1]) / tail : 0.0;
    d = std::max(d, std::abs(emp_next - model_ccdf(x + 1.0, k_min, gamma)));
  }
  return d;
}

double regression_gamma(const Runs& runs, std::size_t first, std::size_t n_total) {
  const double tail = static_cast<double>(n_total - runs.start[first]);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(runs.value.size() - first);
  for (std::size_t r = first; r < runs.value.size(); ++r) {
    const double x = std::log(static_cast<double>(runs.value[r]));
    const double y = std::log(static_cast<double>(n_total - runs.start[r]) / tail);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return 1.0 - slope;
}

}  // namespace

PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, const FitOptions& options) {
  if (options.k_min && *options.k_min == 0) {
    throw Error(ErrorCode::InvalidParams, "k_min must be positive");
  }
  std::vector<std::uint64_t> sorted;
  sorted.reserve(samples.size());
  for (auto k : samples) {
    if (k > 0) sorted.push_back(k);
  }
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const Runs runs = runs_of(sorted);
  const std::size_t min_tail = std::max<std::size_t>(options.min_tail, 2);

  // suffix_log[r] = sum of ln k over samples in runs r.. end
  std::vector<double> suffix_log(runs.value.size() + 1, 0.0);
  for (std::size_t r = runs.value.size(); r-- > 0;) {
    const std::size_t count = (r + 1 < runs.value.size() ? runs.start[r + 1] : n) - runs.start[r];
    suffix_log[r] = suffix_log[r + 1] + static_cast<double>(count) * std::log(static_cast<double>(runs.value[r]));
  }

  auto usable = [&](std::size_t r) {
    return r + 1 < runs.value.size() && n - runs.start[r] >= min_tail;
  };
  auto mle = [&](std::size_t r) {
    const double tail = static_cast<double>(n - runs.start[r]);
    const double denom = suffix_log[r] - tail * std::log(static_cast<double>(runs.value[r]) - 0.5);
    return 1.0 + tail / denom;
  };

  std::size_t first = 0;
  if (options.k_min) {
    first = static_cast<std::size_t>(
        std::lower_bound(runs.value.begin(), runs.value.end(), *options.k_min) - runs.value.begin());
    if (first >= runs.value.size() || !usable(first)) {
      throw Error(ErrorCode::InsufficientTail,
                  "fewer than " + std::to_string(min_tail) + " samples (or one distinct value) at k >= " +
                      std::to_string(*options.k_min));
    }
  } else {
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t r = 0; r < runs.value.size(); ++r) {
      if (!usable(r)) continue;
      const double d = ks_distance(runs, r, n, mle(r));
      if (d < best) {
        best = d;
        first = r;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::InsufficientTail, "no k_min leaves " + std::to_string(min_tail) +
                                                   " samples over two distinct values");
    }
  }

  PowerLawFit fit;
  fit.method = options.method;
  fit.k_min = runs.value[first];
  fit.n_tail = n - runs.start[first];
  const double g_mle = mle(first);
  fit.gamma_hat = options.method == FitMethod::DiscreteMle ? g_mle : regression_gamma(runs, first, n);
  fit.ks_distance = ks_distance(runs, first, n, fit.gamma_hat);
  return fit;
}

PowerLawFit fit_power_law(std::span<const std::uint32_t> samples, const FitOptions& options) {
  std::vector<std::uint64_t> wide(samples.begin(), samples.end());
  return fit_power_law(std::span<const std::uint64_t>(wide), options);
}

}  // namespace mpa
