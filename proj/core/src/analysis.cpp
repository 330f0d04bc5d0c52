#include "xychain/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "xychain/kahan.hpp"

namespace xychain {

std::optional<double> detect_onset(const std::vector<double>& t,
                                   const std::vector<double>& signal,
                                   const DetectionConfig& config) {
  if (t.size() != signal.size())
    throw std::invalid_argument("time/signal length mismatch");
  if (t.size() < 4) throw std::invalid_argument("series too short");
  const double t_max = t.back();
  const double base_lo = config.relax_fraction * t_max;
  const double base_hi = config.window_fraction * t_max;

  KahanSum sum;
  int n_base = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < base_lo || t[i] > base_hi) continue;
    sum.add(signal[i]);
    ++n_base;
  }
  if (n_base < 2) throw std::invalid_argument("empty baseline window");
  const double mean = sum.value() / n_base;
  KahanSum sq;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < base_lo || t[i] > base_hi) continue;
    const double d = signal[i] - mean;
    sq.add(d * d);
  }
  const double sigma = std::sqrt(std::max(0.0, sq.value() / n_base));

  double peak = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= base_hi) continue;
    peak = std::max(peak, std::abs(signal[i] - mean));
  }
  // A peak at the roundoff scale of the signal is no departure at all.
  if (peak <= 1e-12 * (1.0 + std::abs(mean))) return std::nullopt;
  const double threshold =
      std::max(config.threshold_k * sigma, config.peak_fraction * peak);
  if (threshold <= 0.0) return std::nullopt;

  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= base_hi) continue;
    if (std::abs(signal[i] - mean) > threshold) return t[i];
  }
  return std::nullopt;
}

std::optional<double> detect_revival(const std::vector<double>& t,
                                     const std::vector<double>& signal,
                                     const DetectionConfig& config) {
  return detect_onset(t, signal, config);
}

std::optional<double> detect_separation(const std::vector<double>& t,
                                        const std::vector<double>& a,
                                        const std::vector<double>& b,
                                        const DetectionConfig& config) {
  if (a.size() != b.size())
    throw std::invalid_argument("series length mismatch");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = std::abs(a[i] - b[i]);
  return detect_onset(t, diff, config);
}

LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("x/y length mismatch");
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) throw std::invalid_argument("fit needs >= 2 points");
  KahanSum sx, sy, sxx, sxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
    sxx.add(x[i] * x[i]);
    sxy.add(x[i] * y[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  const double cov_xx = sxx.value() / n - mx * mx;
  const double cov_xy = sxy.value() / n - mx * my;
  if (cov_xx <= 0.0) throw std::invalid_argument("degenerate x range");
  LinearFit f;
  f.slope = cov_xy / cov_xx;
  f.intercept = my - f.slope * mx;
  KahanSum ss_res, ss_tot;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    const double d = y[i] - my;
    ss_res.add(r * r);
    ss_tot.add(d * d);
  }
  f.r2 = ss_tot.value() > 0.0 ? 1.0 - ss_res.value() / ss_tot.value() : 1.0;
  return f;
}

CriticalPoint locate_critical_field(const std::vector<double>& h1,
                                    const std::vector<double>& statistic,
                                    double tie_eps) {
  if (h1.size() != statistic.size())
    throw std::invalid_argument("h1/statistic length mismatch");
  if (h1.empty()) throw std::invalid_argument("empty scan");
  std::size_t best = 0;
  for (std::size_t i = 1; i < h1.size(); ++i)
    if (statistic[i] > statistic[best]) best = i;
  CriticalPoint cp{h1[best], statistic[best], false};
  const double tol = tie_eps * std::max(1.0, std::abs(cp.value));
  for (std::size_t i = 0; i < h1.size(); ++i) {
    if (i == best) continue;
    if (std::abs(statistic[i] - cp.value) <= tol) {
      cp.degenerate = true;
      if (h1[i] < cp.h1) {
        cp.h1 = h1[i];
        cp.value = statistic[i];
      }
    }
  }
  return cp;
}

std::vector<MeasureSet> relaxed_scan(const ModelParams& params,
                                     const Axis1D& h1_axis, int threads) {
  std::vector<MeasureSet> out(h1_axis.count);
  std::vector<std::exception_ptr> errors(h1_axis.count);
  auto column = [&](int ih) {
    ModelParams p = params;
    p.h1 = h1_axis.value(ih);
    out[ih] = evaluate_measures(relaxed_observables(p));
  };
  if (threads <= 1) {
    for (int ih = 0; ih < h1_axis.count; ++ih) column(ih);
  } else {
    // Each worker owns a fixed stride of columns, so the output is identical
    // for any worker count.
    std::vector<std::thread> pool;
    const int workers = std::min(threads, h1_axis.count);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int ih = w; ih < h1_axis.count; ih += workers) {
          try {
            column(ih);
          } catch (...) {
            errors[ih] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace xychain
