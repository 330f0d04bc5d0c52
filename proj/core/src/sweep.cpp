#include "xychain/sweep.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace xychain {

namespace {

// Runs fn(i) for i in [0, n) on the requested number of threads. Work is
// handed out in chunks through an atomic counter; cells are independent, so
// scheduling never affects values.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || n < 2) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = std::min(threads, n);
  const int chunk = std::max(1, n / (workers * 8));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const int begin = next.fetch_add(chunk);
      if (begin >= n) return;
      const int end = std::min(n, begin + chunk);
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

[[noreturn]] void rethrow_with_coordinate(const std::exception& e,
                                          const std::string& where) {
  throw std::runtime_error(where + ": " + e.what());
}

}  // namespace

Axis1D make_axis(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("axis needs at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("axis must be increasing");
  return Axis1D{lo, hi, count};
}

Axis1D make_axis_step(double lo, double hi, double max_step) {
  if (!(max_step > 0.0)) throw std::invalid_argument("axis step must be > 0");
  const int count =
      std::max(2, static_cast<int>(std::ceil((hi - lo) / max_step)) + 1);
  return make_axis(lo, hi, count);
}

std::vector<double> SeriesResult::column(double MeasureSet::* field) const {
  std::vector<double> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(c.*field);
  return out;
}

SeriesResult evolve_series(const ModelParams& params, const Axis1D& t_axis,
                           int threads) {
  if (t_axis.count < 2) throw std::invalid_argument("t axis needs >= 2 points");
  SeriesResult r;
  r.params = params;
  r.t_axis = t_axis;
  r.cells.resize(t_axis.count);
  const QuenchKernel kernel(params);
  parallel_for(t_axis.count, threads, [&](int i) {
    const double t = t_axis.value(i);
    try {
      r.cells[i] = evaluate_measures(kernel.at(t));
    } catch (const std::exception& e) {
      rethrow_with_coordinate(e, "t=" + std::to_string(t));
    }
  });
  return r;
}

MapResult field_map(const ModelParams& params, const Axis1D& t_axis,
                    const Axis1D& h1_axis, int threads) {
  MapResult r;
  r.params = params;
  r.t_axis = t_axis;
  r.h1_axis = h1_axis;
  r.cells.resize(static_cast<std::size_t>(t_axis.count) * h1_axis.count);
  // One kernel per column; columns are the parallel unit.
  parallel_for(h1_axis.count, threads, [&](int ih) {
    ModelParams p = params;
    p.h1 = h1_axis.value(ih);
    const QuenchKernel kernel(p);
    for (int it = 0; it < t_axis.count; ++it) {
      const double t = t_axis.value(it);
      try {
        r.cells[static_cast<std::size_t>(it) * h1_axis.count + ih] =
            evaluate_measures(kernel.at(t));
      } catch (const std::exception& e) {
        rethrow_with_coordinate(
            e, "t=" + std::to_string(t) + " h1=" + std::to_string(p.h1));
      }
    }
  });
  return r;
}

std::vector<SeriesResult> size_family(const ModelParams& params,
                                      const std::vector<int>& sizes,
                                      const Axis1D& t_axis, int threads) {
  if (sizes.empty()) throw std::invalid_argument("size list is empty");
  std::vector<SeriesResult> out;
  out.reserve(sizes.size());
  for (int n : sizes) {
    ModelParams p = make_params(n, params.gamma, params.j0, params.j1,
                                params.h0, params.h1, params.temperature);
    out.push_back(evolve_series(p, t_axis, threads));
  }
  return out;
}

std::uint64_t grid_hash(const ModelParams& params, const Axis1D& t_axis,
                        const Axis1D* h1_axis) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  };
  auto mix_double = [&](double v) { mix(&v, sizeof v); };
  mix(&params.n_sites, sizeof params.n_sites);
  mix_double(params.gamma);
  mix_double(params.j0);
  mix_double(params.j1);
  mix_double(params.h0);
  mix_double(params.h1);
  mix_double(params.temperature);
  mix_double(t_axis.lo);
  mix_double(t_axis.hi);
  mix(&t_axis.count, sizeof t_axis.count);
  if (h1_axis) {
    mix_double(h1_axis->lo);
    mix_double(h1_axis->hi);
    mix(&h1_axis->count, sizeof h1_axis->count);
  }
  return h;
}

}  // namespace xychain
