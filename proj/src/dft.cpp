#include "lmbeta/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace lmbeta {

namespace {

// FFTW plan creation is not thread-safe; executing a plan on fresh buffers
// is. Plans are cached per (size, sign) and reused via fftw_execute_dft.
// FFTW_UNALIGNED keeps the plan valid for any buffer alignment, and
// FFTW_ESTIMATE keeps the algorithm choice reproducible run to run.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(in.data()),
        reinterpret_cast<fftw_complex*>(out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

std::vector<std::complex<double>> transform(
    const std::vector<std::complex<double>>& x, int sign) {
  if (x.empty()) return {};
  static PlanCache cache;
  fftw_plan plan = cache.get(static_cast<int>(x.size()), sign);
  std::vector<std::complex<double>> in(x);
  std::vector<std::complex<double>> out(x.size());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<std::complex<double>> dft(
    const std::vector<std::complex<double>>& x) {
  return transform(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> idft(
    const std::vector<std::complex<double>>& x) {
  return transform(x, FFTW_BACKWARD);
}

}  // namespace lmbeta
