#include "edq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace edq::detail {

namespace {

// FFTW planning is not thread-safe; execution via fftw_execute_dft is.
// Plans are created once per (size, direction) with FFTW_UNALIGNED so they
// can run on any caller buffer.
class PlanCache {
 public:
  fftw_plan get(std::size_t n, bool forward) {
    const std::pair<std::size_t, bool> key{n, forward};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> scratch(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(scratch.data()),
                                   reinterpret_cast<fftw_complex*>(scratch.data()),
                                   forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::size_t, bool>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void dft_pow2(std::complex<double>* data, std::size_t n, bool forward) {
  fftw_plan p = cache().get(n, forward);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

}  // namespace edq::detail
