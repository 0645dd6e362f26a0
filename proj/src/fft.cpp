#include "splitwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

// Thin wrapper over FFTW. Plans are created once per size with FFTW_ESTIMATE,
// which picks its algorithm deterministically (no runtime measurement), and are
// cached for the lifetime of the process. Planning is serialized because the
// FFTW planner is not thread safe; execution through fftw_execute_dft on
// per-call buffers is.

namespace splitwave::fft {
namespace {

struct PlanPair {
    fftw_plan forward_plan;
    fftw_plan inverse_plan;
};

PlanPair plans_for(int n) {
    static std::mutex mutex;
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    PlanPair pair;
    pair.forward_plan = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    pair.inverse_plan = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    cache.emplace(n, pair);
    return pair;
}

struct ScratchPair {
    fftw_complex* in;
    fftw_complex* out;
    explicit ScratchPair(int n) {
        in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    }
    ~ScratchPair() {
        fftw_free(in);
        fftw_free(out);
    }
    ScratchPair(const ScratchPair&) = delete;
    ScratchPair& operator=(const ScratchPair&) = delete;
};

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<double>& samples) {
    const int n = static_cast<int>(samples.size());
    PlanPair plans = plans_for(n);
    ScratchPair buf(n);
    for (int j = 0; j < n; ++j) {
        buf.in[j][0] = samples[j];
        buf.in[j][1] = 0.0;
    }
    fftw_execute_dft(plans.forward_plan, buf.in, buf.out);
    std::vector<std::complex<double>> coeff(n);
    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i)
        coeff[i] = std::complex<double>(buf.out[i][0] * scale, buf.out[i][1] * scale);
    return coeff;
}

std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum) {
    const int n = static_cast<int>(spectrum.size());
    PlanPair plans = plans_for(n);
    ScratchPair buf(n);
    for (int i = 0; i < n; ++i) {
        buf.in[i][0] = spectrum[i].real();
        buf.in[i][1] = spectrum[i].imag();
    }
    fftw_execute_dft(plans.inverse_plan, buf.in, buf.out);
    std::vector<double> samples(n);
    for (int j = 0; j < n; ++j) samples[j] = buf.out[j][0];
    return samples;
}

}  // namespace splitwave::fft
