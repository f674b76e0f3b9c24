#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace chemoflow {
namespace fft {
namespace {

struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, Plans>& plan_cache() {
    static std::map<int, Plans> cache;
    return cache;
}

// FFTW_UNALIGNED lets the cached plan run on any caller buffer.
Plans& plans_for(int n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
    std::vector<std::complex<double>> b(a.size());
    Plans p;
    p.fwd = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, p).first->second;
}

}  // namespace

void forward(const SpectralGrid& g, const std::vector<double>& samples,
             std::vector<std::complex<double>>& coeff) {
    const std::size_t sz = g.size();
    require(samples.size() == sz, ErrorCode::GridMismatch, "fft: sample count does not match grid");
    std::vector<std::complex<double>> in(sz);
    for (std::size_t i = 0; i < sz; ++i)
        in[i] = samples[i];
    coeff.resize(sz);
    Plans& p = plans_for(g.n);
    fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(coeff.data()));
    const double scale = 1.0 / static_cast<double>(sz);
    for (auto& c : coeff)
        c *= scale;
}

void backward(const SpectralGrid& g, const std::vector<std::complex<double>>& coeff,
              std::vector<double>& samples) {
    const std::size_t sz = g.size();
    require(coeff.size() == sz, ErrorCode::GridMismatch, "fft: coefficient count does not match grid");
    std::vector<std::complex<double>> in(coeff);
    std::vector<std::complex<double>> out(sz);
    Plans& p = plans_for(g.n);
    fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    samples.resize(sz);
    for (std::size_t i = 0; i < sz; ++i)
        samples[i] = out[i].real();
}

}  // namespace fft

SpectralField to_spectral(const Field& f) {
    SpectralField out(f.grid);
    fft::forward(f.grid, f.v, out.c);
    return out;
}

Field to_physical(const SpectralField& f) {
    Field out(f.grid);
    fft::backward(f.grid, f.c, out.v);
    return out;
}

}  // namespace chemoflow
