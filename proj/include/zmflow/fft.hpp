// fft.hpp -- FFTW-backed transforms between collocation and spectral form.
//
// Conventions:
//   forward:  c(k) = (1/N) sum_x f(x) e^{-i k.x}    (amplitude-normalized)
//   backward: f(x) =       sum_k c(k) e^{+i k.x}
// so cos(k.x) has coefficients 1/2 at +-k. Plans are cached per (dim, n) and
// created with FFTW_ESTIMATE | FFTW_UNALIGNED: the planner choice is then
// deterministic and execution works on any buffer via the new-array API.
#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "zmflow/field.hpp"
#include "zmflow/grid.hpp"

namespace zm {
namespace detail {

class FftPlans {
public:
    static FftPlans& instance() {
        static FftPlans p;
        return p;
    }

    void forward(const Grid& g, std::complex<double>* buf) {
        execute(plan(g, FFTW_FORWARD), buf);
    }
    void backward(const Grid& g, std::complex<double>* buf) {
        execute(plan(g, FFTW_BACKWARD), buf);
    }

    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;

private:
    FftPlans() = default;
    ~FftPlans() {
        for (auto& [key, p] : plans_) fftw_destroy_plan(p);
    }

    using Key = std::tuple<int, int, int>; // dim, n, sign

    fftw_plan plan(const Grid& g, int sign) {
        const Key key{g.dim(), g.n(), sign};
        std::lock_guard<std::mutex> lock(mutex_); // FFTW planner is not thread-safe
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<std::complex<double>> scratch(g.size());
        std::vector<int> dims(static_cast<std::size_t>(g.dim()), g.n());
        fftw_plan p = fftw_plan_dft(
            g.dim(), dims.data(),
            reinterpret_cast<fftw_complex*>(scratch.data()),
            reinterpret_cast<fftw_complex*>(scratch.data()),
            sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

    static void execute(fftw_plan p, std::complex<double>* buf) {
        fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf),
                         reinterpret_cast<fftw_complex*>(buf));
    }

    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

} // namespace detail

inline SpectralField to_spectral(const ScalarField& f) {
    SpectralField s(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) s[i] = f[i];
    detail::FftPlans::instance().forward(f.grid(), s.data().data());
    const double scale = 1.0 / static_cast<double>(f.size());
    s *= scale;
    return s;
}

inline ScalarField to_physical(const SpectralField& s) {
    std::vector<std::complex<double>> buf = s.data();
    detail::FftPlans::instance().backward(s.grid(), buf.data());
    ScalarField f(s.grid());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = buf[i].real();
    return f;
}

inline std::vector<SpectralField> to_spectral(const VectorField& w) {
    std::vector<SpectralField> out;
    out.reserve(static_cast<std::size_t>(w.dim()));
    for (int a = 0; a < w.dim(); ++a) out.push_back(to_spectral(w.comp(a)));
    return out;
}

} // namespace zm
