#pragma once

// Thin RAII wrapper over FFTW's complex-to-complex transform.

#include "core.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace bwkt
{

enum class FftSign
{
    negative = FFTW_FORWARD,  // sum x_n exp(-2 pi i k n / N)
    positive = FFTW_BACKWARD, // sum x_n exp(+2 pi i k n / N), unscaled
};

namespace detail
{

// FFTW's planner is not re-entrant.
inline std::mutex& fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

struct FftwFree
{
    void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};

} // namespace detail

inline std::vector<complex> fft(std::span<const complex> input, FftSign sign)
{
    const std::size_t n = input.size();
    if (n == 0)
        return {};
    std::unique_ptr<fftw_complex, detail::FftwFree> in(fftw_alloc_complex(n));
    std::unique_ptr<fftw_complex, detail::FftwFree> out(fftw_alloc_complex(n));
    if (!in || !out)
        throw std::bad_alloc();

    fftw_plan plan;
    {
        std::lock_guard lock(detail::fftw_planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), static_cast<int>(sign),
                                FFTW_ESTIMATE);
    }
    static_assert(sizeof(complex) == sizeof(fftw_complex));
    std::memcpy(in.get(), input.data(), n * sizeof(complex));
    fftw_execute(plan);
    std::vector<complex> result(n);
    std::memcpy(static_cast<void*>(result.data()), out.get(), n * sizeof(complex));
    {
        std::lock_guard lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return result;
}

inline std::size_t next_power_of_two(std::size_t n) noexcept
{
    std::size_t p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

} // namespace bwkt
