#pragma once

#include <string>
#include <vector>

namespace emosig::dsp {

/// Orthonormal Daubechies filter pair. Supported families: db2, db4, db8.
struct WaveletFilter {
    std::string name;
    std::vector<double> lowpass;  // scaling filter
    std::vector<double> highpass; // quadrature mirror
};

const WaveletFilter& wavelet_by_name(std::string_view name);

/// Multi-level periodized DWT. Input length must be divisible by 2^levels.
/// Coefficient layout: approximation of the coarsest level first, then
/// details coarsest-to-finest.
struct DwtCoeffs {
    std::vector<double> approx;
    std::vector<std::vector<double>> details; // [0] = coarsest
};

DwtCoeffs dwt_forward(const std::vector<double>& x, const WaveletFilter& filter, int levels);
std::vector<double> dwt_inverse(const DwtCoeffs& coeffs, const WaveletFilter& filter);

} // namespace emosig::dsp
