#ifndef ACFBANDS_TESTS_AR1_REFERENCE_HPP
#define ACFBANDS_TESTS_AR1_REFERENCE_HPP

// Bartlett covariance matrices of sample autocorrelations for a stationary
// AR(1) process, H = 10, at phi = 0, 0.25, 0.5, 0.75. Entries are rounded
// to three decimals, so an exact computation matches within 5e-4.

#include <array>

namespace test_support {

struct Ar1BartlettReference {
    double phi;
    std::array<std::array<double, 10>, 10> b;
};

inline constexpr std::array<Ar1BartlettReference, 4> kAr1BartlettReference = {{
    {0.00,
     {{
         {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
         {{0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
         {{0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
         {{0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
         {{0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
         {{0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
         {{0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
         {{0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
         {{0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
         {{0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
     }}},
    {0.25,
     {{
         {{0.938, 0.469, 0.176, 0.059, 0.018, 0.005, 0.002, 0, 0, 0}},
         {{0.469, 1.113, 0.527, 0.194, 0.064, 0.02, 0.006, 0.002, 0, 0}},
         {{0.176, 0.527, 1.132, 0.533, 0.196, 0.065, 0.02, 0.006, 0.002, 0}},
         {{0.059, 0.194, 0.533, 1.133, 0.533, 0.196, 0.065, 0.02, 0.006, 0.002}},
         {{0.018, 0.064, 0.196, 0.533, 1.133, 0.533, 0.196, 0.065, 0.02, 0.006}},
         {{0.005, 0.02, 0.065, 0.196, 0.533, 1.133, 0.533, 0.196, 0.065, 0.02}},
         {{0.002, 0.006, 0.02, 0.065, 0.196, 0.533, 1.133, 0.533, 0.196, 0.065}},
         {{0, 0.002, 0.006, 0.02, 0.065, 0.196, 0.533, 1.133, 0.533, 0.196}},
         {{0, 0, 0.002, 0.006, 0.02, 0.065, 0.196, 0.533, 1.133, 0.533}},
         {{0, 0, 0, 0.002, 0.006, 0.02, 0.065, 0.196, 0.533, 1.133}},
     }}},
    {0.50,
     {{
         {{0.75, 0.75, 0.562, 0.375, 0.234, 0.141, 0.082, 0.047, 0.026, 0.015}},
         {{0.75, 1.312, 1.125, 0.797, 0.516, 0.316, 0.188, 0.108, 0.062, 0.034}},
         {{0.562, 1.125, 1.547, 1.266, 0.879, 0.562, 0.343, 0.202, 0.116, 0.066}},
         {{0.375, 0.797, 1.266, 1.629, 1.312, 0.905, 0.577, 0.351, 0.207, 0.119}},
         {{0.234, 0.516, 0.879, 1.312, 1.655, 1.327, 0.913, 0.582, 0.353, 0.208}},
         {{0.141, 0.316, 0.562, 0.905, 1.327, 1.663, 1.332, 0.916, 0.583, 0.354}},
         {{0.082, 0.188, 0.343, 0.577, 0.913, 1.332, 1.666, 1.333, 0.916, 0.583}},
         {{0.047, 0.108, 0.202, 0.351, 0.582, 0.916, 1.333, 1.666, 1.333, 0.917}},
         {{0.026, 0.062, 0.116, 0.207, 0.353, 0.583, 0.916, 1.333, 1.667, 1.333}},
         {{0.015, 0.034, 0.066, 0.119, 0.208, 0.354, 0.583, 0.917, 1.333, 1.667}},
     }}},
    {0.75,
     {{
         {{0.438, 0.656, 0.738, 0.738, 0.692, 0.623, 0.545, 0.467, 0.394, 0.328}},
         {{0.656, 1.176, 1.395, 1.43, 1.361, 1.237, 1.09, 0.939, 0.796, 0.665}},
         {{0.738, 1.395, 1.868, 2.017, 1.975, 1.828, 1.631, 1.419, 1.21, 1.017}},
         {{0.738, 1.43, 2.017, 2.413, 2.485, 2.37, 2.157, 1.902, 1.64, 1.39}},
         {{0.692, 1.361, 1.975, 2.485, 2.807, 2.813, 2.641, 2.379, 2.083, 1.786}},
         {{0.623, 1.237, 1.828, 2.37, 2.813, 3.078, 3.035, 2.821, 2.524, 2.199}},
         {{0.545, 1.09, 1.631, 2.157, 2.641, 3.035, 3.258, 3.18, 2.938, 2.618}},
         {{0.467, 0.939, 1.419, 1.902, 2.379, 2.821, 3.18, 3.375, 3.274, 3.012}},
         {{0.394, 0.796, 1.21, 1.64, 2.083, 2.524, 2.938, 3.274, 3.45, 3.333}},
         {{0.328, 0.665, 1.017, 1.39, 1.786, 2.199, 2.618, 3.012, 3.333, 3.497}},
     }}},
}};

} // namespace test_support

#endif
