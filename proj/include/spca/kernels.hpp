#pragma once

#include <cstddef>

namespace spca::kernels {

// Double-precision primitives behind every inner loop of the library:
// matvec rows (dot), transposed matvec accumulation (axpy), iterate
// rescaling (scale/sqnorm), the l1 prox (soft_threshold) and pairwise
// distances (sqdist).
//
// Each primitive has a scalar reference implementation and may have SIMD
// variants. One table is selected per process: the best ISA the CPU
// supports, overridable with SPCA_ISA=scalar|avx2 for debugging and for
// the cross-ISA equivalence tests.
struct Ops {
    const char* name;

    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sqnorm)(const double* x, std::size_t n);
    double (*sqdist)(const double* x, const double* y, std::size_t n);

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // x[i] *= a
    void (*scale)(double* x, double a, std::size_t n);
    // out[i] = max(|v[i]| - theta, 0) * sign(v[i]); sign(0) = 0
    void (*soft_threshold)(const double* v, double theta, double* out, std::size_t n);
};

// Scalar reference table; always available.
const Ops& scalar_ops();

// AVX2+FMA table, or nullptr when the compiler or CPU does not support it.
const Ops* avx2_ops();

// Table used by the library, selected once per process.
const Ops& active();

}  // namespace spca::kernels
