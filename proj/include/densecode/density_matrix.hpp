#pragma once

#include <numeric>
#include <vector>

#include "densecode/complex_matrix.hpp"
#include "densecode/eigen.hpp"

namespace densecode {

enum class Side { A, B };

/// Hermitian, unit-trace, positive-semidefinite matrix with subsystem
/// dimension metadata. Invariants are checked at construction:
/// hermiticity within 1e-10, trace within 1e-10 of 1, smallest
/// eigenvalue >= -1e-9.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdTol = 1e-9;

    DensityMatrix(ComplexMatrix mat, std::vector<int> dims)
        : mat_(std::move(mat)), dims_(std::move(dims)) {
        int prod = 1;
        for (int d : dims_) {
            require(d > 0, "DensityMatrix: subsystem dimensions must be positive");
            prod *= d;
        }
        require(prod == mat_.dim(), "DensityMatrix: product of dims must equal matrix dim");
        require(mat_.is_hermitian(kHermitianTol), "DensityMatrix: not Hermitian");
        require(std::abs(mat_.trace() - Complex{1.0}) <= kTraceTol, "DensityMatrix: trace != 1");
        const auto spec = hermitian_eigenvalues(mat_, kHermitianTol);
        require(spec.values.back() >= -kPsdTol, "DensityMatrix: not positive semidefinite");
    }

    const ComplexMatrix& mat() const { return mat_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return mat_.dim(); }

private:
    ComplexMatrix mat_;
    std::vector<int> dims_;
};

/// Reduced state on the kept subsystem of a bipartite density matrix.
inline DensityMatrix partial_trace(const DensityMatrix& rho, Side keep) {
    require(rho.dims().size() == 2, "partial_trace: state must be bipartite");
    const int da = rho.dims()[0], db = rho.dims()[1];
    const ComplexMatrix& m = rho.mat();
    switch (keep) {
        case Side::A: {
            ComplexMatrix out(da);
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < da; ++j)
                    for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
            return DensityMatrix(std::move(out), {da});
        }
        case Side::B: {
            ComplexMatrix out(db);
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    for (int i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
            return DensityMatrix(std::move(out), {db});
        }
    }
    throw std::invalid_argument("partial_trace: keep must be Side::A or Side::B");
}

}  // namespace densecode
