// Copyright 2026 The hdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense matrix decompositions on rank-2 ComplexTensors, backed by Eigen.

#ifndef HDLAB_LINALG_H
#define HDLAB_LINALG_H

#include <vector>

#include "hdlab/tensor.h"

namespace hdlab {

struct HermitianEigen {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the eigenvector for values[k].
    ComplexTensor vectors;
};

/// Eigendecomposition of the Hermitian part (M + M^dagger)/2.
HermitianEigen hermitian_eigen(const ComplexTensor &m);
double min_hermitian_eigenvalue(const ComplexTensor &m);

/// Descending singular values.
std::vector<double> singular_values(const ComplexTensor &m);

ComplexTensor inverse(const ComplexTensor &m);

/// (M)^{-1/2} of a positive definite Hermitian matrix.
ComplexTensor inverse_sqrt_psd(const ComplexTensor &m);

/// Largest deviation from Hermiticity, max |M - M^dagger|.
double hermiticity_residual(const ComplexTensor &m);

}  // namespace hdlab

#endif
