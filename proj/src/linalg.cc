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

#include "hdlab/linalg.h"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace hdlab {

namespace {

using Mat = Eigen::MatrixXcd;

Mat to_eigen(const ComplexTensor &m) {
    if (m.rank() != 2) {
        throw std::invalid_argument("linalg: expected a matrix");
    }
    Mat out(m.dim(0), m.dim(1));
    for (size_t i = 0; i < m.dim(0); i++) {
        for (size_t j = 0; j < m.dim(1); j++) {
            out(i, j) = m.at(i, j);
        }
    }
    return out;
}

ComplexTensor from_eigen(const Mat &m) {
    ComplexTensor out({static_cast<size_t>(m.rows()), static_cast<size_t>(m.cols())});
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            out.at(i, j) = m(i, j);
        }
    }
    return out;
}

void require_square(const ComplexTensor &m, const char *what) {
    if (m.rank() != 2 || m.dim(0) != m.dim(1)) {
        throw std::invalid_argument(std::string(what) + ": expected a square matrix");
    }
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexTensor &m) {
    require_square(m, "hermitian_eigen");
    Mat a = to_eigen(m);
    Mat h = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigen: decomposition failed");
    }
    HermitianEigen out;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        out.values.push_back(solver.eigenvalues()(k));
    }
    out.vectors = from_eigen(solver.eigenvectors());
    return out;
}

double min_hermitian_eigenvalue(const ComplexTensor &m) {
    require_square(m, "min_hermitian_eigenvalue");
    Mat a = to_eigen(m);
    Mat h = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

std::vector<double> singular_values(const ComplexTensor &m) {
    Eigen::BDCSVD<Mat> svd(to_eigen(m));
    std::vector<double> out;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
        out.push_back(svd.singularValues()(k));
    }
    return out;
}

ComplexTensor inverse(const ComplexTensor &m) {
    require_square(m, "inverse");
    Eigen::FullPivLU<Mat> lu(to_eigen(m));
    if (!lu.isInvertible()) {
        throw std::domain_error("inverse: matrix is singular");
    }
    return from_eigen(lu.inverse());
}

ComplexTensor inverse_sqrt_psd(const ComplexTensor &m) {
    require_square(m, "inverse_sqrt_psd");
    Eigen::SelfAdjointEigenSolver<Mat> solver(to_eigen(m));
    const auto &vals = solver.eigenvalues();
    if (vals(0) <= 0) {
        throw std::domain_error("inverse_sqrt_psd: matrix is not positive definite");
    }
    Eigen::VectorXcd d = vals.cwiseSqrt().cwiseInverse().cast<std::complex<double>>();
    return from_eigen(solver.eigenvectors() * d.asDiagonal() * solver.eigenvectors().adjoint());
}

double hermiticity_residual(const ComplexTensor &m) {
    require_square(m, "hermiticity_residual");
    return max_abs_diff(m, dagger(m));
}

}  // namespace hdlab
