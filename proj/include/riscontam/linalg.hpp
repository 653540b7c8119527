// SPDX-License-Identifier: Apache-2.0
//
// riscontam: link-level simulator of inter-operator pilot contamination in
// multi-operator RIS-assisted uplinks
// Copyright (C) 2026 The riscontam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCONTAM_LINALG_HPP
#define RISCONTAM_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace riscontam
{
    using cdouble = std::complex<double>;
    using CVec = Eigen::VectorXcd;
    using CMat = Eigen::MatrixXcd;
    using RVec = Eigen::VectorXd;
    using RMat = Eigen::MatrixXd;

    inline constexpr double pi = 3.14159265358979323846;

    // Raised when a numerical precondition fails (singular systems, non-PSD input, ...)
    class numerical_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline void require(bool condition, const std::string &message)
    {
        if (!condition)
            throw std::invalid_argument(message);
    }

    // Diagonal matrix D_x with the entries of x on its diagonal
    inline CMat diag_matrix(const CVec &x)
    {
        return x.asDiagonal();
    }

    // Entrywise inverse of a vector with nonzero entries, used for D_x^{-1}
    inline CVec inverse_entries(const CVec &x, const char *what = "vector")
    {
        CVec out(x.size());
        for (Eigen::Index n = 0; n < x.size(); ++n)
        {
            if (x(n) == cdouble(0.0))
                throw numerical_error(std::string("singular diagonal: zero entry in ") + what);
            out(n) = 1.0 / x(n);
        }
        return out;
    }

    inline double max_abs(const CMat &a)
    {
        return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
    }

    inline double hermitian_defect(const CMat &a)
    {
        return max_abs(a - a.adjoint());
    }

    inline CMat hermitian_part(const CMat &a)
    {
        return 0.5 * (a + a.adjoint());
    }

    inline double real_trace(const CMat &a)
    {
        return a.trace().real();
    }

    inline RVec hermitian_eigenvalues(const CMat &a)
    {
        Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a), Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

    // Factor F with F F^H = a for a Hermitian PSD matrix. Negative eigenvalues
    // (numerical noise or rank deficiency) are clipped to zero, so columns that
    // belong to the null space are exactly zero.
    inline CMat psd_factor(const CMat &a)
    {
        Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a));
        if (es.info() != Eigen::Success)
            throw numerical_error("eigendecomposition failed");
        RVec w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        return es.eigenvectors() * w.asDiagonal();
    }

    // Relative Frobenius distance ||a - b|| / max(||b||, floor)
    inline double relative_difference(const CMat &a, const CMat &b, double floor = 1e-300)
    {
        return (a - b).norm() / std::max(b.norm(), floor);
    }
} // namespace riscontam

#endif
