#ifndef GAIDS_FEATURES_HPP
#define GAIDS_FEATURES_HPP

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "gaids/error.hpp"

namespace gaids {

/// Numeric features kept per connection (41 KDD features minus the 3 symbolic ones).
inline constexpr int kFeatureCount = 38;

template <typename Scalar>
using FeatureVectorT = Eigen::Matrix<Scalar, kFeatureCount, 1>;

using FeatureVector = FeatureVectorT<double>;

template <typename DerivedA, typename DerivedB>
void check_feature_dims(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.size() != kFeatureCount || b.size() != kFeatureCount) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(kFeatureCount) + "-dimensional vectors, got " +
                        std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

/*
 * Dimension-normalized Euclidean distance, sqrt(sum((a - b)^2) / n).
 * Inputs on the unit cube give values in [0, 1].
 */
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    check_feature_dims(a, b);
    return std::sqrt((a - b).squaredNorm() / static_cast<Scalar>(kFeatureCount));
}

template <typename Derived>
void clamp_unit(Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    v = v.cwiseMax(Scalar(0)).cwiseMin(Scalar(1));
}

}  // namespace gaids

#endif
