#pragma once

#include <Eigen/Core>

namespace wasd {

using Scalar = double;

using Vec = Eigen::VectorX<Scalar>;
using Mat = Eigen::MatrixX<Scalar>;
using RowVec = Eigen::RowVectorX<Scalar>;

}  // namespace wasd
