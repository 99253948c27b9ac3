#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace wanattr {

struct DissimilarityMatrix {
  std::vector<std::string> labels;
  Matrix d;  // symmetrized, zero diagonal
  Matrix h;  // raw asymmetric entropies (d = (h + h^T) / 2)
};

/// Symmetrize a raw entropy matrix into a DissimilarityMatrix.
DissimilarityMatrix symmetrize(const std::vector<std::string>& labels, const Matrix& h);

struct MdsPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

/// Classical MDS: double-center B = -1/2 J D^2 J, extract the top-2
/// eigenpairs by shifted power iteration with deflation, coordinates are
/// eigenvectors scaled by sqrt(eigenvalue). A negative eigenvalue clamps
/// its coordinate to 0.
std::vector<MdsPoint> classical_mds(const DissimilarityMatrix& d);

}  // namespace wanattr
