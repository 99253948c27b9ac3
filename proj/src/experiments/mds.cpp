#include "experiments/mds.hpp"

#include <cmath>
#include <random>

#include "core/error.hpp"

namespace wanattr {

namespace {

constexpr double kEigTol = 1e-9;
constexpr int kEigMaxIter = 100000;

// Largest-eigenvalue pair of a symmetric matrix by power iteration. The
// matrix is shifted by its Gershgorin bound so the algebraically largest
// eigenvalue also has the largest magnitude.
std::pair<double, std::vector<double>> top_eigenpair(const Matrix& b, std::uint64_t start_seed) {
  const std::size_t n = b.rows();
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::fabs(b(i, j));
    shift = std::max(shift, row);
  }

  // A fresh start vector per call: after deflating a degenerate eigenvalue
  // the previous start is exactly orthogonal to the remaining dominant
  // direction, so reusing it would converge into the null space.
  std::mt19937_64 rng(start_seed);
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = unit(rng);
  std::vector<double> w(n);
  double lambda = 0.0;
  for (int iter = 0; iter < kEigMaxIter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = shift * v[i];
      for (std::size_t j = 0; j < n; ++j) s += b(i, j) * v[j];
      w[i] = s;
    }
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return {0.0, std::vector<double>(n, 0.0)};
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= norm;
      delta = std::max(delta, std::fabs(w[i] - v[i]));
    }
    v = w;
    lambda = norm - shift;
    if (delta < kEigTol) break;
  }
  return {lambda, v};
}

}  // namespace

DissimilarityMatrix symmetrize(const std::vector<std::string>& labels, const Matrix& h) {
  if (h.rows() != labels.size() || h.cols() != labels.size()) {
    throw user_error("symmetrize: matrix shape does not match labels");
  }
  DissimilarityMatrix out;
  out.labels = labels;
  out.h = h;
  out.d = Matrix(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      out.d(i, j) = 0.5 * (h(i, j) + h(j, i));
    }
    out.d(i, i) = 0.0;
  }
  return out;
}

std::vector<MdsPoint> classical_mds(const DissimilarityMatrix& dm) {
  const std::size_t n = dm.labels.size();
  if (dm.d.rows() != n || dm.d.cols() != n) throw user_error("classical_mds: shape mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::fabs(dm.d(i, j) - dm.d(j, i)) > 1e-12) {
        throw user_error("classical_mds: input dissimilarity matrix is not symmetric");
      }
    }
  }

  // B = -1/2 J D^2 J with J = I - 11^T/n.
  std::vector<double> row_mean(n, 0.0);
  double grand_mean = 0.0;
  Matrix d2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d2(i, j) = dm.d(i, j) * dm.d(i, j);
      row_mean[i] += d2(i, j);
    }
    row_mean[i] /= static_cast<double>(n);
    grand_mean += row_mean[i];
  }
  grand_mean /= static_cast<double>(n);
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = -0.5 * (d2(i, j) - row_mean[i] - row_mean[j] + grand_mean);
    }
  }

  std::vector<MdsPoint> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i].label = dm.labels[i];

  for (int axis = 0; axis < 2; ++axis) {
    auto [lambda, v] = top_eigenpair(b, 0x6d647331u + static_cast<std::uint64_t>(axis));
    const double scale = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += scale * v[i];
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      // eigenvectors of the doubly centered B are orthogonal to the ones
      // vector up to iteration error; recenter so the layout is exact
      const double coord = scale * v[i] - mean;
      if (axis == 0)
        points[i].x = coord;
      else
        points[i].y = coord;
    }
    // Deflate: B <- B - lambda v v^T.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) -= lambda * v[i] * v[j];
    }
  }
  return points;
}

}  // namespace wanattr
