#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "experiments/mds.hpp"

namespace wanattr {

/// One emitted cell of a sweep. `param` carries the swept alpha or
/// vocabulary size for parameter sweeps and is 0 otherwise.
struct ReportRow {
  std::string kind;
  std::size_t num_authors = 0;
  std::size_t profile_words = 0;
  std::size_t text_words = 0;
  double param = 0.0;
  double accuracy = 0.0;
  std::size_t trials = 0;
  double random_baseline = 0.0;
  bool skipped = false;
  std::string reason;
};

std::string sweep_rows_to_csv(const std::vector<ReportRow>& rows);

struct PairPoint {
  std::string author_a;
  std::string author_b;
  double dissim = 0.0;
  double accuracy = 0.0;
  std::size_t repeats = 0;
};

std::string pair_points_to_csv(const std::vector<PairPoint>& points);

std::string labeled_matrix_to_csv(const std::vector<std::string>& labels, const Matrix& m,
                                  const std::string& comment);

std::string mds_points_to_csv(const std::vector<MdsPoint>& points);

/// Self-contained SVG scatter plot of labeled points.
std::string scatter_svg(const std::vector<MdsPoint>& points, const std::string& title);

/// Self-contained SVG heat map of a labeled matrix.
std::string heatmap_svg(const std::vector<std::string>& labels, const Matrix& m,
                        const std::string& title);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace wanattr
