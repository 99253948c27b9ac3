#include "experiments/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace wanattr {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string sweep_rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "# kind,num_authors,profile_words,text_words,param,accuracy,trials,random_baseline,"
         "skipped,reason\n";
  for (const ReportRow& r : rows) {
    out << r.kind << ',' << r.num_authors << ',' << r.profile_words << ',' << r.text_words << ','
        << fmt(r.param) << ',' << (r.skipped ? "" : fmt(r.accuracy)) << ',' << r.trials << ','
        << fmt(r.random_baseline) << ',' << (r.skipped ? "1" : "0") << ',' << r.reason << '\n';
  }
  return out.str();
}

std::string pair_points_to_csv(const std::vector<PairPoint>& points) {
  std::ostringstream out;
  out << "# author_a,author_b,dissimilarity,accuracy,repeats\n";
  for (const PairPoint& p : points) {
    out << p.author_a << ',' << p.author_b << ',' << fmt(p.dissim) << ',' << fmt(p.accuracy) << ','
        << p.repeats << '\n';
  }
  return out.str();
}

std::string labeled_matrix_to_csv(const std::vector<std::string>& labels, const Matrix& m,
                                  const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "label";
  for (const std::string& l : labels) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << labels[i];
    for (std::size_t j = 0; j < labels.size(); ++j) out << ',' << fmt(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string mds_points_to_csv(const std::vector<MdsPoint>& points) {
  std::ostringstream out;
  out << "# label,x,y\n";
  for (const MdsPoint& p : points) out << p.label << ',' << fmt(p.x) << ',' << fmt(p.y) << '\n';
  return out.str();
}

std::string scatter_svg(const std::vector<MdsPoint>& points, const std::string& title) {
  constexpr int kSize = 640;
  constexpr int kMargin = 60;
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const MdsPoint& p : points) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  auto sx = [&](double x) { return kMargin + (x - lo_x) / span * (kSize - 2 * kMargin); };
  auto sy = [&](double y) { return kSize - kMargin - (y - lo_y) / span * (kSize - 2 * kMargin); };

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kSize << "' height='" << kSize
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << kSize / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
      << "</text>\n";
  for (const MdsPoint& p : points) {
    out << "<circle cx='" << fmt6(sx(p.x)) << "' cy='" << fmt6(sy(p.y))
        << "' r='5' fill='steelblue'/>\n"
        << "<text x='" << fmt6(sx(p.x) + 8) << "' y='" << fmt6(sy(p.y) + 4)
        << "' font-size='11'>" << p.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string heatmap_svg(const std::vector<std::string>& labels, const Matrix& m,
                        const std::string& title) {
  const std::size_t n = labels.size();
  constexpr int kCell = 28;
  constexpr int kMargin = 110;
  const int size = kMargin + static_cast<int>(n) * kCell + 20;

  double lo = 0.0, hi = 1e-12;
  for (double v : m.data()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  auto color = [&](double v) {
    const double t = (v - lo) / (hi - lo);
    // cold blue -> warm red
    const int r = static_cast<int>(255 * t);
    const int b = static_cast<int>(255 * (1.0 - t));
    std::ostringstream c;
    c << "rgb(" << r << ",60," << b << ")";
    return c.str();
  };

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size << "' height='" << size
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << size / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
      << "</text>\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "<text x='" << kMargin - 6 << "' y='" << kMargin + i * kCell + kCell / 2 + 4
        << "' text-anchor='end' font-size='10'>" << labels[i] << "</text>\n";
    out << "<text x='" << kMargin + i * kCell + kCell / 2 << "' y='" << kMargin - 6
        << "' text-anchor='middle' font-size='10' transform='rotate(-60 "
        << kMargin + i * kCell + kCell / 2 << " " << kMargin - 6 << ")'>" << labels[i]
        << "</text>\n";
    for (std::size_t j = 0; j < n; ++j) {
      out << "<rect x='" << kMargin + j * kCell << "' y='" << kMargin + i * kCell << "' width='"
          << kCell << "' height='" << kCell << "' fill='" << color(m(i, j)) << "'/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw user_error("cannot write file: " + path.string());
  out << contents;
}

}  // namespace wanattr
