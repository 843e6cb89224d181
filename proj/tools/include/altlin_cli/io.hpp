#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altlin::cli {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Locale-independent shortest-faithful formatting (17 significant digits),
/// the contract behind byte-identical reruns.
std::string format_double(double v);

/// One CSV file: header row, LF line endings, '.' decimal point.
void write_csv(const std::filesystem::path& file, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// name,value report file.
void write_kv_csv(const std::filesystem::path& file,
                  const std::vector<std::pair<std::string, double>>& rows);

struct SvgCurve {
    std::vector<Eigen::Vector2d> points;
    std::string stroke = "#1f6feb";
};

/// Minimal polyline plot, no plotting dependency. Deterministic output.
void write_svg(const std::filesystem::path& file, const std::vector<SvgCurve>& curves);

}  // namespace altlin::cli
