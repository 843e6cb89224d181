#include "altlin_cli/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

#include "altlin/errors.hpp"

namespace altlin::cli {

namespace {

std::ofstream open_for_write(const std::filesystem::path& file) {
    if (file.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
    }
    std::ofstream out(file, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw IoError("cannot open for writing: " + file.string());
    return out;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                             std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void write_csv(const std::filesystem::path& file, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_for_write(file);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + file.string());
}

void write_kv_csv(const std::filesystem::path& file,
                  const std::vector<std::pair<std::string, double>>& rows) {
    std::ofstream out = open_for_write(file);
    out << "name,value\n";
    for (const auto& [name, value] : rows) out << name << "," << format_double(value) << "\n";
    if (!out) throw IoError("write failed: " + file.string());
}

void write_svg(const std::filesystem::path& file, const std::vector<SvgCurve>& curves) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            if (first) {
                xmin = xmax = p.x();
                ymin = ymax = p.y();
                first = false;
            }
            xmin = std::min(xmin, p.x());
            xmax = std::max(xmax, p.x());
            ymin = std::min(ymin, p.y());
            ymax = std::max(ymax, p.y());
        }
    const double w = 640.0, h = 640.0, margin = 20.0;
    const double spanx = xmax - xmin > 0 ? xmax - xmin : 1.0;
    const double spany = ymax - ymin > 0 ? ymax - ymin : 1.0;

    std::ofstream out = open_for_write(file);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (const auto& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.stroke
            << "\" stroke-width=\"1\" points=\"";
        for (const auto& p : c.points) {
            double px = margin + (p.x() - xmin) / spanx * (w - 2 * margin);
            double py = h - margin - (p.y() - ymin) / spany * (h - 2 * margin);
            out << format_double(px) << "," << format_double(py) << " ";
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace altlin::cli
