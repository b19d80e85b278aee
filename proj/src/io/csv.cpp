#include "trislit/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace trislit::io {

std::string format_double(double value) {
  char buffer[40];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value,
                    std::chars_format::general, 17);
  if (result.ec != std::errc{}) {
    throw std::runtime_error("csv: failed to format a double");
  }
  return std::string(buffer, result.ptr);
}

std::string to_csv(const std::vector<SweepPoint>& points) {
  std::string out(csv_header);
  out.push_back('\n');
  for (const SweepPoint& point : points) {
    const double columns[11] = {point.d,    point.d_over_D, point.p_a,
                                point.p_b,  point.p_c,      point.p_ab,
                                point.p_ac, point.p_bc,     point.p_abc,
                                point.kappa, point.kappa_normalized};
    for (std::size_t c = 0; c < 11; ++c) {
      if (c != 0) {
        out.push_back(',');
      }
      out += format_double(columns[c]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_csv(const std::vector<SweepPoint>& points,
               const std::filesystem::path& path) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::runtime_error("csv: cannot open " + path.string() +
                             " for writing");
  }
  const std::string text = to_csv(points);
  stream.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!stream) {
    throw std::runtime_error("csv: write to " + path.string() + " failed");
  }
}

}  // namespace trislit::io
