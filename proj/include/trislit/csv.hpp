#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trislit/sorkin.hpp"

namespace trislit::io {

/// Shortest-form decimal with 17 significant digits via std::to_chars:
/// locale-independent, '.' decimal separator, byte-deterministic.
std::string format_double(double value);

inline constexpr const char* csv_header =
    "d,d_over_D,P_a,P_b,P_c,P_ab,P_ac,P_bc,P_abc,kappa,kappa_normalized";

std::string to_csv(const std::vector<SweepPoint>& points);
void write_csv(const std::vector<SweepPoint>& points,
               const std::filesystem::path& path);

}  // namespace trislit::io
