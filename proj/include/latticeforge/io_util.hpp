#pragma once

#include <string>

namespace lf {

/// %.17g rendering used by every CSV column.
std::string format_full(double v);

/// Writes content to path via a temp file plus rename, so readers never see a
/// partial file.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace lf
