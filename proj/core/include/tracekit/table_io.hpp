#pragma once

#include <filesystem>

#include "tracekit/spectrum.hpp"

namespace tracekit {

/// Binary FunctionTable format, little-endian: u64 m, then m (f64 re, f64 im)
/// pairs. Writes are atomic (temp file + rename).
void save_table(const FunctionTable& table, const std::filesystem::path& path);

/// Throws CacheCorrupt on header/length mismatch or unreadable file.
FunctionTable load_table(const std::filesystem::path& path);

}  // namespace tracekit
