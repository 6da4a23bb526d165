#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <string>

namespace retro::io {

// Little-endian primitives for snapshot files. Explicit byte order keeps
// snapshots portable and byte-identical across rebuilds.
void write_u32(std::ostream& out, std::uint32_t v);
void write_u64(std::ostream& out, std::uint64_t v);
void write_f64(std::ostream& out, double v);
void write_string(std::ostream& out, std::string_view s);

std::uint32_t read_u32(std::istream& in);
std::uint64_t read_u64(std::istream& in);
double read_f64(std::istream& in);
std::string read_string(std::istream& in);

/// Expects an exact magic tag next in the stream; throws data_error naming
/// `what` otherwise.
void expect_magic(std::istream& in, std::string_view magic, std::string_view what);

/// Writes `path` atomically: the payload goes to `<path>.tmp` and is renamed
/// into place only after `fill` completes and the stream flushes cleanly.
/// On failure the temporary is removed and no partial output remains.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& fill);

/// Opens `path` for reading; throws data_error naming the path if missing.
std::ifstream open_input(const std::filesystem::path& path);

}  // namespace retro::io
