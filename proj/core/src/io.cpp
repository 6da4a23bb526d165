#include "retro/io.hpp"

#include <array>
#include <cstring>

#include "retro/errors.hpp"

namespace retro::io {

namespace {

void put_bytes(std::ostream& out, std::uint64_t v, int n) {
    std::array<char, 8> buf{};
    for (int i = 0; i < n; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf.data(), n);
}

std::uint64_t get_bytes(std::istream& in, int n) {
    std::array<char, 8> buf{};
    in.read(buf.data(), n);
    if (in.gcount() != n) throw data_error("truncated snapshot file");
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return v;
}

}  // namespace

void write_u32(std::ostream& out, std::uint32_t v) { put_bytes(out, v, 4); }
void write_u64(std::ostream& out, std::uint64_t v) { put_bytes(out, v, 8); }

void write_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    put_bytes(out, bits, 8);
}

void write_string(std::ostream& out, std::string_view s) {
    write_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t read_u32(std::istream& in) {
    return static_cast<std::uint32_t>(get_bytes(in, 4));
}

std::uint64_t read_u64(std::istream& in) { return get_bytes(in, 8); }

double read_f64(std::istream& in) {
    std::uint64_t bits = get_bytes(in, 8);
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

std::string read_string(std::istream& in) {
    std::uint32_t n = read_u32(in);
    std::string s(n, '\0');
    in.read(s.data(), n);
    if (in.gcount() != static_cast<std::streamsize>(n))
        throw data_error("truncated snapshot file");
    return s;
}

void expect_magic(std::istream& in, std::string_view magic, std::string_view what) {
    std::string got(magic.size(), '\0');
    in.read(got.data(), static_cast<std::streamsize>(magic.size()));
    if (in.gcount() != static_cast<std::streamsize>(magic.size()) || got != magic)
        throw data_error(std::string(what) + ": unrecognized file format");
}

void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& fill) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw data_error("cannot open for writing: " + tmp.string());
            fill(out);
            out.flush();
            if (!out) throw data_error("write failed: " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open input file: " + path.string());
    return in;
}

}  // namespace retro::io
