#include "tracekit/table_io.hpp"

#include <cstdint>
#include <fstream>

namespace tracekit {

namespace fs = std::filesystem;

void save_table(const FunctionTable& table, const fs::path& path) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheCorrupt("cannot open for writing: " + tmp.string());
        const std::uint64_t m = table.m();
        out.write(reinterpret_cast<const char*>(&m), sizeof(m));
        for (const auto& z : table.values) {
            const double re = z.real(), im = z.imag();
            out.write(reinterpret_cast<const char*>(&re), sizeof(re));
            out.write(reinterpret_cast<const char*>(&im), sizeof(im));
        }
        if (!out) throw CacheCorrupt("short write: " + tmp.string());
    }
    fs::rename(tmp, path);
}

FunctionTable load_table(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheCorrupt("cannot open: " + path.string());
    std::uint64_t m = 0;
    in.read(reinterpret_cast<char*>(&m), sizeof(m));
    if (!in || m < 2) throw CacheCorrupt("bad header: " + path.string());
    const auto expected =
        sizeof(std::uint64_t) + static_cast<std::uintmax_t>(m) * 2 * sizeof(double);
    if (fs::file_size(path) != expected)
        throw CacheCorrupt("length mismatch: " + path.string());
    std::vector<cplx> values(m);
    for (auto& z : values) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), sizeof(re));
        in.read(reinterpret_cast<char*>(&im), sizeof(im));
        z = {re, im};
    }
    if (!in) throw CacheCorrupt("short read: " + path.string());
    return FunctionTable(Modulus(m), std::move(values));
}

}  // namespace tracekit
