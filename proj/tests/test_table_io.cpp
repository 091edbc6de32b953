#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>

#include "tracekit/table_io.hpp"

using namespace tracekit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("tracekit-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("save/load round trip is exact") {
    TempDir dir;
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::vector<cplx> v(257);
    for (auto& z : v) z = {coord(rng), coord(rng)};
    FunctionTable t(Modulus(257), v);

    const fs::path file = dir.path / "table.bin";
    save_table(t, file);
    FunctionTable back = load_table(file);
    REQUIRE(back.m() == 257);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(back.values[i] == v[i]);  // bit exact
    CHECK(back.sup_norm == t.sup_norm);

    // overwrite with a different table
    FunctionTable small(Modulus(3), {cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}});
    save_table(small, file);
    CHECK(load_table(file).m() == 3);
}

TEST_CASE("expected file size") {
    TempDir dir;
    const fs::path file = dir.path / "t.bin";
    save_table(FunctionTable(Modulus(10), std::vector<cplx>(10, cplx{1, 0})), file);
    CHECK(fs::file_size(file) == 8 + 10 * 16);
}

TEST_CASE("load_table rejects damaged files") {
    TempDir dir;
    const fs::path missing = dir.path / "nope.bin";
    CHECK_THROWS_AS(load_table(missing), CacheCorrupt);

    const fs::path file = dir.path / "t.bin";
    save_table(FunctionTable(Modulus(5), std::vector<cplx>(5, cplx{1, 0})), file);

    SUBCASE("truncated payload") {
        fs::resize_file(file, 8 + 3 * 16);
        CHECK_THROWS_AS(load_table(file), CacheCorrupt);
    }
    SUBCASE("trailing garbage") {
        std::ofstream out(file, std::ios::binary | std::ios::app);
        out.write("xx", 2);
        out.close();
        CHECK_THROWS_AS(load_table(file), CacheCorrupt);
    }
    SUBCASE("bad header") {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        const std::uint64_t zero = 0;
        out.write(reinterpret_cast<const char*>(&zero), 8);
        out.close();
        CHECK_THROWS_AS(load_table(file), CacheCorrupt);
    }
    SUBCASE("empty file") {
        std::ofstream(file, std::ios::binary | std::ios::trunc).close();
        CHECK_THROWS_AS(load_table(file), CacheCorrupt);
    }
}

TEST_CASE("save_table leaves no temp droppings") {
    TempDir dir;
    save_table(FunctionTable(Modulus(4), std::vector<cplx>(4, cplx{2, 0})), dir.path / "a.bin");
    std::size_t count = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++count;
    CHECK(count == 1);
}
