#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <vector>

#include "primepart/checkpoint.hpp"
#include "primepart/exact.hpp"
#include "primepart/primes.hpp"

using namespace primepart;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / (std::string("primepart_ckpt_test_") + name);
}

std::vector<char> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<char>& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace

TEST_CASE("round trip preserves every entry") {
    const auto sieve = build_sieve(100);
    const auto table = build_euler_dp(100, sieve);
    const auto path = temp_file("roundtrip");
    checkpoint_save(table, path);
    const auto loaded = checkpoint_load(path);
    REQUIRE(loaded.n_max == 100);
    REQUIRE(loaded.counts.size() == 101);
    for (std::uint64_t n = 0; n <= 100; ++n) CHECK(loaded.counts[n] == table.counts[n]);
    CHECK(loaded.algorithm == Algorithm::euler_dp);
    REQUIRE(loaded.checkpoint_meta.has_value());
    CHECK(loaded.checkpoint_meta->source_path == path.string());
    CHECK(loaded.checkpoint_meta->resumed_from == 100);
    fs::remove(path);
}

TEST_CASE("resume from a checkpoint matches a fresh build") {
    const auto sieve = build_sieve(1000);
    const auto sopf_table = build_sopf_table(sieve);
    const auto path = temp_file("resume");
    checkpoint_save(build_euler_dp(500, sieve), path);

    auto resumed = checkpoint_load(path);
    extend_recursion(resumed, 1000, sopf_table);
    const auto fresh = build_euler_dp(1000, sieve);
    for (std::uint64_t n = 0; n <= 1000; ++n) CHECK(resumed.counts[n] == fresh.counts[n]);
    fs::remove(path);
}

TEST_CASE("error signals are distinct") {
    const auto sieve = build_sieve(64);
    const auto table = build_euler_dp(64, sieve);
    const auto path = temp_file("errors");
    checkpoint_save(table, path);
    const auto bytes = slurp(path);
    REQUIRE(bytes.size() > 40);

    SUBCASE("missing file") {
        CHECK_THROWS_AS(checkpoint_load(temp_file("no_such_file")), CheckpointIoError);
    }
    SUBCASE("truncated file") {
        auto cut = bytes;
        cut.resize(bytes.size() / 2);
        spit(path, cut);
        CHECK_THROWS_AS(checkpoint_load(path), CheckpointTruncatedError);
    }
    SUBCASE("empty file") {
        spit(path, {});
        CHECK_THROWS_AS(checkpoint_load(path), CheckpointTruncatedError);
    }
    SUBCASE("flipped data byte") {
        // last entry's payload byte, just before the 4-byte checksum: the
        // structure still parses, so this must surface as corruption
        auto bad = bytes;
        bad[bytes.size() - 5] = static_cast<char>(bad[bytes.size() - 5] ^ 0x5a);
        spit(path, bad);
        CHECK_THROWS_AS(checkpoint_load(path), CheckpointChecksumError);
    }
    SUBCASE("wrong version") {
        auto bad = bytes;
        bad[8] = 99;  // version field follows the 8-byte magic
        spit(path, bad);
        CHECK_THROWS_AS(checkpoint_load(path), CheckpointVersionError);
    }
    SUBCASE("wrong magic") {
        auto bad = bytes;
        bad[0] = 'X';
        spit(path, bad);
        CHECK_THROWS_AS(checkpoint_load(path), CheckpointFormatError);
    }
    fs::remove(path);
}
