#ifndef PRIMEPART_CHECKPOINT_HPP
#define PRIMEPART_CHECKPOINT_HPP

#include <filesystem>
#include <stdexcept>

#include "primepart/exact.hpp"

namespace primepart {

// Versioned binary container:
//   magic "PPARTBL1" (8 bytes)
//   u32 version, u8 algorithm_tag, u64 n_max          (little endian)
//   per entry 0..n_max: u32 byte length, magnitude bytes (LSB first)
//   u32 CRC-32 of everything before it
inline constexpr char kCheckpointMagic[8] = {'P', 'P', 'A', 'R', 'T', 'B', 'L', '1'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckpointIoError : CheckpointError {
    using CheckpointError::CheckpointError;
};
struct CheckpointFormatError : CheckpointError {
    using CheckpointError::CheckpointError;
};
struct CheckpointVersionError : CheckpointError {
    using CheckpointError::CheckpointError;
};
struct CheckpointTruncatedError : CheckpointError {
    using CheckpointError::CheckpointError;
};
struct CheckpointChecksumError : CheckpointError {
    using CheckpointError::CheckpointError;
};

void checkpoint_save(const PartitionTable& table, const std::filesystem::path& path);
PartitionTable checkpoint_load(const std::filesystem::path& path);

} // namespace primepart

#endif
