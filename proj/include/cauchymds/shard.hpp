#pragma once

// Self-describing shard files.
//
// Header (22 bytes, multi-byte fields little-endian):
//   0  magic "CMDS"
//   4  format version (1 byte)
//   5  p (2 bytes)
//   7  k (1 byte)
//   8  r (1 byte)
//   9  column index (1 byte)
//  10  original file length in bytes (8 bytes)
//  18  stripe count (4 bytes)
// Body: per stripe, ceil((p-1)/8) bytes holding the column's p-1 bits; bit i
// sits in byte i/8 at bit position i%8.
//
// A file is cut into stripes of k(p-1) bits (bit j of the file is bit j%8 of
// byte j/8); the last stripe is zero-padded. Information column c of a stripe
// takes stripe bits c(p-1) .. c(p-1)+p-2.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "cauchymds/codec.hpp"

namespace cauchymds::shard {

inline constexpr std::array<char, 4> kMagic{'C', 'M', 'D', 'S'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 22;

// Malformed, inconsistent or unreadable shard data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShardHeader {
  std::uint8_t version = kFormatVersion;
  std::uint16_t p = 0;
  std::uint8_t k = 0;
  std::uint8_t r = 0;
  std::uint8_t column = 0;
  std::uint64_t file_length = 0;
  std::uint32_t stripes = 0;

  std::array<std::uint8_t, kHeaderSize> serialize() const;
  // Throws DataError on short input, bad magic or unknown version.
  static ShardHeader parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const ShardHeader&, const ShardHeader&) = default;
};

std::size_t stripe_bytes(int p);
std::uint32_t stripe_count(const CodeParams& params, std::uint64_t file_length);

// Returns k+r complete shard images (header + body), indexed by column.
std::vector<std::vector<std::uint8_t>> encode_bytes(std::span<const std::uint8_t> data,
                                                    const CodeParams& params);
// Accepts any subset of shard images containing at least k distinct columns.
std::vector<std::uint8_t> decode_bytes(std::span<const std::vector<std::uint8_t>> shards);

// Writes <out_dir>/<input filename>.<NN>.cmds for every column.
std::vector<std::filesystem::path> encode_file(const std::filesystem::path& input,
                                               const CodeParams& params,
                                               const std::filesystem::path& out_dir);
void decode_files(std::span<const std::filesystem::path> shards,
                  const std::filesystem::path& output);

}  // namespace cauchymds::shard
