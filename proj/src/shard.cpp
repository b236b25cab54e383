#include "cauchymds/shard.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

namespace cauchymds::shard {

namespace {

template <class T>
void put_le(std::uint8_t* out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

template <class T>
T get_le(const std::uint8_t* in) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(in[i]) << (8 * i);
  return v;
}

bool get_bit(std::span<const std::uint8_t> bytes, std::uint64_t i) {
  const std::uint64_t byte = i / 8;
  return byte < bytes.size() && ((bytes[byte] >> (i % 8)) & 1U);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("cannot read " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw DataError("cannot write " + path.string());
}

}  // namespace

std::array<std::uint8_t, kHeaderSize> ShardHeader::serialize() const {
  std::array<std::uint8_t, kHeaderSize> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  out[4] = version;
  put_le(&out[5], p);
  out[7] = k;
  out[8] = r;
  out[9] = column;
  put_le(&out[10], file_length);
  put_le(&out[18], stripes);
  return out;
}

ShardHeader ShardHeader::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw DataError("shard is shorter than its header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw DataError("bad shard magic");
  }
  ShardHeader h;
  h.version = bytes[4];
  if (h.version != kFormatVersion) {
    throw DataError("unsupported shard format version " + std::to_string(h.version));
  }
  h.p = get_le<std::uint16_t>(&bytes[5]);
  h.k = bytes[7];
  h.r = bytes[8];
  h.column = bytes[9];
  h.file_length = get_le<std::uint64_t>(&bytes[10]);
  h.stripes = get_le<std::uint32_t>(&bytes[18]);
  return h;
}

std::size_t stripe_bytes(int p) { return static_cast<std::size_t>(p - 1 + 7) / 8; }

std::uint32_t stripe_count(const CodeParams& params, std::uint64_t file_length) {
  const std::uint64_t stripe_bits = static_cast<std::uint64_t>(params.k()) * params.column_bits();
  if (file_length > std::numeric_limits<std::uint64_t>::max() / 8) {
    throw DataError("file too large");
  }
  const std::uint64_t n = (file_length * 8 + stripe_bits - 1) / stripe_bits;
  if (n > std::numeric_limits<std::uint32_t>::max()) throw DataError("file needs too many stripes");
  return static_cast<std::uint32_t>(n);
}

std::vector<std::vector<std::uint8_t>> encode_bytes(std::span<const std::uint8_t> data,
                                                    const CodeParams& params) {
  if (params.p() > std::numeric_limits<std::uint8_t>::max() + 1) {
    throw std::invalid_argument("column index must fit in one byte");
  }
  const int bits = params.column_bits();
  const std::uint32_t stripes = stripe_count(params, data.size());
  const std::size_t body = stripe_bytes(params.p());

  std::vector<std::vector<std::uint8_t>> shards(static_cast<std::size_t>(params.columns()));
  for (int c = 0; c < params.columns(); ++c) {
    ShardHeader h;
    h.p = static_cast<std::uint16_t>(params.p());
    h.k = static_cast<std::uint8_t>(params.k());
    h.r = static_cast<std::uint8_t>(params.r());
    h.column = static_cast<std::uint8_t>(c);
    h.file_length = data.size();
    h.stripes = stripes;
    const auto header = h.serialize();
    shards[c].assign(header.begin(), header.end());
    shards[c].resize(kHeaderSize + body * stripes, 0);
  }

  const std::uint64_t stripe_bits = static_cast<std::uint64_t>(params.k()) * bits;
  std::vector<Column> info(static_cast<std::size_t>(params.k()), Column(params.p()));
  for (std::uint32_t s = 0; s < stripes; ++s) {
    const std::uint64_t base = s * stripe_bits;
    for (int c = 0; c < params.k(); ++c) {
      for (int b = 0; b < bits; ++b) {
        info[c].set_bit(b, get_bit(data, base + static_cast<std::uint64_t>(c) * bits + b));
      }
    }
    const Codeword cw = encode(params, info);
    for (int c = 0; c < params.columns(); ++c) {
      std::uint8_t* out = shards[c].data() + kHeaderSize + body * s;
      for (int b = 0; b < bits; ++b) {
        if (cw.columns[c].bit(b)) out[b / 8] |= static_cast<std::uint8_t>(1U << (b % 8));
      }
    }
  }
  return shards;
}

std::vector<std::uint8_t> decode_bytes(std::span<const std::vector<std::uint8_t>> shards) {
  if (shards.empty()) throw DataError("no shards given");
  std::vector<ShardHeader> headers;
  for (const auto& s : shards) headers.push_back(ShardHeader::parse(s));

  const ShardHeader& first = headers.front();
  for (const ShardHeader& h : headers) {
    if (h.p != first.p || h.k != first.k || h.r != first.r || h.file_length != first.file_length ||
        h.stripes != first.stripes) {
      throw DataError("shards come from different encodings");
    }
  }
  CodeParams params = [&] {
    try {
      return CodeParams::make(first.p, first.k, first.r);
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("shard header has invalid code parameters: ") + e.what());
    }
  }();
  if (stripe_count(params, first.file_length) != first.stripes) {
    throw DataError("stripe count does not match the recorded file length");
  }

  const std::size_t body = stripe_bytes(params.p());
  std::vector<const std::vector<std::uint8_t>*> by_column(static_cast<std::size_t>(params.columns()),
                                                          nullptr);
  for (std::size_t i = 0; i < shards.size(); ++i) {
    const int c = headers[i].column;
    if (c >= params.columns()) throw DataError("shard column index out of range");
    if (by_column[c] != nullptr) throw DataError("duplicate shard for column " + std::to_string(c));
    if (shards[i].size() != kHeaderSize + body * first.stripes) {
      throw DataError("shard body length does not match its header");
    }
    by_column[c] = &shards[i];
  }
  const auto present = std::count_if(by_column.begin(), by_column.end(),
                                     [](const auto* s) { return s != nullptr; });
  if (present < params.k()) {
    throw DataError("need at least " + std::to_string(params.k()) + " shards, got " +
                    std::to_string(present));
  }

  const int bits = params.column_bits();
  std::vector<std::optional<Column>> avail(by_column.size());
  for (std::size_t c = 0; c < by_column.size(); ++c) {
    if (by_column[c]) avail[c] = Column(params.p());
  }
  const ErasurePattern pattern = ErasurePattern::from_available(params, avail);

  std::vector<std::uint8_t> out(static_cast<std::size_t>(first.file_length), 0);
  const std::uint64_t total_bits = first.file_length * 8;
  const std::uint64_t stripe_bits = static_cast<std::uint64_t>(params.k()) * bits;
  for (std::uint32_t s = 0; s < first.stripes; ++s) {
    for (std::size_t c = 0; c < by_column.size(); ++c) {
      if (!by_column[c]) continue;
      const std::uint8_t* in = by_column[c]->data() + kHeaderSize + body * s;
      for (int b = 0; b < bits; ++b) avail[c]->set_bit(b, (in[b / 8] >> (b % 8)) & 1U);
    }
    const Codeword cw = pattern.size() == 0 ? Codeword{} : decode(params, avail, pattern);
    const std::uint64_t base = s * stripe_bits;
    for (int c = 0; c < params.k(); ++c) {
      const Column& col = pattern.size() == 0 ? *avail[c] : cw.columns[c];
      for (int b = 0; b < bits; ++b) {
        const std::uint64_t pos = base + static_cast<std::uint64_t>(c) * bits + b;
        if (pos >= total_bits) break;
        if (col.bit(b)) out[pos / 8] |= static_cast<std::uint8_t>(1U << (pos % 8));
      }
    }
  }
  return out;
}

std::vector<std::filesystem::path> encode_file(const std::filesystem::path& input,
                                               const CodeParams& params,
                                               const std::filesystem::path& out_dir) {
  const auto data = read_file(input);
  const auto shards = encode_bytes(data, params);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> paths;
  for (std::size_t c = 0; c < shards.size(); ++c) {
    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), ".%02zu.cmds", c);
    auto path = out_dir / (input.filename().string() + suffix);
    write_file(path, shards[c]);
    paths.push_back(std::move(path));
  }
  return paths;
}

void decode_files(std::span<const std::filesystem::path> shards,
                  const std::filesystem::path& output) {
  std::vector<std::vector<std::uint8_t>> images;
  for (const auto& path : shards) images.push_back(read_file(path));
  const auto data = decode_bytes(images);
  write_file(output, data);
}

}  // namespace cauchymds::shard
