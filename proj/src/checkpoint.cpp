#include "primepart/checkpoint.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include <zlib.h>

namespace primepart {

namespace {

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

struct ByteReader {
    const unsigned char* p;
    std::size_t remaining;
    const char* context;

    void need(std::size_t n) const {
        if (n > remaining)
            throw CheckpointTruncatedError(std::string("checkpoint truncated while reading ") +
                                           context);
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(p[i]) << (8 * i);
        p += 4;
        remaining -= 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
        p += 8;
        remaining -= 8;
        return v;
    }
    const unsigned char* bytes(std::size_t n) {
        need(n);
        const unsigned char* q = p;
        p += n;
        remaining -= n;
        return q;
    }
};

} // namespace

void checkpoint_save(const PartitionTable& table, const std::filesystem::path& path) {
    std::vector<unsigned char> buf;
    buf.reserve(64 + table.counts.size() * 16);
    buf.insert(buf.end(), kCheckpointMagic, kCheckpointMagic + 8);
    put_u32(buf, kCheckpointVersion);
    buf.push_back(static_cast<unsigned char>(table.algorithm));
    put_u64(buf, table.n_max);

    std::vector<unsigned char> limb;
    for (const BigCount& c : table.counts) {
        std::size_t nbytes = (mpz_sizeinbase(c.get_mpz_t(), 2) + 7) / 8;
        if (c == 0) nbytes = 0;
        put_u32(buf, static_cast<std::uint32_t>(nbytes));
        if (nbytes > 0) {
            limb.resize(nbytes);
            std::size_t written = 0;
            mpz_export(limb.data(), &written, -1, 1, -1, 0, c.get_mpz_t());
            buf.insert(buf.end(), limb.begin(), limb.begin() + written);
            // zero-pad if GMP wrote fewer bytes than announced (cannot happen
            // for the sizes above, but keep the length field authoritative)
            buf.insert(buf.end(), nbytes - written, 0);
        }
    }
    const auto crc = static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(buf.size())));
    put_u32(buf, crc);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CheckpointIoError("cannot open checkpoint file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out) throw CheckpointIoError("write failed: " + path.string());
}

PartitionTable checkpoint_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointIoError("cannot open checkpoint file: " + path.string());
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) throw CheckpointIoError("read failed: " + path.string());

    if (buf.size() < 8)
        throw CheckpointTruncatedError("checkpoint too short: " + path.string());
    if (std::memcmp(buf.data(), kCheckpointMagic, 8) != 0)
        throw CheckpointFormatError("bad magic, not a partition-table checkpoint: " +
                                    path.string());
    if (buf.size() < 8 + 4 + 1 + 8 + 4)
        throw CheckpointTruncatedError("checkpoint truncated inside header: " + path.string());

    // parse structure first so truncation and corruption report distinctly;
    // the trailing 4 bytes are reserved for the checksum
    const std::size_t body = buf.size() - 4;
    ByteReader r{buf.data() + 8, body - 8, "header"};
    const std::uint32_t version = r.u32();
    if (version != kCheckpointVersion)
        throw CheckpointVersionError("unsupported checkpoint version " +
                                     std::to_string(version) + " in " + path.string());
    const auto tag = *r.bytes(1);
    if (tag > 1)
        throw CheckpointFormatError("unknown algorithm tag " + std::to_string(int(tag)) +
                                    " in " + path.string());
    const std::uint64_t n_max = r.u64();
    if (n_max > (std::uint64_t(1) << 40))
        throw CheckpointFormatError("implausible n_max " + std::to_string(n_max) + " in " +
                                    path.string());

    PartitionTable t;
    t.n_max = n_max;
    t.algorithm = static_cast<Algorithm>(tag);
    t.counts.resize(n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        r.context = "entry length";
        const std::uint32_t len = r.u32();
        if (len > (std::uint32_t(1) << 28))
            throw CheckpointFormatError("implausible entry length in " + path.string());
        r.context = "entry bytes";
        const unsigned char* q = r.bytes(len);
        if (len > 0)
            mpz_import(t.counts[n].get_mpz_t(), len, -1, 1, -1, 0, q);
    }
    if (r.remaining != 0)
        throw CheckpointFormatError("trailing bytes after table in " + path.string());

    std::uint32_t stored = 0;
    for (int i = 0; i < 4; ++i) stored |= std::uint32_t(buf[body + i]) << (8 * i);
    const auto computed = static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(body)));
    if (stored != computed)
        throw CheckpointChecksumError("checksum mismatch in " + path.string() +
                                      " (file corrupt)");

    t.checkpoint_meta = CheckpointMeta{path.string(), n_max};
    return t;
}

} // namespace primepart
