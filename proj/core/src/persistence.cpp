#include "wxcompress/persistence.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "wxcompress/errors.hpp"

namespace wxc {

namespace {

constexpr char kMagic[4] = {'G', 'S', 'B', '1'};
constexpr std::uint32_t kVersion = 1;

class Writer {
  public:
    explicit Writer(std::ostream& out) : out_(out) {}
    void bytes(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        written_ += n;
    }
    template <typename T>
    void pod(T v) {
        bytes(&v, sizeof(T));
    }
    std::size_t written() const { return written_; }

  private:
    std::ostream& out_;
    std::size_t written_ = 0;
};

class Reader {
  public:
    explicit Reader(std::istream& in, const std::string& path) : in_(in), path_(path) {}
    void bytes(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw FormatError("load_basis: " + path_ + " truncated at byte offset " +
                              std::to_string(offset_ + static_cast<std::size_t>(in_.gcount())));
        offset_ += n;
    }
    template <typename T>
    T pod() {
        T v;
        bytes(&v, sizeof(T));
        return v;
    }

  private:
    std::istream& in_;
    std::string path_;
    std::size_t offset_ = 0;
};

}  // namespace

std::size_t save_basis(const GraphSpectralBasis& basis, const SiteIndex& sites,
                       const std::string& destination) {
    if (basis.site_fingerprint != sites.fingerprint)
        throw FingerprintMismatchError("save_basis: basis fingerprint does not match site list");
    if (basis.n != static_cast<int>(sites.size()))
        throw ArgumentError("save_basis: basis size does not match site count");

    namespace fs = std::filesystem;
    const fs::path dest(destination);
    const fs::path tmp = dest.parent_path() /
                         (dest.filename().string() + ".tmp." + std::to_string(::getpid()));

    std::size_t total = 0;
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("save_basis: cannot open " + tmp.string() + " for writing");
        Writer w(out);
        w.bytes(kMagic, 4);
        w.pod<std::uint32_t>(kVersion);
        w.pod<std::uint32_t>(static_cast<std::uint32_t>(basis.n));
        w.pod<double>(basis.threshold_mi);
        w.bytes(basis.site_fingerprint.data(), basis.site_fingerprint.size());
        for (const auto& s : sites.sites) {
            w.pod<std::uint16_t>(static_cast<std::uint16_t>(s.station_id.size()));
            w.bytes(s.station_id.data(), s.station_id.size());
            w.pod<double>(s.latitude);
            w.pod<double>(s.longitude);
        }
        for (int k = 0; k < basis.n; ++k) w.pod<double>(basis.eigenvalues(k));
        for (int k = 0; k < basis.n; ++k)
            w.bytes(basis.eigenvectors.col(k).data(), sizeof(double) * basis.n);
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("save_basis: write failure on " + tmp.string());
        }
        total = w.written();
    }
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("save_basis: cannot rename into place: " + destination);
    }
    return total;
}

std::pair<GraphSpectralBasis, SiteIndex> load_basis(const std::string& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("load_basis: cannot open " + source);
    Reader r(in, source);

    char magic[4];
    r.bytes(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("load_basis: bad magic '" + std::string(magic, 4) +
                          "', expected 'GSB1' in " + source);
    const auto version = r.pod<std::uint32_t>();
    if (version != kVersion)
        throw FormatError("load_basis: unsupported version " + std::to_string(version));
    const auto n = r.pod<std::uint32_t>();
    if (n == 0) throw FormatError("load_basis: header declares zero sites");
    const auto threshold = r.pod<double>();
    Fingerprint stored{};
    r.bytes(stored.data(), stored.size());

    SiteIndex sites;
    sites.sites.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto len = r.pod<std::uint16_t>();
        std::string id(len, '\0');
        if (len > 0) r.bytes(id.data(), len);
        Site s;
        s.station_id = std::move(id);
        s.latitude = r.pod<double>();
        s.longitude = r.pod<double>();
        sites.sites.push_back(std::move(s));
    }
    sites.fingerprint = fingerprint_sites(sites.sites);
    if (sites.fingerprint != stored)
        throw CorruptionError("load_basis: site fingerprint mismatch in " + source +
                              " (stored " + to_hex(stored) + ", recomputed " +
                              to_hex(sites.fingerprint) + ")");

    GraphSpectralBasis basis;
    basis.n = static_cast<int>(n);
    basis.threshold_mi = threshold;
    basis.site_fingerprint = stored;
    basis.eigenvalues.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) basis.eigenvalues(k) = r.pod<double>();
    basis.eigenvectors.resize(n, n);
    for (std::uint32_t k = 0; k < n; ++k)
        r.bytes(basis.eigenvectors.col(k).data(), sizeof(double) * n);

    return {std::move(basis), std::move(sites)};
}

}  // namespace wxc
