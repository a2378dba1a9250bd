#include "wxcompress/fingerprint.hpp"

#include <openssl/sha.h>

#include <cstdio>

namespace wxc {

std::string to_hex(const Fingerprint& fp) {
    std::string out;
    out.reserve(64);
    char buf[3];
    for (auto b : fp) {
        std::snprintf(buf, sizeof(buf), "%02x", b);
        out += buf;
    }
    return out;
}

Fingerprint sha256(const std::vector<std::uint8_t>& bytes) {
    Fingerprint fp{};
    SHA256(bytes.data(), bytes.size(), fp.data());
    return fp;
}

}  // namespace wxc
