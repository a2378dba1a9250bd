#ifndef WXCOMPRESS_FINGERPRINT_HPP
#define WXCOMPRESS_FINGERPRINT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wxc {

using Fingerprint = std::array<std::uint8_t, 32>;

std::string to_hex(const Fingerprint& fp);

// SHA-256 of arbitrary bytes.
Fingerprint sha256(const std::vector<std::uint8_t>& bytes);

}  // namespace wxc

#endif
