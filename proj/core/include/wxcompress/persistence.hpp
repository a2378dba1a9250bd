#ifndef WXCOMPRESS_PERSISTENCE_HPP
#define WXCOMPRESS_PERSISTENCE_HPP

#include <cstddef>
#include <string>
#include <utility>

#include "wxcompress/spectral.hpp"

namespace wxc {

// .gsb basis file, all little-endian:
//   magic "GSB1" | u32 version=1 | u32 n | f64 threshold_mi | 32-byte fingerprint
//   per site: u16 id length, id bytes, f64 lat, f64 lon
//   f64 eigenvalues x n (ascending)
//   f64 eigenvector matrix, column-major, n x n
// Written atomically (temp file + rename); bit-exact round trip.

// Returns bytes written.  Throws FingerprintMismatchError when the basis
// does not belong to the site list, IoError on write failure.
std::size_t save_basis(const GraphSpectralBasis& basis, const SiteIndex& sites,
                       const std::string& destination);

// Throws FormatError on bad magic/truncation, also for an unsupported
// version; CorruptionError when the recomputed site fingerprint differs
// from the stored one.
std::pair<GraphSpectralBasis, SiteIndex> load_basis(const std::string& source);

}  // namespace wxc

#endif
