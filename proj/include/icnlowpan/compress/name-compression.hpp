#ifndef ICNLOWPAN_COMPRESS_NAME_COMPRESSION_HPP
#define ICNLOWPAN_COMPRESS_NAME_COMPRESSION_HPP

#include "icnlowpan/ndn/name.hpp"

namespace icnlowpan::compress {

inline constexpr size_t kMaxCompressedComponent = 15;
inline constexpr uint8_t kStopNibble = 0x0;

/** \brief Nibble-packed name encoding.
 *
 *  Each length octet holds two component lengths (earlier one in the high
 *  nibble) and is followed by both components. Nibble 0 marks the end:
 *  in the low nibble of the last length octet for an odd |c|, or as a
 *  trailing 0x00 octet for an even |c|.
 */
struct CompressedName
{
  Bytes bytes;

  friend bool operator==(const CompressedName&, const CompressedName&) = default;
};

/// Whether every component is 1..15 bytes long.
bool
isCompressible(const ndn::Name& name);

/// Length octets used for |c| components: ceil((|c| + 1) / 2).
constexpr size_t
compressedNameOverhead(size_t componentCount)
{
  return (componentCount + 2) / 2;
}

/// Total compressed size: overhead plus component bytes.
size_t
compressedNameSize(const ndn::Name& name);

/// \throw Error(ComponentTooLong | EmptyComponent)
CompressedName
compressName(const ndn::Name& name);

void
appendCompressedName(Bytes& out, const ndn::Name& name);

/** \brief Decodes one compressed name at the start of \p in.
 *  \param[out] consumed bytes read, including the stop marker
 *  \throw Error(MalformedCompressedName)
 */
ndn::Name
decompressNamePrefix(ByteSpan in, size_t& consumed);

/// Decodes a buffer holding exactly one compressed name.
ndn::Name
decompressName(const CompressedName& c);

} // namespace icnlowpan::compress

#endif // ICNLOWPAN_COMPRESS_NAME_COMPRESSION_HPP
