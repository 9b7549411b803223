#ifndef ICNLOWPAN_COMPRESS_STATELESS_HPP
#define ICNLOWPAN_COMPRESS_STATELESS_HPP

#include "icnlowpan/compress/name-compression.hpp"
#include "icnlowpan/ndn/packet.hpp"

namespace icnlowpan::compress {

inline constexpr uint64_t kDefaultInterestLifetimeMs = 4000;

/// Presence bits of a compressed Interest body, most significant first.
namespace interest_bits {
inline constexpr uint8_t Nonce = 0x80;
inline constexpr uint8_t Lifetime = 0x40;   ///< non-default InterestLifetime
inline constexpr uint8_t HopId = 0x20;
inline constexpr uint8_t CidChain = 0x10;
inline constexpr uint8_t NamePresent = 0x08; ///< residual name follows
inline constexpr uint8_t NameFallback = 0x04;
inline constexpr uint8_t Reserved = 0x02;
inline constexpr uint8_t Extensions = 0x01; ///< trailing pass-through TLVs
} // namespace interest_bits

/// Presence bits of a compressed Data body, most significant first.
namespace data_bits {
inline constexpr uint8_t Freshness = 0x80;
inline constexpr uint8_t Content = 0x40;
inline constexpr uint8_t SigInfo = 0x20;
inline constexpr uint8_t SigValue = 0x10;
inline constexpr uint8_t HopId = 0x08;
inline constexpr uint8_t NamePresent = 0x04;
inline constexpr uint8_t NameFallback = 0x02;
inline constexpr uint8_t Extensions = 0x01;
} // namespace data_bits

/** \brief What the receiver already knows about the packet.
 *
 *  The first \c elidedPrefix name components are restored from CID or PIT
 *  state and are not carried. The two flags only mirror the dispatch chain.
 */
struct CompressOptions
{
  size_t elidedPrefix = 0;
  bool hopId = false;
  bool cidChain = false;
};

struct DecompressedInterest
{
  ndn::Interest interest;
  uint8_t bits = 0;

  bool
  nameFallback() const
  {
    return bits & interest_bits::NameFallback;
  }
};

struct DecompressedData
{
  ndn::Data data;
  uint8_t bits = 0;

  bool
  nameFallback() const
  {
    return bits & data_bits::NameFallback;
  }
};

/** \brief Compressed Interest body.
 *
 *  bitfield | name (compressed, or Name TLV on fallback) | nonce (4) |
 *  lifetime (length octet + value, only if not 4000 ms) | pass-through TLVs.
 *  A residual name with an empty or >15-byte component falls back to the
 *  Name TLV and sets NameFallback.
 */
Bytes
compressInterest(const ndn::Interest& interest, const CompressOptions& opts = {});

/** \param prefix components elided by the sender, restored in front of the carried name
 *  \throw Error(MalformedCompressedInterest)
 */
DecompressedInterest
decompressInterest(ByteSpan body, const ndn::Name& prefix = {});

/** \brief Compressed Data body.
 *
 *  bitfield | name | freshness (VAR-NUMBER) | content | sig info | sig value |
 *  pass-through TLVs. Empty byte fields are elided through their bit; each
 *  present field carries a VAR-NUMBER length except the last one when no
 *  pass-through TLVs follow.
 */
Bytes
compressData(const ndn::Data& data, const CompressOptions& opts = {});

/// \throw Error(MalformedCompressedData)
DecompressedData
decompressData(ByteSpan body, const ndn::Name& prefix = {});

} // namespace icnlowpan::compress

#endif // ICNLOWPAN_COMPRESS_STATELESS_HPP
