#ifndef ICNLOWPAN_NDN_PACKET_HPP
#define ICNLOWPAN_NDN_PACKET_HPP

#include "icnlowpan/ndn/name.hpp"

#include <array>
#include <optional>

namespace icnlowpan::ndn {

/** \brief A TLV element carried through unchanged.
 *
 *  Holds unknown non-critical elements as well as known elements whose
 *  semantics are out of scope (CanBePrefix, MustBeFresh, HopLimit, ...).
 */
struct OpaqueTlv
{
  uint32_t type = 0;
  Bytes value;

  friend bool operator==(const OpaqueTlv&, const OpaqueTlv&) = default;
};

using Nonce = std::array<uint8_t, 4>;

struct Interest
{
  Name name;
  std::optional<Nonce> nonce;
  std::optional<uint64_t> lifetimeMs;
  /// encoded after the known fields, in this order
  std::vector<OpaqueTlv> extra;

  friend bool operator==(const Interest&, const Interest&) = default;
};

struct Data
{
  Name name;
  std::optional<uint64_t> freshnessMs;
  Bytes content;
  Bytes sigInfo;
  Bytes sigValue;
  std::vector<OpaqueTlv> extra;

  friend bool operator==(const Data&, const Data&) = default;
};

/// Interest TLV: Name, Nonce, InterestLifetime, then pass-through elements.
Bytes
encodeInterest(const Interest& interest);

/// \throw Error(MalformedTlv)
Interest
decodeInterest(ByteSpan wire);

/** \brief Data TLV: Name, MetaInfo (only when freshness is set), Content,
 *         SignatureInfo, SignatureValue, then pass-through elements.
 *
 *  Empty signature fields are still emitted as zero-length TLVs.
 */
Bytes
encodeData(const Data& data);

/// \throw Error(MalformedTlv)
Data
decodeData(ByteSpan wire);

/// Whether \p type may be carried as an OpaqueTlv inside an Interest.
bool
isInterestPassThrough(uint32_t type);

/// Whether \p type may be carried as an OpaqueTlv inside a Data.
bool
isDataPassThrough(uint32_t type);

} // namespace icnlowpan::ndn

#endif // ICNLOWPAN_NDN_PACKET_HPP
