#ifndef ICNLOWPAN_LOWPAN_DISPATCH_HPP
#define ICNLOWPAN_LOWPAN_DISPATCH_HPP

#include "icnlowpan/common.hpp"

#include <optional>

namespace icnlowpan::lowpan {

/// IEEE 802.15.4 accounting constants.
inline constexpr size_t kPhyMtu = 127;
inline constexpr size_t kMacHeaderLen = 21;
inline constexpr size_t kFcsLen = 2;
/// Bytes available to the adaptation layer in one frame.
inline constexpr size_t kMaxFramePayload = kPhyMtu - kMacHeaderLen - kFcsLen;

/// Page switch dispatch 1111xxxx.
inline constexpr uint8_t kPageSwitchMask = 0xF0;
inline constexpr uint8_t kIcnlowpanPage = 2;

inline constexpr uint8_t
pageSwitchByte(uint8_t page)
{
  return static_cast<uint8_t>(kPageSwitchMask | (page & 0x0F));
}

/** \brief ICNLoWPAN dispatch types, allocated in page 2.
 *
 *  The dispatch octet is 100CH0TT: TT selects the type, C announces a CID
 *  chain and H a HopID following the dispatch.
 */
enum class IcnDispatch : uint8_t {
  UncompressedInterest = 0x80,
  UncompressedData = 0x81,
  CompressedInterest = 0x82,
  CompressedData = 0x83,
};

inline constexpr uint8_t kDispatchCidFlag = 0x10;
inline constexpr uint8_t kDispatchHopIdFlag = 0x08;
inline constexpr uint8_t kDispatchFixedMask = 0xE4;
inline constexpr uint8_t kDispatchFixedBits = 0x80;

/// Context identifiers are 7 bits; the MSB of a chain byte means "another CID follows".
inline constexpr uint8_t kMaxContextId = 0x7F;
inline constexpr uint8_t kCidChainBit = 0x80;

constexpr bool
isInterest(IcnDispatch d)
{
  return (static_cast<uint8_t>(d) & 1) == 0;
}

constexpr bool
isCompressed(IcnDispatch d)
{
  return (static_cast<uint8_t>(d) & 2) != 0;
}

std::string_view
dispatchName(IcnDispatch d);

std::ostream&
operator<<(std::ostream& os, IcnDispatch d);

struct DispatchChain
{
  uint8_t page = kIcnlowpanPage;
  IcnDispatch dispatch = IcnDispatch::CompressedInterest;
  /// ContextIds (0..127) in chain order.
  std::vector<uint8_t> cids;
  /// 0 means absent; HopID 0 is reserved.
  std::optional<uint8_t> hopId;

  /// Serialized size: page switch + dispatch + CIDs + HopID.
  size_t
  size() const
  {
    return 2 + cids.size() + (hopId ? 1 : 0);
  }

  friend bool operator==(const DispatchChain&, const DispatchChain&) = default;
};

/** \brief Serializes page switch, ICNLoWPAN dispatch, CID chain, HopID, then \p body.
 *  \throw Error(InvalidChain) if the page is not 2, a CID exceeds 127, or HopID is 0
 */
Bytes
frameEncapsulate(const DispatchChain& chain, ByteSpan body);

struct ParsedFrame
{
  DispatchChain chain;
  Bytes body;
};

/** \brief Inverse of frameEncapsulate.
 *
 *  Leading RFC 4944 mesh and broadcast headers are skipped. Page 0/1
 *  content (IPv6, IPHC, NALP, page switch to 0 or 1) is rejected with
 *  NotIcnlowpan.
 *  \throw Error(UnknownDispatch | TruncatedFrame | NotIcnlowpan)
 */
ParsedFrame
parseFrame(ByteSpan frame);

} // namespace icnlowpan::lowpan

#endif // ICNLOWPAN_LOWPAN_DISPATCH_HPP
