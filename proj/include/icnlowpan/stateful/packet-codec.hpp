#ifndef ICNLOWPAN_STATEFUL_PACKET_CODEC_HPP
#define ICNLOWPAN_STATEFUL_PACKET_CODEC_HPP

#include "icnlowpan/compress/stateless.hpp"
#include "icnlowpan/lowpan/dispatch.hpp"
#include "icnlowpan/stateful/cid-table.hpp"
#include "icnlowpan/stateful/pit.hpp"

#include <functional>
#include <variant>

namespace icnlowpan::stateful {

/// Which rung of the fallback ladder produced a frame.
enum class Scheme : uint8_t {
  EnRoute,      ///< name elided through PIT state (Data only)
  Cid,          ///< prefix elided through a context id, rest stateless
  Stateless,
  Uncompressed,
};

std::string_view
schemeName(Scheme s);

std::ostream&
operator<<(std::ostream& os, Scheme s);

struct EncodeParams
{
  /// nullptr or empty disables CID elision
  const CidTable* cids = nullptr;
  /// HopID placed in the dispatch chain (HID_o for Interests, HID_i for Data)
  std::optional<HopId> hopId;
  /// Data only: the Interest name the receiver holds under hopId
  const ndn::Name* enRouteName = nullptr;
  bool compress = true;
};

struct EncodedFrame
{
  Bytes datagram;
  lowpan::DispatchChain chain;
  Scheme scheme = Scheme::Uncompressed;
  bool nameFallback = false;
  size_t bodySize = 0;
};

/** \brief Compresses an Interest into a complete ICNLoWPAN datagram.
 *
 *  Tries CID + stateless, then stateless, and sends the uncompressed
 *  dispatch if compression would not shrink the message.
 */
EncodedFrame
encodeInterest(const ndn::Interest& interest, const EncodeParams& params);

/** \brief Compresses a Data into a complete ICNLoWPAN datagram.
 *
 *  Ladder: en-route (HopID, name or suffix only) -> CID + stateless ->
 *  stateless -> uncompressed.
 */
EncodedFrame
encodeData(const ndn::Data& data, const EncodeParams& params);

/// Maps a received HopID to the Interest name of the PIT entry holding it as HID_o.
using HopIdResolver = std::function<const ndn::Name*(HopId)>;

struct DecodedFrame
{
  lowpan::DispatchChain chain;
  std::variant<ndn::Interest, ndn::Data> packet;
  bool nameFallback = false;
  size_t bodySize = 0;

  bool
  isInterest() const
  {
    return std::holds_alternative<ndn::Interest>(packet);
  }
};

/** \brief Parses and decompresses an ICNLoWPAN datagram.
 *  \throw Error from lowpan-frame, compress-stateless, or UnknownCid /
 *         UnknownHopId when the needed state is missing
 */
DecodedFrame
decodeFrame(ByteSpan datagram, const CidTable& cids, const HopIdResolver& resolve = {});

} // namespace icnlowpan::stateful

#endif // ICNLOWPAN_STATEFUL_PACKET_CODEC_HPP
