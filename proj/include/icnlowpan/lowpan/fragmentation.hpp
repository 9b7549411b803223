#ifndef ICNLOWPAN_LOWPAN_FRAGMENTATION_HPP
#define ICNLOWPAN_LOWPAN_FRAGMENTATION_HPP

#include "icnlowpan/lowpan/dispatch.hpp"

#include <chrono>
#include <map>
#include <optional>

namespace icnlowpan::lowpan {

inline constexpr size_t kMaxDatagramSize = 2047;
inline constexpr size_t kFrag1HeaderLen = 4;
inline constexpr size_t kFragNHeaderLen = 5;

/// RFC 4944 fragment header: FRAG1 11000sss, FRAGN 11100sss.
struct FragHeader
{
  enum class Kind : uint8_t { First, Subsequent };

  Kind kind = Kind::First;
  /// 11 bits
  uint16_t datagramSize = 0;
  uint16_t datagramTag = 0;
  /// in 8-octet units; always 0 for First
  uint8_t offsetUnits8 = 0;

  size_t
  size() const
  {
    return kind == Kind::First ? kFrag1HeaderLen : kFragNHeaderLen;
  }

  size_t
  offsetBytes() const
  {
    return size_t{offsetUnits8} * 8;
  }

  void
  appendTo(Bytes& out) const;

  /// Parses a fragment header at the start of \p in, if one is there.
  static std::optional<FragHeader>
  parse(ByteSpan in);

  friend bool operator==(const FragHeader&, const FragHeader&) = default;
};

bool
isFragmentHeader(uint8_t firstByte);

/// One IEEE 802.15.4 frame. The MAC header and FCS are accounted, not modelled.
struct LowpanFrame
{
  std::optional<FragHeader> frag;
  Bytes payload;

  /// MAC payload: fragment header (if any) followed by the payload.
  Bytes
  serialize() const;

  /// 21 + headers + payload + 2.
  size_t
  wireSize() const
  {
    return kMacHeaderLen + (frag ? frag->size() : 0) + payload.size() + kFcsLen;
  }
};

/** \brief Splits \p datagram into frames that fit the 127-byte PHY.
 *
 *  A datagram that fits a single frame is returned unfragmented, unless its
 *  first octet matches a fragment header pattern; that one gets FRAG1. Otherwise
 *  every fragment but the last carries the largest multiple of 8 bytes that
 *  fits alongside its header.
 *  \throw Error(DatagramTooLarge) beyond 2047 bytes
 */
std::vector<LowpanFrame>
fragment(ByteSpan datagram, uint16_t tag, size_t linkMtu = kPhyMtu);

/** \brief Reassembly state for one node, keyed by (source, tag).
 *
 *  Incomplete datagrams are dropped after the timeout; there is no ARQ.
 */
class ReassemblyBuffer
{
public:
  using Time = std::chrono::microseconds;
  static constexpr Time kDefaultTimeout = std::chrono::seconds(4);

  explicit
  ReassemblyBuffer(Time timeout = kDefaultTimeout)
    : m_timeout(timeout)
  {
  }

  /** \brief Accepts one fragment received from \p source at \p now.
   *  \return the datagram once complete
   *  \throw Error(OverlappingFragment | SizeMismatch | TruncatedFrame); the
   *         partial datagram is discarded
   */
  std::optional<Bytes>
  accept(uint32_t source, const FragHeader& header, ByteSpan payload, Time now);

  /// Discards partial datagrams older than the timeout; returns how many.
  size_t
  expire(Time now);

  size_t
  pending() const
  {
    return m_partials.size();
  }

private:
  struct Partial
  {
    uint16_t size = 0;
    Time firstSeen{};
    Bytes data;
    std::vector<bool> have;
    size_t received = 0;
  };

  Time m_timeout;
  std::map<std::pair<uint32_t, uint16_t>, Partial> m_partials;
};

/** \brief Reassembles a complete, unordered set of fragment frames (MAC payloads).
 *  \throw Error(ReassemblyTimeout) if the set never completes
 */
Bytes
reassemble(std::span<const Bytes> fragments);

} // namespace icnlowpan::lowpan

#endif // ICNLOWPAN_LOWPAN_FRAGMENTATION_HPP
