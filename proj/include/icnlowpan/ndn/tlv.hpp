#ifndef ICNLOWPAN_NDN_TLV_HPP
#define ICNLOWPAN_NDN_TLV_HPP

#include "icnlowpan/common.hpp"

#include <optional>

namespace icnlowpan::ndn {

namespace tlv {

/// NDN packet format TLV-TYPE assignments.
enum : uint32_t {
  Interest = 0x05,
  Data = 0x06,
  Name = 0x07,
  GenericNameComponent = 0x08,
  Nonce = 0x0A,
  InterestLifetime = 0x0C,
  MustBeFresh = 0x12,
  MetaInfo = 0x14,
  Content = 0x15,
  SignatureInfo = 0x16,
  SignatureValue = 0x17,
  FreshnessPeriod = 0x19,
  ForwardingHint = 0x1E,
  CanBePrefix = 0x21,
  HopLimit = 0x22,
  ApplicationParameters = 0x24,
  InterestSignatureInfo = 0x2C,
  InterestSignatureValue = 0x2E,
};

/** \brief Whether an unrecognized TLV-TYPE must abort decoding.
 *
 *  Types 0..31 and odd types are critical per the NDN evolvability rules.
 */
constexpr bool
isCritical(uint32_t type)
{
  return type <= 31 || (type & 1) != 0;
}

} // namespace tlv

/// \brief TLV header: TLV-TYPE and TLV-LENGTH.
struct TlvHeader
{
  uint32_t type = 0;
  uint64_t length = 0;

  /// Serialized size of TYPE plus LENGTH.
  size_t
  size() const;

  friend bool operator==(const TlvHeader&, const TlvHeader&) = default;
};

/// Size of VAR-NUMBER: 1, 3, 5, or 9 octets.
constexpr size_t
sizeofVarNumber(uint64_t n)
{
  return n < 253 ? 1 : n <= 0xFFFF ? 3 : n <= 0xFFFFFFFF ? 5 : 9;
}

void
appendVarNumber(Bytes& out, uint64_t n);

/// Size of minimal NonNegativeInteger encoding: 1, 2, 4, or 8 octets.
constexpr size_t
sizeofNonNegativeInteger(uint64_t n)
{
  return n <= 0xFF ? 1 : n <= 0xFFFF ? 2 : n <= 0xFFFFFFFF ? 4 : 8;
}

void
appendNonNegativeInteger(Bytes& out, uint64_t n);

/// Throws MalformedTlv unless the value is 1, 2, 4, or 8 octets.
uint64_t
readNonNegativeInteger(ByteSpan value);

void
appendTlv(Bytes& out, uint32_t type, ByteSpan value);

/** \brief Sequential reader over a TLV-encoded buffer.
 *
 *  Reads never run past the end of the underlying span; any violation raises
 *  Error(Errc::MalformedTlv).
 */
class TlvReader
{
public:
  struct Element
  {
    uint32_t type = 0;
    ByteSpan value;
    /// the whole element including header
    ByteSpan wire;
  };

  explicit
  TlvReader(ByteSpan input)
    : m_input(input)
  {
  }

  bool
  atEnd() const
  {
    return m_pos == m_input.size();
  }

  size_t
  position() const
  {
    return m_pos;
  }

  uint64_t
  readVarNumber();

  Element
  read();

  /// Peeks at the next TLV-TYPE without consuming it.
  std::optional<uint32_t>
  peekType() const;

private:
  ByteSpan m_input;
  size_t m_pos = 0;
};

} // namespace icnlowpan::ndn

#endif // ICNLOWPAN_NDN_TLV_HPP
