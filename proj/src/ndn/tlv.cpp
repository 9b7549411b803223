#include "icnlowpan/ndn/tlv.hpp"

namespace icnlowpan::ndn {

size_t
TlvHeader::size() const
{
  return sizeofVarNumber(type) + sizeofVarNumber(length);
}

void
appendVarNumber(Bytes& out, uint64_t n)
{
  auto appendBe = [&out, n] (int octets) {
    for (int i = octets - 1; i >= 0; --i)
      out.push_back(static_cast<uint8_t>(n >> (8 * i)));
  };

  if (n < 253) {
    out.push_back(static_cast<uint8_t>(n));
  }
  else if (n <= 0xFFFF) {
    out.push_back(0xFD);
    appendBe(2);
  }
  else if (n <= 0xFFFFFFFF) {
    out.push_back(0xFE);
    appendBe(4);
  }
  else {
    out.push_back(0xFF);
    appendBe(8);
  }
}

void
appendNonNegativeInteger(Bytes& out, uint64_t n)
{
  size_t octets = sizeofNonNegativeInteger(n);
  for (size_t i = octets; i-- > 0;)
    out.push_back(static_cast<uint8_t>(n >> (8 * i)));
}

uint64_t
readNonNegativeInteger(ByteSpan value)
{
  switch (value.size()) {
    case 1: case 2: case 4: case 8:
      break;
    default:
      throw Error(Errc::MalformedTlv, "NonNegativeInteger of invalid length " +
                  std::to_string(value.size()));
  }
  uint64_t n = 0;
  for (uint8_t b : value)
    n = (n << 8) | b;
  return n;
}

void
appendTlv(Bytes& out, uint32_t type, ByteSpan value)
{
  appendVarNumber(out, type);
  appendVarNumber(out, value.size());
  out.insert(out.end(), value.begin(), value.end());
}

uint64_t
TlvReader::readVarNumber()
{
  if (atEnd())
    throw Error(Errc::MalformedTlv, "truncated VAR-NUMBER");

  uint8_t first = m_input[m_pos];
  size_t octets = first < 253 ? 0 : first == 0xFD ? 2 : first == 0xFE ? 4 : 8;
  if (m_input.size() - m_pos - 1 < octets)
    throw Error(Errc::MalformedTlv, "truncated VAR-NUMBER");
  ++m_pos;
  if (octets == 0)
    return first;

  uint64_t n = 0;
  for (size_t i = 0; i < octets; ++i)
    n = (n << 8) | m_input[m_pos++];
  return n;
}

TlvReader::Element
TlvReader::read()
{
  size_t start = m_pos;
  uint64_t type = readVarNumber();
  if (type == 0 || type > 0xFFFFFFFF)
    throw Error(Errc::MalformedTlv, "invalid TLV-TYPE " + std::to_string(type));
  uint64_t length = readVarNumber();
  if (length > m_input.size() - m_pos)
    throw Error(Errc::MalformedTlv, "TLV-LENGTH " + std::to_string(length) +
                " exceeds remaining " + std::to_string(m_input.size() - m_pos) + " bytes");

  Element e;
  e.type = static_cast<uint32_t>(type);
  e.value = m_input.subspan(m_pos, length);
  m_pos += length;
  e.wire = m_input.subspan(start, m_pos - start);
  return e;
}

std::optional<uint32_t>
TlvReader::peekType() const
{
  if (atEnd())
    return std::nullopt;
  TlvReader probe(m_input.subspan(m_pos));
  try {
    return static_cast<uint32_t>(probe.readVarNumber());
  }
  catch (const Error&) {
    return std::nullopt;
  }
}

} // namespace icnlowpan::ndn
