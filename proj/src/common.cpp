#include "icnlowpan/common.hpp"

#include <cctype>
#include <ostream>

namespace icnlowpan {

std::string_view
errcName(Errc code) noexcept
{
  switch (code) {
    case Errc::MalformedTlv: return "MalformedTlv";
    case Errc::OverheadAssumptionViolated: return "OverheadAssumptionViolated";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::UnknownDispatch: return "UnknownDispatch";
    case Errc::TruncatedFrame: return "TruncatedFrame";
    case Errc::NotIcnlowpan: return "NotIcnlowpan";
    case Errc::DatagramTooLarge: return "DatagramTooLarge";
    case Errc::ReassemblyTimeout: return "ReassemblyTimeout";
    case Errc::OverlappingFragment: return "OverlappingFragment";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::ComponentTooLong: return "ComponentTooLong";
    case Errc::EmptyComponent: return "EmptyComponent";
    case Errc::MalformedCompressedName: return "MalformedCompressedName";
    case Errc::MalformedCompressedInterest: return "MalformedCompressedInterest";
    case Errc::MalformedCompressedData: return "MalformedCompressedData";
    case Errc::UnknownCid: return "UnknownCid";
    case Errc::PitFull: return "PitFull";
    case Errc::HopIdSpaceExhausted: return "HopIdSpaceExhausted";
    case Errc::NoPitMatch: return "NoPitMatch";
    case Errc::UnknownHopId: return "UnknownHopId";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
    case Errc::EmptyCorpus: return "EmptyCorpus";
  }
  return "Unknown";
}

std::string
toHex(ByteSpan bytes)
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0F]);
  }
  return out;
}

std::ostream&
operator<<(std::ostream& os, Errc code)
{
  return os << errcName(code);
}

namespace {

int
hexValue(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

} // namespace

Bytes
fromHex(std::string_view hex)
{
  Bytes out;
  int high = -1;
  for (char c : hex) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    int v = hexValue(c);
    if (v < 0)
      throw std::invalid_argument("invalid hex digit '" + std::string(1, c) + "'");
    if (high < 0) {
      high = v;
    }
    else {
      out.push_back(static_cast<uint8_t>(high << 4 | v));
      high = -1;
    }
  }
  if (high >= 0)
    throw std::invalid_argument("odd number of hex digits");
  return out;
}

} // namespace icnlowpan
