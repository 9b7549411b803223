#ifndef ICNLOWPAN_COMMON_HPP
#define ICNLOWPAN_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icnlowpan {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

/** \brief Error kinds raised across the convergence layer.
 *
 *  Every failure is reported as an icnlowpan::Error carrying one of these codes,
 *  so callers can branch on the kind without a class per condition.
 */
enum class Errc {
  // ndn-codec
  MalformedTlv,
  OverheadAssumptionViolated,
  // lowpan-frame
  InvalidChain,
  UnknownDispatch,
  TruncatedFrame,
  NotIcnlowpan,
  DatagramTooLarge,
  ReassemblyTimeout,
  OverlappingFragment,
  SizeMismatch,
  // compress-stateless
  ComponentTooLong,
  EmptyComponent,
  MalformedCompressedName,
  MalformedCompressedInterest,
  MalformedCompressedData,
  // compress-stateful
  UnknownCid,
  PitFull,
  HopIdSpaceExhausted,
  NoPitMatch,
  UnknownHopId,
  // harness
  ConfigError,
  IoError,
  EmptyCorpus,
};

std::string_view
errcName(Errc code) noexcept;

std::ostream&
operator<<(std::ostream& os, Errc code);

class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errcName(code)) + ": " + what)
    , m_code(code)
  {
  }

  Errc
  code() const noexcept
  {
    return m_code;
  }

private:
  Errc m_code;
};

/// Lower-case hex, no separators.
std::string
toHex(ByteSpan bytes);

/// Parses hex digits, ignoring ASCII whitespace. Throws std::invalid_argument on bad input.
Bytes
fromHex(std::string_view hex);

inline Bytes
toBytes(std::string_view s)
{
  return Bytes(s.begin(), s.end());
}

} // namespace icnlowpan

#endif // ICNLOWPAN_COMMON_HPP
