#ifndef ICNLOWPAN_CLI_REPORTS_HPP
#define ICNLOWPAN_CLI_REPORTS_HPP

#include "icnlowpan/stateful/cid-table.hpp"
#include "icnlowpan/ndn/packet.hpp"

#include <array>
#include <iosfwd>

namespace icnlowpan::cli {

/// CoAP GET request over 6LoWPAN, as measured in the literature; not computed here.
namespace coap {
inline constexpr size_t kDispatchBytes = 3;
inline constexpr size_t kIphcBytes = 32;
inline constexpr size_t kUdpBytes = 6;
inline constexpr size_t kMessageBytes = 56;
inline constexpr size_t kRequestBytes = 97;
static_assert(kDispatchBytes + kIphcBytes + kUdpBytes + kMessageBytes == kRequestBytes);
} // namespace coap

/// Temperature request: nonce and a 4000 ms lifetime.
ndn::Interest
evaluationInterest(const ndn::Name& name);

/// Temperature reading: 1000 ms freshness, 4-byte value, empty signature fields.
ndn::Data
evaluationData(const ndn::Name& name);

struct SizeRow
{
  std::string packet;
  std::string scheme;
  size_t uncompressed = 0;
  size_t body = 0;
  size_t dispatch = 0;
  size_t datagram = 0;
  bool nameFallback = false;

  double
  bodySaving() const;

  /// 1 - datagram / uncompressed: what the link actually saves
  double
  framedSaving() const;
};

/// Interest (CID + HopID), en-route Data (HopID) and Data without a HopID.
std::vector<SizeRow>
sizeReport(const ndn::Name& name, const stateful::CidTable& cids);

void
writeSizeReport(std::ostream& os, const ndn::Name& name, const stateful::CidTable& cids);

/// Name sizes of one corpus entry. CID-only keeps the residual as a Name TLV.
struct NameRatio
{
  size_t uncompressed = 0;
  size_t cidOnly = 0;
  size_t combined = 0;
  bool cidMatched = false;
  bool fallback = false;

  double
  cidOnlyRatio() const
  {
    return 1.0 - static_cast<double>(cidOnly) / static_cast<double>(uncompressed);
  }

  double
  combinedRatio() const
  {
    return 1.0 - static_cast<double>(combined) / static_cast<double>(uncompressed);
  }
};

NameRatio
nameRatio(const ndn::Name& name, const stateful::CidTable& cids);

struct RatioReport
{
  size_t names = 0;
  size_t cidMatches = 0;
  size_t fallbacks = 0;
  double meanCidOnly = 0;
  double meanCombined = 0;
  double medianCidOnly = 0;
  double medianCombined = 0;
  /// combined ratio in 10 % bins; ratios below 0 land in the first
  std::array<size_t, 10> histogram{};
};

/** \brief Compression-ratio study over a corpus of URI paths, one per line.
 *
 *  Blank lines and lines starting with '#' are skipped.
 *  \throw Error(EmptyCorpus) if no name is read
 *  \throw Error(ConfigError) on a line that is not a URI path
 */
RatioReport
ratioStudy(std::istream& corpus, const stateful::CidTable& cids);

/// \throw Error(IoError) if \p path cannot be opened
RatioReport
ratioStudyFile(const std::string& path, const stateful::CidTable& cids);

void
writeRatioReport(std::ostream& os, const RatioReport& r);

} // namespace icnlowpan::cli

#endif // ICNLOWPAN_CLI_REPORTS_HPP
