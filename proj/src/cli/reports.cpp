#include "icnlowpan/cli/reports.hpp"
#include "icnlowpan/stateful/packet-codec.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace icnlowpan::cli {

ndn::Interest
evaluationInterest(const ndn::Name& name)
{
  return ndn::Interest{name, ndn::Nonce{0x12, 0x34, 0x56, 0x78}, 4000, {}};
}

ndn::Data
evaluationData(const ndn::Name& name)
{
  ndn::Data d;
  d.name = name;
  d.freshnessMs = 1000;
  d.content = {0x00, 0x00, 0x00, 0x15};
  return d;
}

double
SizeRow::bodySaving() const
{
  return 1.0 - static_cast<double>(body) / static_cast<double>(uncompressed);
}

double
SizeRow::framedSaving() const
{
  return 1.0 - static_cast<double>(datagram) / static_cast<double>(uncompressed);
}

namespace {

SizeRow
makeRow(std::string packet, size_t uncompressed, const stateful::EncodedFrame& f)
{
  SizeRow r;
  r.packet = std::move(packet);
  r.scheme = std::string(stateful::schemeName(f.scheme));
  r.uncompressed = uncompressed;
  r.body = f.bodySize;
  r.datagram = f.datagram.size();
  r.dispatch = r.datagram - r.body;
  r.nameFallback = f.nameFallback;
  return r;
}

double
median(std::vector<double> v)
{
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::string
percent(double r)
{
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << r * 100.0 << '%';
  return os.str();
}

} // namespace

std::vector<SizeRow>
sizeReport(const ndn::Name& name, const stateful::CidTable& cids)
{
  constexpr stateful::HopId hop = 1;
  auto interest = evaluationInterest(name);
  auto data = evaluationData(name);

  std::vector<SizeRow> rows;
  rows.push_back(makeRow("interest", ndn::encodeInterest(interest).size(),
                         stateful::encodeInterest(interest, {&cids, hop, nullptr, true})));
  rows.push_back(makeRow("data", ndn::encodeData(data).size(),
                         stateful::encodeData(data, {&cids, hop, &name, true})));
  rows.push_back(makeRow("data-no-hopid", ndn::encodeData(data).size(),
                         stateful::encodeData(data, {&cids, std::nullopt, nullptr, true})));
  return rows;
}

void
writeSizeReport(std::ostream& os, const ndn::Name& name, const stateful::CidTable& cids)
{
  os << "record=config command=sizes name=" << name.toUri() << " cids=" << cids.size()
     << " lifetime_ms=4000 freshness_ms=1000 content_bytes=4\n";
  for (const auto& r : sizeReport(name, cids)) {
    os << "record=size packet=" << r.packet
       << " scheme=" << r.scheme
       << " uncompressed=" << r.uncompressed
       << " body=" << r.body
       << " dispatch=" << r.dispatch
       << " datagram=" << r.datagram
       << " name_fallback=" << (r.nameFallback ? "yes" : "no")
       << " body_saving=" << percent(r.bodySaving())
       << " saving=" << percent(r.framedSaving()) << '\n';
  }
  os << "record=literature protocol=coap packet=request bytes=" << coap::kRequestBytes
     << " dispatch=" << coap::kDispatchBytes
     << " ipv6_iphc=" << coap::kIphcBytes
     << " udp=" << coap::kUdpBytes
     << " coap=" << coap::kMessageBytes << " source=published-measurement\n";
}

NameRatio
nameRatio(const ndn::Name& name, const stateful::CidTable& cids)
{
  NameRatio r;
  r.uncompressed = ndn::encodeName(name).size();
  auto [ids, residual] = stateful::cidCompress(name, cids);
  r.cidMatched = !ids.empty();
  size_t cidBytes = ids.size();
  r.cidOnly = cidBytes + ndn::encodeName(residual).size();

  r.fallback = !residual.empty() && !compress::isCompressible(residual);
  if (residual.empty())
    r.combined = cidBytes;
  else if (r.fallback)
    r.combined = cidBytes + ndn::encodeName(residual).size();
  else
    r.combined = cidBytes + compress::compressedNameSize(residual);
  return r;
}

RatioReport
ratioStudy(std::istream& corpus, const stateful::CidTable& cids)
{
  std::vector<double> cidOnly, combined;
  RatioReport report;
  std::string line;
  for (size_t lineNo = 1; std::getline(corpus, line); ++lineNo) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    ndn::Name name;
    try {
      name = ndn::Name::fromUri(line);
    }
    catch (const std::invalid_argument& e) {
      throw Error(Errc::ConfigError, "corpus line " + std::to_string(lineNo) + ": " + e.what());
    }
    auto r = nameRatio(name, cids);
    ++report.names;
    report.cidMatches += r.cidMatched;
    report.fallbacks += r.fallback;
    cidOnly.push_back(r.cidOnlyRatio());
    combined.push_back(r.combinedRatio());
    size_t bin = static_cast<size_t>(std::clamp(r.combinedRatio(), 0.0, 0.999999) * 10);
    ++report.histogram[bin];
  }
  if (report.names == 0)
    throw Error(Errc::EmptyCorpus, "corpus holds no names");

  auto mean = [] (const std::vector<double>& v) {
    double sum = 0;
    for (double x : v)
      sum += x;
    return sum / static_cast<double>(v.size());
  };
  report.meanCidOnly = mean(cidOnly);
  report.meanCombined = mean(combined);
  report.medianCidOnly = median(cidOnly);
  report.medianCombined = median(combined);
  return report;
}

RatioReport
ratioStudyFile(const std::string& path, const stateful::CidTable& cids)
{
  std::ifstream is(path);
  if (!is)
    throw Error(Errc::IoError, "cannot open " + path);
  return ratioStudy(is, cids);
}

void
writeRatioReport(std::ostream& os, const RatioReport& r)
{
  os << "record=ratio pass=cid-only names=" << r.names
     << " mean=" << percent(r.meanCidOnly)
     << " median=" << percent(r.medianCidOnly) << '\n';
  os << "record=ratio pass=cid+stateless names=" << r.names
     << " mean=" << percent(r.meanCombined)
     << " median=" << percent(r.medianCombined)
     << " cid_matches=" << r.cidMatches
     << " fallbacks=" << r.fallbacks << '\n';
  for (size_t i = 0; i < r.histogram.size(); ++i) {
    os << "record=histogram pass=cid+stateless bin=" << i * 10 << '-' << (i + 1) * 10
       << " count=" << r.histogram[i] << '\n';
  }
}

} // namespace icnlowpan::cli
