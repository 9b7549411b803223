#include "icnlowpan/cli/cli.hpp"
#include "icnlowpan/cli/reports.hpp"
#include "icnlowpan/lowpan/fragmentation.hpp"
#include "icnlowpan/ndn/tlv.hpp"
#include "icnlowpan/sim/simulator.hpp"
#include "icnlowpan/stateful/packet-codec.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace icnlowpan::cli {
namespace {

/// Bad flag values or malformed input text; exits with kExitUsage.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Options
{
  std::string name = "long";
  std::string cidConfig;
  std::string corpusCids = "data/corpus-cids.conf";
  bool noCid = false;
  std::string corpus = "data/corpus.txt";
  std::string input;
  std::string output;

  unsigned hopId = 0;
  std::string pending;
  uint16_t tag = 0;
  bool reassemble = false;

  size_t hops = 1;
  size_t requests = 100;
  uint64_t seed = kDefaultSeed;
  double loss = 0.0;
  bool interferer = false;
  bool compare = false;
  std::string mode = "icnlowpan";
  unsigned intervalMs = 500;
  double suffixProbability = 0.0;
  bool checkInvariants = false;
};

ndn::Name
parseUri(const std::string& uri)
{
  try {
    return ndn::Name::fromUri(uri);
  }
  catch (const std::invalid_argument& e) {
    throw UsageError("bad name '" + uri + "': " + e.what());
  }
}

/// "long" and "short" pick the evaluation names with request number 1.
ndn::Name
evaluationName(const std::string& s)
{
  if (s == "long" || s == "short") {
    ndn::Name n = sim::requestPrefix(sim::parseNameScheme(s));
    return n.append("1");
  }
  return parseUri(s);
}

stateful::CidTable
loadCids(const Options& o, const std::string& path)
{
  if (o.noCid)
    return {};
  if (path.empty())
    return stateful::CidTable::defaults();
  return stateful::CidTable::loadFile(path);
}

/// Non-comment lines as byte strings. A '#' line closes the current group.
std::vector<std::vector<Bytes>>
readHexGroups(std::istream& is)
{
  std::vector<std::vector<Bytes>> groups(1);
  std::string line;
  for (size_t lineNo = 1; std::getline(is, line); ++lineNo) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    if (line[first] == '#') {
      if (!groups.back().empty())
        groups.emplace_back();
      continue;
    }
    try {
      groups.back().push_back(fromHex(line));
    }
    catch (const std::invalid_argument& e) {
      throw UsageError("input line " + std::to_string(lineNo) + ": malformed hex (" + e.what() + ")");
    }
  }
  if (groups.back().empty())
    groups.pop_back();
  return groups;
}

std::vector<Bytes>
readHexLines(std::istream& is)
{
  std::vector<Bytes> lines;
  for (auto& g : readHexGroups(is))
    std::move(g.begin(), g.end(), std::back_inserter(lines));
  return lines;
}

const char*
yesNo(bool b)
{
  return b ? "yes" : "no";
}

void
cmdCompress(const Options& o, std::istream& is, std::ostream& os)
{
  auto cids = loadCids(o, o.cidConfig);
  std::optional<stateful::HopId> hop;
  if (o.hopId != 0)
    hop = static_cast<stateful::HopId>(o.hopId);
  std::optional<ndn::Name> pending;
  if (!o.pending.empty()) {
    if (!hop)
      throw UsageError("--pending needs --hop-id");
    pending = parseUri(o.pending);
  }
  stateful::EncodeParams params{&cids, hop, pending ? &*pending : nullptr, true};

  for (const auto& wire : readHexLines(is)) {
    stateful::EncodedFrame f;
    const char* kind = "interest";
    if (!wire.empty() && wire[0] == ndn::tlv::Interest) {
      f = stateful::encodeInterest(ndn::decodeInterest(wire), params);
    }
    else if (!wire.empty() && wire[0] == ndn::tlv::Data) {
      kind = "data";
      f = stateful::encodeData(ndn::decodeData(wire), params);
    }
    else {
      throw Error(Errc::MalformedTlv, "input is neither an Interest nor a Data");
    }
    os << "# packet=" << kind
       << " scheme=" << f.scheme
       << " name_fallback=" << yesNo(f.nameFallback)
       << " tlv=" << wire.size()
       << " body=" << f.bodySize
       << " datagram=" << f.datagram.size() << '\n'
       << toHex(f.datagram) << '\n';
  }
}

void
cmdDecompress(const Options& o, std::istream& is, std::ostream& os)
{
  auto cids = loadCids(o, o.cidConfig);
  std::optional<ndn::Name> pending;
  if (!o.pending.empty()) {
    if (o.hopId == 0)
      throw UsageError("--pending needs --hop-id");
    pending = parseUri(o.pending);
  }
  auto resolve = [&] (stateful::HopId h) -> const ndn::Name* {
    return pending && h == o.hopId ? &*pending : nullptr;
  };

  for (const auto& datagram : readHexLines(is)) {
    auto d = stateful::decodeFrame(datagram, cids, resolve);
    Bytes wire;
    const ndn::Name* name = nullptr;
    if (d.isInterest()) {
      const auto& interest = std::get<ndn::Interest>(d.packet);
      wire = ndn::encodeInterest(interest);
      name = &interest.name;
    }
    else {
      const auto& data = std::get<ndn::Data>(d.packet);
      wire = ndn::encodeData(data);
      name = &data.name;
    }
    os << "# packet=" << (d.isInterest() ? "interest" : "data")
       << " name=" << name->toUri()
       << " name_fallback=" << yesNo(d.nameFallback)
       << " body=" << d.bodySize
       << " tlv=" << wire.size() << '\n'
       << toHex(wire) << '\n';
  }
}

void
cmdFrag(const Options& o, std::istream& is, std::ostream& os)
{
  if (o.reassemble) {
    for (const auto& group : readHexGroups(is))
      os << toHex(lowpan::reassemble(group)) << '\n';
    return;
  }
  uint16_t tag = o.tag;
  for (const auto& datagram : readHexLines(is)) {
    auto frames = lowpan::fragment(datagram, tag);
    os << "# datagram=" << datagram.size() << " frames=" << frames.size() << " tag=" << tag << '\n';
    for (const auto& f : frames)
      os << toHex(f.serialize()) << '\n';
    ++tag;
  }
}

std::string
change(double before, double after)
{
  if (before == 0.0)
    return "n/a";
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << std::showpos << (after / before - 1.0) * 100.0 << '%';
  return os.str();
}

void
writeDeltas(std::ostream& os, const sim::Metrics& plain, const sim::Metrics& icnl)
{
  auto airtime = [] (const sim::Metrics& m) {
    return (m.consumer.airtime + m.forwarders.airtime + m.producer.airtime).count();
  };
  os << std::fixed << std::setprecision(2);
  os << "record=delta metric=fwd_bytes_per_handshake plain-ndn=" << plain.forwarderBytesPerHandshake()
     << " icnlowpan=" << icnl.forwarderBytesPerHandshake()
     << " change=" << change(plain.forwarderBytesPerHandshake(), icnl.forwarderBytesPerHandshake()) << '\n';
  os << "record=delta metric=total_bytes_per_handshake plain-ndn=" << plain.totalBytesPerHandshake()
     << " icnlowpan=" << icnl.totalBytesPerHandshake()
     << " change=" << change(plain.totalBytesPerHandshake(), icnl.totalBytesPerHandshake()) << '\n';
  os << "record=delta metric=airtime_us plain-ndn=" << airtime(plain)
     << " icnlowpan=" << airtime(icnl)
     << " change=" << change(static_cast<double>(airtime(plain)), static_cast<double>(airtime(icnl))) << '\n';
  os << "record=delta metric=consumer_prr plain-ndn=" << std::setprecision(6) << plain.consumer.prr()
     << " icnlowpan=" << icnl.consumer.prr()
     << " change_points=" << std::setprecision(2) << std::showpos
     << (icnl.consumer.prr() - plain.consumer.prr()) * 100.0 << std::noshowpos << '\n';
}

sim::Metrics
runChecked(const sim::SimConfig& c)
{
  try {
    return sim::runHandshakes(c);
  }
  catch (const Error& e) {
    if (e.code() == Errc::ConfigError)
      throw UsageError(e.what());
    throw;
  }
}

void
cmdSimulate(const Options& o, std::ostream& os)
{
  sim::SimConfig c;
  c.hops = o.hops;
  c.requests = o.requests;
  c.seed = o.seed;
  c.mode = o.mode == "plain-ndn" ? sim::StackMode::PlainNdn : sim::StackMode::Icnlowpan;
  if (o.name == "long" || o.name == "short") {
    c.scheme = sim::parseNameScheme(o.name);
  }
  else {
    c.scheme = sim::NameScheme::Custom;
    c.customPrefix = parseUri(o.name);
  }
  c.cids = loadCids(o, o.cidConfig);
  c.requestInterval = std::chrono::milliseconds(o.intervalMs);
  c.baseLoss = o.loss;
  c.interferer = o.interferer;
  c.suffixProbability = o.suffixProbability;
  c.checkInvariants = o.checkInvariants;

  if (!o.compare) {
    auto m = runChecked(c);
    sim::writeConfig(os, c);
    sim::writeMetrics(os, m);
    return;
  }
  auto plainCfg = c;
  plainCfg.mode = sim::StackMode::PlainNdn;
  auto icnlCfg = c;
  icnlCfg.mode = sim::StackMode::Icnlowpan;
  auto plain = runChecked(plainCfg);
  auto icnl = runChecked(icnlCfg);
  sim::writeConfig(os, plainCfg);
  sim::writeMetrics(os, plain);
  sim::writeConfig(os, icnlCfg);
  sim::writeMetrics(os, icnl);
  writeDeltas(os, plain, icnl);
}

} // namespace

int
runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"NDN over IEEE 802.15.4: header compression codecs, size reports and a link simulator",
               "icnlowpan"};
  app.require_subcommand(1);

  auto addCids = [&] (CLI::App* sub) {
    sub->add_option("--cid-config", o.cidConfig, "context table file (`cid <id> <uri>` lines)")
      ->check(CLI::ExistingFile);
    sub->add_flag("--no-cid,--stateless", o.noCid, "use no context ids");
  };
  auto addIo = [&] (CLI::App* sub) {
    sub->add_option("--in", o.input, "read hex lines from this file instead of stdin")
      ->check(CLI::ExistingFile);
    sub->add_option("--out", o.output, "write the report to this file");
  };

  auto* sizes = app.add_subcommand("sizes", "Interest/Data sizes with and without compression");
  sizes->add_option("--name", o.name, "long, short or a name URI")->capture_default_str();
  addCids(sizes);
  sizes->add_option("--out", o.output, "write the report to this file");

  auto* ratio = app.add_subcommand("ratio", "name compression ratios over a URI-path corpus");
  ratio->add_option("--corpus", o.corpus, "one URI path per line")->capture_default_str();
  ratio->add_option("--cid-config", o.corpusCids, "context table file")->capture_default_str();
  ratio->add_flag("--no-cid", o.noCid, "use no context ids");
  ratio->add_option("--out", o.output, "write the report to this file");

  auto* compress = app.add_subcommand("compress", "NDN TLV hex lines to compressed datagram hex");
  auto* decompress = app.add_subcommand("decompress", "compressed datagram hex lines to NDN TLV hex");
  for (auto* sub : {compress, decompress}) {
    addCids(sub);
    addIo(sub);
    sub->add_option("--hop-id", o.hopId, "HopID carried in the dispatch chain")->check(CLI::Range(1, 255));
    sub->add_option("--pending", o.pending, "Interest name held under --hop-id (en-route Data)");
  }

  auto* frag = app.add_subcommand("frag", "split datagram hex lines into 802.15.4 frames");
  addIo(frag);
  frag->add_option("--tag", o.tag, "datagram tag of the first datagram")->capture_default_str();
  frag->add_flag("--reassemble", o.reassemble, "reassemble fragment groups separated by '#' lines");

  auto* simulate = app.add_subcommand("simulate", "consumer/forwarder/producer handshakes over a line");
  simulate->add_option("--hops", o.hops, "forwarders between consumer and producer")
    ->check(CLI::Range(0, 64))->capture_default_str();
  simulate->add_option("--requests", o.requests, "number of requests")
    ->check(CLI::Range(1, 100'000'000))->capture_default_str();
  simulate->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  simulate->add_option("--loss", o.loss, "independent frame loss probability")
    ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  simulate->add_flag("--interferer", o.interferer, "add the bursty interferer");
  simulate->add_flag("--compare", o.compare, "run plain-ndn and icnlowpan on the same seed");
  simulate->add_option("--mode", o.mode, "stack")
    ->check(CLI::IsMember({"plain-ndn", "icnlowpan"}))->capture_default_str();
  simulate->add_option("--name", o.name, "long, short or a request prefix URI")->capture_default_str();
  addCids(simulate);
  simulate->add_option("--interval-ms", o.intervalMs, "time between requests")
    ->check(CLI::Range(1u, 3'600'000u))->capture_default_str();
  simulate->add_option("--suffix-probability", o.suffixProbability,
                       "chance that the producer extends the requested name")
    ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  simulate->add_flag("--check-invariants", o.checkInvariants, "verify every PIT after every event");
  simulate->add_option("--out", o.output, "write metrics records to this file");

  // CLI11 consumes the vector from the back
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  }
  catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ifstream inFile;
    std::istream* is = &in;
    if (!o.input.empty()) {
      inFile.open(o.input);
      if (!inFile)
        throw Error(Errc::IoError, "cannot open " + o.input);
      is = &inFile;
    }
    std::ostringstream buffer;

    if (*sizes) {
      writeSizeReport(buffer, evaluationName(o.name), loadCids(o, o.cidConfig));
    }
    else if (*ratio) {
      auto cids = loadCids(o, o.corpusCids);
      buffer << "record=config command=ratio corpus=" << o.corpus
             << " cid_config=" << (o.noCid ? "none" : o.corpusCids) << " cids=" << cids.size() << '\n';
      writeRatioReport(buffer, ratioStudyFile(o.corpus, cids));
    }
    else if (*compress) {
      cmdCompress(o, *is, buffer);
    }
    else if (*decompress) {
      cmdDecompress(o, *is, buffer);
    }
    else if (*frag) {
      cmdFrag(o, *is, buffer);
    }
    else if (*simulate) {
      cmdSimulate(o, buffer);
    }

    // nothing is written unless the whole command succeeded
    if (o.output.empty()) {
      out << buffer.str();
    }
    else {
      std::ofstream file(o.output, std::ios::binary);
      if (!(file << buffer.str()))
        throw Error(Errc::IoError, "cannot write " + o.output);
    }
    return kExitOk;
  }
  catch (const UsageError& e) {
    err << "icnlowpan: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const std::exception& e) {
    err << "icnlowpan: " << e.what() << '\n';
    return kExitRuntime;
  }
}

} // namespace icnlowpan::cli
