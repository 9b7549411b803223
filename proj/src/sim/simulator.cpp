#include "icnlowpan/sim/simulator.hpp"

#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <queue>

namespace icnlowpan::sim {

NameScheme
parseNameScheme(std::string_view s)
{
  if (s == "short")
    return NameScheme::Short;
  if (s == "long")
    return NameScheme::Long;
  throw Error(Errc::ConfigError, "unknown name scheme '" + std::string(s) + "'");
}

ndn::Name
requestPrefix(NameScheme scheme, const ndn::Name& custom)
{
  switch (scheme) {
    case NameScheme::Short:
      return ndn::Name{"org", "example", "temp"};
    case NameScheme::Long:
      return ndn::Name{"org", "example", "building", "1", "floor", "4", "room", "481", "temp"};
    case NameScheme::Custom:
      break;
  }
  return custom;
}

RoleMetrics&
RoleMetrics::operator+=(const RoleMetrics& o)
{
  framesTx += o.framesTx;
  bytesTx += o.bytesTx;
  bytesRx += o.bytesRx;
  bytesOffered += o.bytesOffered;
  packetsOffered += o.packetsOffered;
  packetsReceived += o.packetsReceived;
  airtime += o.airtime;
  prrHits += o.prrHits;
  prrBase += o.prrBase;
  return *this;
}

double
Metrics::forwarderBytesPerHandshake() const
{
  if (hops == 0 || requests == 0)
    return 0.0;
  return static_cast<double>(forwarders.bytesTx) / static_cast<double>(requests * hops);
}

double
Metrics::totalBytesPerHandshake() const
{
  if (requests == 0)
    return 0.0;
  uint64_t total = consumer.bytesTx + forwarders.bytesTx + producer.bytesTx;
  return static_cast<double>(total) / static_cast<double>(requests);
}

namespace {

uint64_t
splitmix64(uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Scheduled
{
  Time at;
  uint64_t order;
  size_t node;
  Event event;
};

struct Later
{
  bool
  operator()(const Scheduled& a, const Scheduled& b) const
  {
    return a.at != b.at ? a.at > b.at : a.order > b.order;
  }
};

class Simulation
{
public:
  explicit
  Simulation(const SimConfig& config)
    : m_config(config)
    , m_lossRng(splitmix64(config.seed ^ 0x4C4F5353))
  {
    if (config.interferer)
      m_interferer.emplace(splitmix64(config.seed ^ 0x494E5446), config.interfererParams);

    size_t n = config.hops + 2;
    m_radioFree.assign(n, Time{0});
    m_metrics.nodes.assign(n, RoleMetrics{});
    for (size_t i = 0; i < n; ++i) {
      Role role = i == 0 ? Role::Consumer : i + 1 == n ? Role::Producer : Role::Forwarder;
      NodeConfig nc;
      nc.role = role;
      nc.mode = config.mode;
      nc.seed = splitmix64(config.seed + i);
      nc.cids = &m_config.cids;
      nc.requestPrefix = requestPrefix(config.scheme, config.customPrefix);
      nc.suffixProbability = config.suffixProbability;
      m_nodes.push_back(std::make_unique<Node>(std::move(nc)));
      if (role != Role::Producer)
        m_nodes.back()->addRoute(ndn::Name{}, kUpstream);
    }
  }

  Metrics
  run()
  {
    for (size_t i = 0; i < m_config.requests; ++i)
      push(m_config.requestInterval * static_cast<int64_t>(i), 0, AppRequest{i});

    while (!m_queue.empty()) {
      Scheduled s = m_queue.top();
      m_queue.pop();
      if (auto* arrival = std::get_if<FrameArrival>(&s.event))
        m_metrics.nodes[s.node].bytesRx += lowpan::kMacHeaderLen + arrival->payload.size() + lowpan::kFcsLen;
      for (auto& em : m_nodes[s.node]->step(s.event, s.at))
        handle(s.node, s.at, std::move(em));
      if (m_config.checkInvariants) {
        for (const auto& node : m_nodes)
          node->pit().checkInvariants();
      }
    }
    return finish();
  }

private:
  void
  push(Time at, size_t node, Event ev)
  {
    m_queue.push({at, m_order++, node, std::move(ev)});
  }

  void
  handle(size_t from, Time now, Emission em)
  {
    std::visit([&] (auto& e) {
      using E = std::decay_t<decltype(e)>;
      if constexpr (std::is_same_v<E, Transmit>) {
        transmit(from, now, e);
      }
      else if constexpr (std::is_same_v<E, ScheduleTimer>) {
        push(e.at, from, TimerExpiry{});
      }
      else if constexpr (std::is_same_v<E, Produced>) {
        m_truth[e.interestName] = e.dataName;
      }
      else if constexpr (std::is_same_v<E, Delivered>) {
        ++m_metrics.delivered;
        auto it = m_truth.find(e.interestName);
        if (it == m_truth.end() || it->second != e.dataName)
          ++m_metrics.nameMismatches;
      }
    }, em);
  }

  void
  transmit(size_t from, Time now, const Transmit& tx)
  {
    size_t to = tx.face == kDownstream ? from - 1 : from + 1;
    FaceId inFace = tx.face == kDownstream ? kUpstream : kDownstream;
    RoleMetrics& sender = m_metrics.nodes[from];
    RoleMetrics& receiver = m_metrics.nodes[to];
    ++receiver.packetsOffered;

    for (const auto& frame : tx.frames) {
      size_t wire = frame.wireSize();
      Time start = std::max(now + kTurnaround, m_radioFree[from]);
      Time end = start + airtime(wire);
      m_radioFree[from] = end;

      ++sender.framesTx;
      sender.bytesTx += wire;
      sender.airtime += end - start;
      receiver.bytesOffered += wire;

      bool lost = collisionCheck({start, end}, m_interferer ? &*m_interferer : nullptr,
                                 m_config.baseLoss, m_lossRng);
      if (lost)
        ++m_metrics.framesLost;
      else
        push(end, to, FrameArrival{inFace, frame.serialize()});
    }
  }

  Metrics
  finish()
  {
    Metrics& m = m_metrics;
    m.mode = m_config.mode;
    m.hops = m_config.hops;
    m.requests = m_config.requests;
    for (size_t i = 0; i < m_nodes.size(); ++i) {
      RoleMetrics& n = m.nodes[i];
      n.packetsReceived = m_nodes[i]->counters().packetsReceived;
      n.prrHits = n.packetsReceived;
      n.prrBase = n.packetsOffered;
      m.drops += m_nodes[i]->counters().drops;
    }
    m.nodes.front().prrHits = m.delivered;
    m.nodes.front().prrBase = m.requests;
    m.nodes.back().prrBase = m.requests;
    m.consumer = m.nodes.front();
    m.producer = m.nodes.back();
    for (size_t i = 1; i + 1 < m.nodes.size(); ++i)
      m.forwarders += m.nodes[i];
    return m;
  }

private:
  const SimConfig& m_config;
  std::vector<std::unique_ptr<Node>> m_nodes;
  std::vector<Time> m_radioFree;
  std::optional<InterfererSchedule> m_interferer;
  Rng m_lossRng;
  std::priority_queue<Scheduled, std::vector<Scheduled>, Later> m_queue;
  uint64_t m_order = 0;
  std::map<ndn::Name, ndn::Name> m_truth;
  Metrics m_metrics;
};

void
validate(const SimConfig& c)
{
  if (c.requests == 0)
    throw Error(Errc::ConfigError, "no requests to run");
  if (c.hops > 64)
    throw Error(Errc::ConfigError, "at most 64 forwarders are supported");
  if (!(c.baseLoss >= 0.0 && c.baseLoss <= 1.0))
    throw Error(Errc::ConfigError, "loss probability must be within [0, 1]");
  if (!(c.suffixProbability >= 0.0 && c.suffixProbability <= 1.0))
    throw Error(Errc::ConfigError, "suffix probability must be within [0, 1]");
  if (c.requestInterval <= Time{0})
    throw Error(Errc::ConfigError, "request interval must be positive");
  const auto& ip = c.interfererParams;
  if (c.interferer && (ip.burstLength == 0 || ip.gapMin > ip.gapMax || ip.silenceMin > ip.silenceMax ||
                       ip.gapMin < Time{0} || ip.silenceMin < Time{0}))
    throw Error(Errc::ConfigError, "invalid interferer parameters");
}

void
writeRole(std::ostream& os, const Metrics& m, Role role, const RoleMetrics& r)
{
  os << "record=role mode=" << modeName(m.mode)
     << " role=" << roleName(role)
     << " frames_tx=" << r.framesTx
     << " bytes_tx=" << r.bytesTx
     << " bytes_rx=" << r.bytesRx
     << " prr=" << std::fixed << std::setprecision(6) << r.prr()
     << " airtime_us=" << r.airtime.count() << '\n';
}

} // namespace

Metrics
runHandshakes(const SimConfig& config)
{
  validate(config);
  return Simulation(config).run();
}

void
writeMetrics(std::ostream& os, const Metrics& m)
{
  writeRole(os, m, Role::Consumer, m.consumer);
  writeRole(os, m, Role::Forwarder, m.forwarders);
  writeRole(os, m, Role::Producer, m.producer);
  os << "record=summary mode=" << modeName(m.mode)
     << " hops=" << m.hops
     << " requests=" << m.requests
     << " delivered=" << m.delivered
     << " name_mismatches=" << m.nameMismatches
     << " drops=" << m.drops
     << " frames_lost=" << m.framesLost
     << std::fixed << std::setprecision(2)
     << " fwd_bytes_per_handshake=" << m.forwarderBytesPerHandshake()
     << " total_bytes_per_handshake=" << m.totalBytesPerHandshake() << '\n';
}

void
writeConfig(std::ostream& os, const SimConfig& c)
{
  os << "record=config mode=" << modeName(c.mode)
     << " hops=" << c.hops
     << " requests=" << c.requests
     << " seed=" << c.seed
     << " name=" << requestPrefix(c.scheme, c.customPrefix).toUri() << "/<seq>"
     << " interval_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(c.requestInterval).count()
     << std::fixed << std::setprecision(6)
     << " loss=" << c.baseLoss
     << " interferer=" << (c.interferer ? "on" : "off")
     << " suffix_probability=" << c.suffixProbability
     << " cids=" << c.cids.size() << '\n';
}

} // namespace icnlowpan::sim
