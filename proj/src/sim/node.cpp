#include "icnlowpan/sim/node.hpp"

#include "icnlowpan/ndn/tlv.hpp"
#include "icnlowpan/stateful/packet-codec.hpp"

namespace icnlowpan::sim {

using stateful::HopId;

std::string_view
roleName(Role r)
{
  switch (r) {
    case Role::Consumer: return "consumer";
    case Role::Forwarder: return "forwarder";
    case Role::Producer: return "producer";
  }
  return "?";
}

std::string_view
modeName(StackMode m)
{
  return m == StackMode::PlainNdn ? "plain-ndn" : "icnlowpan";
}

Node::Node(NodeConfig config)
  : m_config(std::move(config))
  , m_pit(m_config.seed)
  , m_rng(m_config.seed ^ 0x9E3779B97F4A7C15ULL)
{
}

void
Node::addRoute(const ndn::Name& prefix, FaceId face)
{
  m_fib[prefix] = face;
}

std::optional<FaceId>
Node::route(const ndn::Name& name) const
{
  for (size_t len = name.size() + 1; len-- > 0;) {
    auto it = m_fib.find(name.getPrefix(len));
    if (it != m_fib.end())
      return it->second;
  }
  return std::nullopt;
}

std::vector<Emission>
Node::step(const Event& event, Time now)
{
  std::vector<Emission> out;
  try {
    dispatch(event, now, out);
  }
  catch (const Error& e) {
    out.emplace_back(Dropped{e.code()});
  }

  for (const auto& em : out) {
    if (std::holds_alternative<Dropped>(em))
      ++m_counters.drops;
  }
  return out;
}

void
Node::dispatch(const Event& event, Time now, std::vector<Emission>& out)
{
  std::visit([&] (const auto& e) {
    using E = std::decay_t<decltype(e)>;
    if constexpr (std::is_same_v<E, AppRequest>) {
      onRequest(e, now, out);
    }
    else if constexpr (std::is_same_v<E, FrameArrival>) {
      onFrame(e, now, out);
    }
    else {
      m_pit.expire(now);
      m_reassembly.expire(now);
    }
  }, event);
}

void
Node::onRequest(const AppRequest& req, Time now, std::vector<Emission>& out)
{
  if (m_config.role != Role::Consumer) {
    out.emplace_back(Dropped{Errc::ConfigError});
    return;
  }
  ndn::Interest interest;
  interest.name = m_config.requestPrefix;
  interest.name.append(std::to_string(req.seq + 1));
  ndn::Nonce nonce;
  for (auto& b : nonce)
    b = static_cast<uint8_t>(m_rng());
  interest.nonce = nonce;
  interest.lifetimeMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                          m_config.interestLifetime).count();

  Time expiry = now + m_config.interestLifetime;
  auto ins = m_pit.interestInbound(interest.name, kAppFace, std::nullopt, expiry);
  auto face = route(interest.name);
  if (!face) {
    m_pit.erase(*ins.entry);
    out.emplace_back(Dropped{Errc::NoPitMatch});
    return;
  }

  std::optional<HopId> hopId;
  if (m_config.mode == StackMode::Icnlowpan)
    hopId = m_pit.interestOutbound(*ins.entry);
  out.emplace_back(ScheduleTimer{expiry});
  sendInterest(*face, interest, hopId, out);
}

void
Node::onFrame(const FrameArrival& frame, Time now, std::vector<Emission>& out)
{
  if (frame.payload.empty()) {
    out.emplace_back(Dropped{Errc::TruncatedFrame});
    return;
  }
  if (!lowpan::isFragmentHeader(frame.payload[0])) {
    onDatagram(frame.face, frame.payload, now, out);
    return;
  }

  std::optional<Bytes> datagram;
  try {
    auto header = lowpan::FragHeader::parse(frame.payload);
    if (!header) {
      out.emplace_back(Dropped{Errc::TruncatedFrame});
      return;
    }
    ByteSpan payload = ByteSpan(frame.payload).subspan(header->size());
    datagram = m_reassembly.accept(frame.face, *header, payload, now);
  }
  catch (const Error& e) {
    out.emplace_back(Dropped{e.code()});
    return;
  }
  if (datagram)
    onDatagram(frame.face, *datagram, now, out);
  else
    out.emplace_back(ScheduleTimer{now + lowpan::ReassemblyBuffer::kDefaultTimeout});
}

void
Node::onDatagram(FaceId face, ByteSpan datagram, Time now, std::vector<Emission>& out)
{
  ++m_counters.packetsReceived;
  try {
    if (m_config.mode == StackMode::PlainNdn) {
      if (!datagram.empty() && datagram[0] == ndn::tlv::Interest)
        onInterest(face, ndn::decodeInterest(datagram), std::nullopt, now, out);
      else
        onData(face, ndn::decodeData(datagram), std::nullopt, out);
      return;
    }

    const auto& cids = m_config.cids != nullptr ? *m_config.cids : m_noCids;
    auto decoded = stateful::decodeFrame(datagram, cids, [this] (HopId h) -> const ndn::Name* {
      auto* e = m_pit.findByHopId(h);
      return e == nullptr ? nullptr : &e->name;
    });
    if (decoded.isInterest())
      onInterest(face, std::get<ndn::Interest>(decoded.packet), decoded.chain.hopId, now, out);
    else
      onData(face, std::get<ndn::Data>(decoded.packet), decoded.chain.hopId, out);
  }
  catch (const Error& e) {
    out.emplace_back(Dropped{e.code()});
  }
}

void
Node::onInterest(FaceId face, const ndn::Interest& interest, std::optional<HopId> hopId, Time now,
                 std::vector<Emission>& out)
{
  if (m_config.role == Role::Consumer) {
    out.emplace_back(Dropped{Errc::NoPitMatch});
    return;
  }

  if (m_config.role == Role::Producer) {
    ndn::Data data;
    data.name = interest.name;
    if (m_config.suffixProbability > 0.0 &&
        std::bernoulli_distribution(m_config.suffixProbability)(m_rng))
      data.name.append("v1");
    data.freshnessMs = 1000;
    data.content.resize(4);
    for (auto& b : data.content)
      b = static_cast<uint8_t>(m_rng());
    out.emplace_back(Produced{interest.name, data.name});
    sendData(face, data, hopId, interest.name, out);
    return;
  }

  Time expiry = now + m_config.interestLifetime;
  if (interest.lifetimeMs)
    expiry = now + std::chrono::milliseconds(*interest.lifetimeMs);
  auto ins = m_pit.interestInbound(interest.name, face, hopId, expiry);
  if (!ins.isNew)
    return;

  auto next = route(interest.name);
  if (!next || *next == face) {
    m_pit.erase(*ins.entry);
    out.emplace_back(Dropped{Errc::NoPitMatch});
    return;
  }
  std::optional<HopId> hidOut;
  if (m_config.mode == StackMode::Icnlowpan) {
    try {
      hidOut = m_pit.interestOutbound(*ins.entry);
    }
    catch (const Error&) {
      // no HopID left: the Data comes back by name instead
    }
  }
  out.emplace_back(ScheduleTimer{expiry});
  sendInterest(*next, interest, hidOut, out);
}

void
Node::onData(FaceId, const ndn::Data& data, std::optional<HopId> hopId, std::vector<Emission>& out)
{
  if (m_config.role == Role::Producer) {
    out.emplace_back(Dropped{Errc::NoPitMatch});
    return;
  }

  stateful::PitEntry* entry = nullptr;
  if (hopId) {
    entry = m_pit.findByHopId(*hopId);
    if (entry == nullptr) {
      out.emplace_back(Dropped{Errc::UnknownHopId});
      return;
    }
  }
  else {
    auto match = m_pit.matchData(data.name);
    if (!match) {
      out.emplace_back(Dropped{Errc::NoPitMatch});
      return;
    }
    entry = match->entry;
  }

  ndn::Name pending = entry->name;
  auto inRecords = entry->inRecords;
  m_pit.erase(*entry);

  for (const auto& rec : inRecords) {
    if (rec.face == kAppFace)
      out.emplace_back(Delivered{pending, data.name});
    else
      sendData(rec.face, data, rec.hidIn, pending, out);
  }
}

void
Node::sendInterest(FaceId face, const ndn::Interest& interest, std::optional<HopId> hopId,
                   std::vector<Emission>& out)
{
  if (m_config.mode == StackMode::PlainNdn) {
    emit(face, ndn::encodeInterest(interest), true, out);
    return;
  }
  auto frame = stateful::encodeInterest(interest, {m_config.cids, hopId, nullptr, true});
  emit(face, frame.datagram, true, out);
}

void
Node::sendData(FaceId face, const ndn::Data& data, std::optional<HopId> hopId,
               const ndn::Name& pending, std::vector<Emission>& out)
{
  if (m_config.mode == StackMode::PlainNdn) {
    emit(face, ndn::encodeData(data), false, out);
    return;
  }
  auto frame = stateful::encodeData(data, {m_config.cids, hopId, &pending, true});
  emit(face, frame.datagram, false, out);
}

void
Node::emit(FaceId face, ByteSpan datagram, bool isInterest, std::vector<Emission>& out)
{
  try {
    out.emplace_back(Transmit{face, lowpan::fragment(datagram, m_nextTag++), isInterest});
  }
  catch (const Error& e) {
    out.emplace_back(Dropped{e.code()});
  }
}

} // namespace icnlowpan::sim
