#ifndef ICNLOWPAN_SIM_NODE_HPP
#define ICNLOWPAN_SIM_NODE_HPP

#include "icnlowpan/lowpan/fragmentation.hpp"
#include "icnlowpan/ndn/packet.hpp"
#include "icnlowpan/sim/link-model.hpp"
#include "icnlowpan/stateful/cid-table.hpp"
#include "icnlowpan/stateful/pit.hpp"

#include <map>
#include <variant>

namespace icnlowpan::sim {

using stateful::FaceId;

enum class Role : uint8_t { Consumer, Forwarder, Producer };
enum class StackMode : uint8_t { PlainNdn, Icnlowpan };

std::string_view
roleName(Role r);

std::string_view
modeName(StackMode m);

/// Faces of a node on the line topology.
inline constexpr FaceId kDownstream = 0;
inline constexpr FaceId kUpstream = 1;
/// local application face of the consumer and producer
inline constexpr FaceId kAppFace = 255;

struct FrameArrival
{
  FaceId face = 0;
  /// MAC payload: optional fragment header followed by the datagram bytes
  Bytes payload;
};

/// Periodic housekeeping: PIT and reassembly expiry.
struct TimerExpiry
{
};

/// Consumer only: issue request number \c seq.
struct AppRequest
{
  uint64_t seq = 0;
};

using Event = std::variant<FrameArrival, TimerExpiry, AppRequest>;

/// Frames of one packet handed to the radio of \c face.
struct Transmit
{
  FaceId face = 0;
  std::vector<lowpan::LowpanFrame> frames;
  bool isInterest = false;
};

struct ScheduleTimer
{
  Time at{};
};

/// Consumer: a Data was delivered to the application.
struct Delivered
{
  ndn::Name interestName;
  ndn::Name dataName;
};

/// Producer: the Data it sent for an Interest, used as ground truth.
struct Produced
{
  ndn::Name interestName;
  ndn::Name dataName;
};

struct Dropped
{
  Errc reason = Errc::MalformedTlv;
};

using Emission = std::variant<Transmit, ScheduleTimer, Delivered, Produced, Dropped>;

struct NodeConfig
{
  Role role = Role::Forwarder;
  StackMode mode = StackMode::Icnlowpan;
  uint64_t seed = 1;
  const stateful::CidTable* cids = nullptr;
  /// Consumer: request names are this prefix plus the decimal request number.
  ndn::Name requestPrefix;
  Time interestLifetime = std::chrono::milliseconds(4000);
  /// Producer: probability that the Data name carries an extra version component.
  double suffixProbability = 0.0;
};

struct NodeCounters
{
  uint64_t packetsReceived = 0;
  uint64_t drops = 0;
};

/** \brief One NDN node of the line topology.
 *
 *  step() is the only entry point. The node sees the world through its
 *  events and acts only through the returned emissions.
 */
class Node
{
public:
  explicit
  Node(NodeConfig config);

  std::vector<Emission>
  step(const Event& event, Time now);

  /// FIB entry: Interests under \p prefix leave through \p face.
  void
  addRoute(const ndn::Name& prefix, FaceId face);

  const NodeCounters&
  counters() const
  {
    return m_counters;
  }

  const stateful::Pit&
  pit() const
  {
    return m_pit;
  }

  Role
  role() const
  {
    return m_config.role;
  }

private:
  void
  dispatch(const Event& event, Time now, std::vector<Emission>& out);

  void
  onRequest(const AppRequest& req, Time now, std::vector<Emission>& out);

  void
  onFrame(const FrameArrival& frame, Time now, std::vector<Emission>& out);

  void
  onDatagram(FaceId face, ByteSpan datagram, Time now, std::vector<Emission>& out);

  void
  onInterest(FaceId face, const ndn::Interest& interest, std::optional<stateful::HopId> hopId,
             Time now, std::vector<Emission>& out);

  void
  onData(FaceId face, const ndn::Data& data, std::optional<stateful::HopId> hopId,
         std::vector<Emission>& out);

  void
  sendInterest(FaceId face, const ndn::Interest& interest, std::optional<stateful::HopId> hopId,
               std::vector<Emission>& out);

  void
  sendData(FaceId face, const ndn::Data& data, std::optional<stateful::HopId> hopId,
           const ndn::Name& pending, std::vector<Emission>& out);

  void
  emit(FaceId face, ByteSpan datagram, bool isInterest, std::vector<Emission>& out);

  std::optional<FaceId>
  route(const ndn::Name& name) const;

private:
  NodeConfig m_config;
  stateful::CidTable m_noCids;
  stateful::Pit m_pit;
  lowpan::ReassemblyBuffer m_reassembly;
  std::map<ndn::Name, FaceId> m_fib;
  Rng m_rng;
  uint16_t m_nextTag = 0;
  NodeCounters m_counters;
};

} // namespace icnlowpan::sim

#endif // ICNLOWPAN_SIM_NODE_HPP
