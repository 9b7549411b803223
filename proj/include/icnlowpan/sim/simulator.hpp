#ifndef ICNLOWPAN_SIM_SIMULATOR_HPP
#define ICNLOWPAN_SIM_SIMULATOR_HPP

#include "icnlowpan/sim/node.hpp"

#include <iosfwd>

namespace icnlowpan::sim {

enum class NameScheme : uint8_t { Short, Long, Custom };

/// \throw Error(ConfigError) for anything but "short" or "long"
NameScheme
parseNameScheme(std::string_view s);

/// Request prefix of a scheme; the request number is appended as the last component.
ndn::Name
requestPrefix(NameScheme scheme, const ndn::Name& custom = {});

struct SimConfig
{
  /// forwarders between consumer and producer
  size_t hops = 1;
  size_t requests = 100;
  uint64_t seed = 1;
  StackMode mode = StackMode::Icnlowpan;
  NameScheme scheme = NameScheme::Long;
  ndn::Name customPrefix;
  stateful::CidTable cids = stateful::CidTable::defaults();
  Time requestInterval = std::chrono::milliseconds(500);
  double baseLoss = 0.0;
  bool interferer = false;
  InterfererParams interfererParams;
  double suffixProbability = 0.0;
  /// run Pit::checkInvariants on every node after every event
  bool checkInvariants = false;
};

struct RoleMetrics
{
  uint64_t framesTx = 0;
  uint64_t bytesTx = 0;
  uint64_t bytesRx = 0;
  /// link-layer bytes addressed to this role, lost or not
  uint64_t bytesOffered = 0;
  uint64_t packetsOffered = 0;
  uint64_t packetsReceived = 0;
  Time airtime{};
  /// PRR numerator and denominator. End-to-end for the consumer (Data
  /// delivered per request) and producer (Interests reached per request),
  /// per link for forwarders (received per sent to them).
  uint64_t prrHits = 0;
  uint64_t prrBase = 0;

  double
  prr() const
  {
    return prrBase == 0 ? 0.0 : static_cast<double>(prrHits) / static_cast<double>(prrBase);
  }

  RoleMetrics&
  operator+=(const RoleMetrics& o);

  friend bool operator==(const RoleMetrics&, const RoleMetrics&) = default;
};

struct Metrics
{
  StackMode mode = StackMode::Icnlowpan;
  size_t hops = 0;
  uint64_t requests = 0;
  uint64_t delivered = 0;
  uint64_t nameMismatches = 0;
  uint64_t drops = 0;
  uint64_t framesLost = 0;
  RoleMetrics consumer;
  /// summed over all forwarders
  RoleMetrics forwarders;
  RoleMetrics producer;
  /// per node, consumer first
  std::vector<RoleMetrics> nodes;

  /// forwarder bytes sent per request and per forwarder
  double
  forwarderBytesPerHandshake() const;

  /// bytes sent by all nodes per request
  double
  totalBytesPerHandshake() const;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/** \brief Runs \c config.requests consumer/producer handshakes over a line topology.
 *
 *  Node 0 is the consumer, nodes 1..hops forward, the last node produces.
 *  \throw Error(ConfigError) on an invalid configuration
 *  \throw std::logic_error if invariant checking is on and a PIT is inconsistent
 */
Metrics
runHandshakes(const SimConfig& config);

/// Line records: one `record=role` per role, then one `record=summary`.
void
writeMetrics(std::ostream& os, const Metrics& m);

/// `record=config` line echoing every parameter of the run.
void
writeConfig(std::ostream& os, const SimConfig& config);

} // namespace icnlowpan::sim

#endif // ICNLOWPAN_SIM_SIMULATOR_HPP
