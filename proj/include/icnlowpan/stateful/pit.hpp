#ifndef ICNLOWPAN_STATEFUL_PIT_HPP
#define ICNLOWPAN_STATEFUL_PIT_HPP

#include "icnlowpan/ndn/name.hpp"

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <random>

namespace icnlowpan::stateful {

/// Ephemeral per-hop identifier; 0 is reserved as "absent".
using HopId = uint8_t;
using FaceId = uint32_t;
using Time = std::chrono::microseconds;

inline constexpr size_t kHopIdSpace = 255;

/// Downstream that asked for the entry: face plus the HopID it chose (HID_i).
struct InRecord
{
  FaceId face = 0;
  std::optional<HopId> hidIn;

  friend bool operator==(const InRecord&, const InRecord&) = default;
};

struct PitEntry
{
  ndn::Name name;
  Time expiry{};
  std::vector<InRecord> inRecords;
  /// HID_o: unique among live entries of this PIT
  std::optional<HopId> hidOut;
};

/** \brief Pending Interest Table extended with inbound/outbound HopID columns.
 *
 *  HopIDs live exactly as long as their entry. Outbound HopIDs are drawn
 *  from a seeded PRNG and retried against the live set.
 */
class Pit
{
public:
  explicit
  Pit(uint64_t seed = 1, size_t capacity = 1024)
    : m_rng(seed)
    , m_capacity(capacity)
  {
  }

  Pit(const Pit&) = delete;
  Pit& operator=(const Pit&) = delete;

  struct InsertResult
  {
    PitEntry* entry = nullptr;
    bool isNew = false;
    /// same face and HopID already recorded
    bool isDuplicate = false;
  };

  /** \brief Records an incoming Interest and its HopID in HID_i.
   *
   *  A repeat from the same face refreshes the expiry; another face adds an
   *  in-record (aggregation). An in-record of another entry with the same
   *  (face, HopID) is stale, since the downstream reassigned that HopID, and is removed.
   *  \throw Error(PitFull)
   */
  InsertResult
  interestInbound(const ndn::Name& name, FaceId face, std::optional<HopId> hopId, Time expiry);

  /** \brief Assigns HID_o for forwarding the Interest upstream.
   *
   *  An entry that already holds a HID_o keeps it.
   *  \throw Error(HopIdSpaceExhausted) when 255 HopIDs are live
   */
  HopId
  interestOutbound(PitEntry& entry);

  struct DataMatch
  {
    PitEntry* entry = nullptr;
    /// components of the Data name beyond the entry name
    ndn::Name suffix;
  };

  /// Longest entry whose name is a prefix of \p dataName.
  std::optional<DataMatch>
  matchData(const ndn::Name& dataName);

  /// As matchData. \throw Error(NoPitMatch)
  DataMatch
  dataOutbound(const ndn::Name& dataName);

  /// Entry whose HID_o equals \p hopId, or nullptr.
  PitEntry*
  findByHopId(HopId hopId);

  /// Lookup on HID_o for a returning Data. \throw Error(UnknownHopId)
  PitEntry&
  dataInboundSwap(HopId frameHopId);

  /// Entry holding an in-record for (face, hopId), or nullptr.
  PitEntry*
  findByInbound(FaceId face, HopId hopId);

  PitEntry*
  find(const ndn::Name& name);

  /// Removes the entry and frees its HopIDs.
  void
  erase(const PitEntry& entry);

  /// Removes entries whose expiry is at or before \p now; returns how many.
  size_t
  expire(Time now);

  size_t
  size() const
  {
    return m_entries.size();
  }

  size_t
  liveHopIds() const;

  /// \throw std::logic_error if HID_o values are not unique or the index is stale
  void
  checkInvariants() const;

private:
  std::map<ndn::Name, PitEntry> m_entries;
  std::array<PitEntry*, 256> m_byHidOut{};
  std::mt19937_64 m_rng;
  size_t m_capacity;
  size_t m_liveHopIds = 0;
};

} // namespace icnlowpan::stateful

#endif // ICNLOWPAN_STATEFUL_PIT_HPP
