#include "icnlowpan/stateful/pit.hpp"

#include <algorithm>

namespace icnlowpan::stateful {

Pit::InsertResult
Pit::interestInbound(const ndn::Name& name, FaceId face, std::optional<HopId> hopId, Time expiry)
{
  // a downstream reusing a HopID has released its old entry; drop that in-record
  if (hopId) {
    if (PitEntry* stale = findByInbound(face, *hopId); stale != nullptr && stale->name != name) {
      std::erase_if(stale->inRecords,
                    [&] (const InRecord& r) { return r.face == face && r.hidIn == hopId; });
      if (stale->inRecords.empty())
        erase(*stale);
    }
  }

  auto it = m_entries.find(name);
  if (it == m_entries.end()) {
    if (m_entries.size() >= m_capacity)
      throw Error(Errc::PitFull, "PIT holds " + std::to_string(m_capacity) + " entries");
    PitEntry entry;
    entry.name = name;
    entry.expiry = expiry;
    entry.inRecords.push_back({face, hopId});
    it = m_entries.emplace(name, std::move(entry)).first;
    return {&it->second, true, false};
  }

  PitEntry& entry = it->second;
  entry.expiry = std::max(entry.expiry, expiry);
  auto rec = std::find_if(entry.inRecords.begin(), entry.inRecords.end(),
                          [face] (const InRecord& r) { return r.face == face; });
  if (rec == entry.inRecords.end()) {
    entry.inRecords.push_back({face, hopId});
    return {&entry, false, false};
  }
  bool duplicate = rec->hidIn == hopId;
  rec->hidIn = hopId;
  return {&entry, false, duplicate};
}

HopId
Pit::interestOutbound(PitEntry& entry)
{
  if (entry.hidOut)
    return *entry.hidOut;
  if (m_liveHopIds >= kHopIdSpace)
    throw Error(Errc::HopIdSpaceExhausted, "all 255 HopIDs are live");

  std::uniform_int_distribution<unsigned> draw(1, kHopIdSpace);
  HopId id;
  do {
    id = static_cast<HopId>(draw(m_rng));
  } while (m_byHidOut[id] != nullptr);

  entry.hidOut = id;
  m_byHidOut[id] = &entry;
  ++m_liveHopIds;
  return id;
}

std::optional<Pit::DataMatch>
Pit::matchData(const ndn::Name& dataName)
{
  for (size_t len = dataName.size() + 1; len-- > 0;) {
    auto it = m_entries.find(dataName.getPrefix(len));
    if (it != m_entries.end())
      return DataMatch{&it->second, dataName.getSubName(len)};
  }
  return std::nullopt;
}

Pit::DataMatch
Pit::dataOutbound(const ndn::Name& dataName)
{
  auto match = matchData(dataName);
  if (!match)
    throw Error(Errc::NoPitMatch, "no pending Interest for " + dataName.toUri());
  return *match;
}

PitEntry*
Pit::findByHopId(HopId hopId)
{
  return m_byHidOut[hopId];
}

PitEntry&
Pit::dataInboundSwap(HopId frameHopId)
{
  PitEntry* entry = frameHopId == 0 ? nullptr : m_byHidOut[frameHopId];
  if (entry == nullptr)
    throw Error(Errc::UnknownHopId, "HopID " + std::to_string(frameHopId) + " is not live");
  return *entry;
}

PitEntry*
Pit::findByInbound(FaceId face, HopId hopId)
{
  for (auto& [name, entry] : m_entries) {
    for (const auto& r : entry.inRecords) {
      if (r.face == face && r.hidIn == hopId)
        return &entry;
    }
  }
  return nullptr;
}

PitEntry*
Pit::find(const ndn::Name& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

void
Pit::erase(const PitEntry& entry)
{
  auto it = m_entries.find(entry.name);
  if (it == m_entries.end() || &it->second != &entry)
    return;
  if (entry.hidOut) {
    m_byHidOut[*entry.hidOut] = nullptr;
    --m_liveHopIds;
  }
  m_entries.erase(it);
}

size_t
Pit::expire(Time now)
{
  size_t removed = 0;
  for (auto it = m_entries.begin(); it != m_entries.end();) {
    if (it->second.expiry <= now) {
      if (it->second.hidOut) {
        m_byHidOut[*it->second.hidOut] = nullptr;
        --m_liveHopIds;
      }
      it = m_entries.erase(it);
      ++removed;
    }
    else {
      ++it;
    }
  }
  return removed;
}

size_t
Pit::liveHopIds() const
{
  return m_liveHopIds;
}

void
Pit::checkInvariants() const
{
  std::array<bool, 256> seen{};
  size_t live = 0;
  for (const auto& [name, entry] : m_entries) {
    if (!entry.hidOut)
      continue;
    HopId id = *entry.hidOut;
    if (id == 0)
      throw std::logic_error("HopID 0 assigned to " + name.toUri());
    if (seen[id])
      throw std::logic_error("HopID " + std::to_string(id) + " assigned twice");
    seen[id] = true;
    if (m_byHidOut[id] != &entry)
      throw std::logic_error("HopID index out of sync for " + std::to_string(id));
    ++live;
  }
  if (live != m_liveHopIds)
    throw std::logic_error("live HopID count out of sync");
  for (size_t id = 0; id < m_byHidOut.size(); ++id) {
    if (m_byHidOut[id] != nullptr && !seen[id])
      throw std::logic_error("dangling HopID " + std::to_string(id));
  }
}

} // namespace icnlowpan::stateful
