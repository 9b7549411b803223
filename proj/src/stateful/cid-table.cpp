#include "icnlowpan/stateful/cid-table.hpp"
#include "icnlowpan/lowpan/dispatch.hpp"

#include <fstream>
#include <sstream>

namespace icnlowpan::stateful {

void
CidTable::insert(ContextId id, ndn::Name prefix)
{
  if (id > lowpan::kMaxContextId)
    throw Error(Errc::ConfigError, "context id " + std::to_string(id) + " exceeds 127");
  if (prefix.empty())
    throw Error(Errc::ConfigError, "context id " + std::to_string(id) + " maps the empty name");
  if (m_byId.count(id))
    throw Error(Errc::ConfigError, "duplicate context id " + std::to_string(id));
  if (m_byPrefix.count(prefix))
    throw Error(Errc::ConfigError, "prefix " + prefix.toUri() + " already has a context id");
  m_byPrefix.emplace(prefix, id);
  m_byId.emplace(id, std::move(prefix));
}

const ndn::Name*
CidTable::find(ContextId id) const
{
  auto it = m_byId.find(id);
  return it == m_byId.end() ? nullptr : &it->second;
}

std::optional<ContextId>
CidTable::findId(const ndn::Name& prefix) const
{
  auto it = m_byPrefix.find(prefix);
  if (it == m_byPrefix.end())
    return std::nullopt;
  return it->second;
}

std::optional<CidTable::Match>
CidTable::longestMatch(const ndn::Name& name) const
{
  for (size_t len = name.size(); len > 0; --len) {
    if (auto id = findId(name.getPrefix(len)))
      return Match{*id, len};
  }
  return std::nullopt;
}

CidTable
CidTable::parse(std::istream& is)
{
  CidTable table;
  std::string line;
  for (size_t lineNo = 1; std::getline(is, line); ++lineNo) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword))
      continue;

    auto fail = [lineNo] (const std::string& why) {
      return Error(Errc::ConfigError, "line " + std::to_string(lineNo) + ": " + why);
    };
    if (keyword != "cid")
      throw fail("unknown directive '" + keyword + "'");

    int id = -1;
    std::string uri, extra;
    if (!(fields >> id >> uri))
      throw fail("expected 'cid <id> <uri>'");
    if (fields >> extra)
      throw fail("unexpected '" + extra + "'");
    if (id < 0 || id > lowpan::kMaxContextId)
      throw fail("context id out of range 0..127");

    ndn::Name prefix;
    try {
      prefix = ndn::Name::fromUri(uri);
    }
    catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    try {
      table.insert(static_cast<ContextId>(id), std::move(prefix));
    }
    catch (const Error& e) {
      throw fail(e.what());
    }
  }
  return table;
}

CidTable
CidTable::loadFile(const std::string& path)
{
  std::ifstream is(path);
  if (!is)
    throw Error(Errc::IoError, "cannot open " + path);
  return parse(is);
}

CidTable
CidTable::defaults()
{
  CidTable table;
  table.insert(0, ndn::Name{"org"});
  table.insert(1, ndn::Name{"org", "example", "building", "1", "floor", "4", "room", "481"});
  return table;
}

CidCompressed
cidCompress(const ndn::Name& name, const CidTable& table)
{
  auto match = table.longestMatch(name);
  if (!match)
    return {{}, name};
  return {{match->id}, name.getSubName(match->length)};
}

ndn::Name
cidPrefix(std::span<const ContextId> cids, const CidTable& table)
{
  ndn::Name prefix;
  for (ContextId id : cids) {
    const ndn::Name* p = table.find(id);
    if (p == nullptr)
      throw Error(Errc::UnknownCid, "context id " + std::to_string(id) + " is not configured");
    prefix.append(*p);
  }
  return prefix;
}

ndn::Name
cidDecompress(std::span<const ContextId> cids, const ndn::Name& residual, const CidTable& table)
{
  return cidPrefix(cids, table).append(residual);
}

} // namespace icnlowpan::stateful
