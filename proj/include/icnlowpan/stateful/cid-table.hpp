#ifndef ICNLOWPAN_STATEFUL_CID_TABLE_HPP
#define ICNLOWPAN_STATEFUL_CID_TABLE_HPP

#include "icnlowpan/ndn/name.hpp"

#include <iosfwd>
#include <map>
#include <optional>

namespace icnlowpan::stateful {

using ContextId = uint8_t;

/** \brief LoWPAN-wide context table: ContextId (0..127) <-> name prefix.
 *
 *  Injective in both directions. Loaded once at start-up; there is no
 *  runtime negotiation.
 */
class CidTable
{
public:
  /// \throw Error(ConfigError) on a duplicate id or prefix, id > 127, or empty prefix
  void
  insert(ContextId id, ndn::Name prefix);

  const ndn::Name*
  find(ContextId id) const;

  std::optional<ContextId>
  findId(const ndn::Name& prefix) const;

  struct Match
  {
    ContextId id;
    size_t length;
  };

  /// Longest table prefix of \p name.
  std::optional<Match>
  longestMatch(const ndn::Name& name) const;

  size_t
  size() const
  {
    return m_byId.size();
  }

  bool
  empty() const
  {
    return m_byId.empty();
  }

  const std::map<ContextId, ndn::Name>&
  entries() const
  {
    return m_byId;
  }

  /** \brief Reads `cid <id> <uri>` lines; '#' starts a comment.
   *  \throw Error(ConfigError) with the offending line number
   */
  static CidTable
  parse(std::istream& is);

  /// \throw Error(IoError) if the file cannot be opened
  static CidTable
  loadFile(const std::string& path);

  /// The two contexts of the evaluation: 0 -> /org, 1 -> the Name_long prefix.
  static CidTable
  defaults();

private:
  std::map<ContextId, ndn::Name> m_byId;
  std::map<ndn::Name, ContextId> m_byPrefix;
};

struct CidCompressed
{
  std::vector<ContextId> cids;
  ndn::Name residual;
};

/// Elides the longest matching prefix. No match yields ({}, name).
CidCompressed
cidCompress(const ndn::Name& name, const CidTable& table);

/// Concatenation of the prefixes for \p cids, in chain order.
/// \throw Error(UnknownCid)
ndn::Name
cidPrefix(std::span<const ContextId> cids, const CidTable& table);

/// prefix(cids) followed by \p residual. \throw Error(UnknownCid)
ndn::Name
cidDecompress(std::span<const ContextId> cids, const ndn::Name& residual, const CidTable& table);

} // namespace icnlowpan::stateful

#endif // ICNLOWPAN_STATEFUL_CID_TABLE_HPP
