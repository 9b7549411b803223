#ifndef ICNLOWPAN_NDN_NAME_HPP
#define ICNLOWPAN_NDN_NAME_HPP

#include "icnlowpan/common.hpp"

#include <compare>
#include <initializer_list>

namespace icnlowpan::ndn {

using Component = Bytes;

/** \brief Hierarchical NDN name: an ordered list of opaque byte-string components.
 *
 *  Only GenericNameComponent is modelled. Ordering is component-wise
 *  lexicographic, which is enough to key PIT and CID maps.
 */
class Name
{
public:
  Name() = default;

  explicit
  Name(std::vector<Component> components)
    : m_components(std::move(components))
  {
  }

  /// Builds a name from text components, e.g. {"org", "example"}.
  Name(std::initializer_list<std::string_view> components);

  /** \brief Parses "/a/b/c". Percent-escapes (%XX) are decoded.
   *  \throw std::invalid_argument on a malformed escape or missing leading slash
   */
  static Name
  fromUri(std::string_view uri);

  std::string
  toUri() const;

  /// |c|, the number of components.
  size_t
  size() const
  {
    return m_components.size();
  }

  bool
  empty() const
  {
    return m_components.empty();
  }

  const Component&
  operator[](size_t i) const
  {
    return m_components[i];
  }

  const std::vector<Component>&
  components() const
  {
    return m_components;
  }

  Name&
  append(Component c)
  {
    m_components.push_back(std::move(c));
    return *this;
  }

  Name&
  append(std::string_view text)
  {
    return append(toBytes(text));
  }

  Name&
  append(const Name& suffix);

  /// First \p n components (n is clamped to size()).
  Name
  getPrefix(size_t n) const;

  /// Components from \p pos to the end.
  Name
  getSubName(size_t pos) const;

  bool
  isPrefixOf(const Name& other) const;

  /// Sum of component byte lengths.
  size_t
  valueBytes() const;

  friend bool operator==(const Name&, const Name&) = default;
  friend std::strong_ordering operator<=>(const Name&, const Name&) = default;

private:
  std::vector<Component> m_components;
};

/// Encodes the Name TLV, including its outer TYPE and LENGTH.
Bytes
encodeName(const Name& name);

void
appendName(Bytes& out, const Name& name);

/// Decodes the value of a Name TLV (the outer header already stripped).
Name
decodeNameValue(ByteSpan value);

/// Decodes a complete Name TLV; the buffer must contain nothing else.
Name
decodeName(ByteSpan wire);

/** \brief TLV overhead of an uncompressed name: 2 + 2|c|.
 *
 *  Only valid when every header fits in one octet.
 *  \throw Error(OverheadAssumptionViolated) if a component or the name value
 *         reaches 253 octets
 */
size_t
nameTlvOverheadUncompressed(const Name& name);

} // namespace icnlowpan::ndn

#endif // ICNLOWPAN_NDN_NAME_HPP
