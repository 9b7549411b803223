#include "icnlowpan/ndn/name.hpp"
#include "icnlowpan/ndn/tlv.hpp"

#include <algorithm>
#include <cctype>

namespace icnlowpan::ndn {

Name::Name(std::initializer_list<std::string_view> components)
{
  m_components.reserve(components.size());
  for (auto c : components)
    m_components.push_back(toBytes(c));
}

namespace {

bool
isUnreserved(uint8_t c)
{
  return std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~';
}

int
hexNibble(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  return -1;
}

} // namespace

Name
Name::fromUri(std::string_view uri)
{
  if (uri.empty() || uri.front() != '/')
    throw std::invalid_argument("name URI must start with '/': " + std::string(uri));

  Name name;
  uri.remove_prefix(1);
  if (uri.empty())
    return name;
  // a trailing slash does not add an empty component
  if (uri.back() == '/')
    uri.remove_suffix(1);

  while (true) {
    size_t slash = uri.find('/');
    std::string_view text = uri.substr(0, slash);
    Component c;
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '%') {
        int hi = i + 1 < text.size() ? hexNibble(text[i + 1]) : -1;
        int lo = i + 2 < text.size() ? hexNibble(text[i + 2]) : -1;
        if (hi < 0 || lo < 0)
          throw std::invalid_argument("bad percent-escape in " + std::string(text));
        c.push_back(static_cast<uint8_t>(hi << 4 | lo));
        i += 2;
      }
      else {
        c.push_back(static_cast<uint8_t>(text[i]));
      }
    }
    name.append(std::move(c));
    if (slash == std::string_view::npos)
      break;
    uri.remove_prefix(slash + 1);
  }
  return name;
}

std::string
Name::toUri() const
{
  if (m_components.empty())
    return "/";

  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out;
  for (const auto& c : m_components) {
    out.push_back('/');
    for (uint8_t b : c) {
      if (isUnreserved(b)) {
        out.push_back(static_cast<char>(b));
      }
      else {
        out.push_back('%');
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0F]);
      }
    }
  }
  return out;
}

Name&
Name::append(const Name& suffix)
{
  m_components.insert(m_components.end(), suffix.m_components.begin(), suffix.m_components.end());
  return *this;
}

Name
Name::getPrefix(size_t n) const
{
  n = std::min(n, m_components.size());
  return Name(std::vector<Component>(m_components.begin(), m_components.begin() + n));
}

Name
Name::getSubName(size_t pos) const
{
  pos = std::min(pos, m_components.size());
  return Name(std::vector<Component>(m_components.begin() + pos, m_components.end()));
}

bool
Name::isPrefixOf(const Name& other) const
{
  return size() <= other.size() &&
         std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

size_t
Name::valueBytes() const
{
  size_t total = 0;
  for (const auto& c : m_components)
    total += c.size();
  return total;
}

void
appendName(Bytes& out, const Name& name)
{
  Bytes value;
  for (const auto& c : name.components())
    appendTlv(value, tlv::GenericNameComponent, c);
  appendTlv(out, tlv::Name, value);
}

Bytes
encodeName(const Name& name)
{
  Bytes out;
  appendName(out, name);
  return out;
}

Name
decodeNameValue(ByteSpan value)
{
  Name name;
  TlvReader reader(value);
  while (!reader.atEnd()) {
    auto e = reader.read();
    if (e.type != tlv::GenericNameComponent)
      throw Error(Errc::MalformedTlv, "unsupported name component type " + std::to_string(e.type));
    name.append(Component(e.value.begin(), e.value.end()));
  }
  return name;
}

Name
decodeName(ByteSpan wire)
{
  TlvReader reader(wire);
  auto e = reader.read();
  if (e.type != tlv::Name)
    throw Error(Errc::MalformedTlv, "expected Name TLV, got type " + std::to_string(e.type));
  if (!reader.atEnd())
    throw Error(Errc::MalformedTlv, "trailing bytes after Name TLV");
  return decodeNameValue(e.value);
}

size_t
nameTlvOverheadUncompressed(const Name& name)
{
  size_t valueLength = 0;
  for (const auto& c : name.components()) {
    if (c.size() >= 253)
      throw Error(Errc::OverheadAssumptionViolated,
                  "component of " + std::to_string(c.size()) + " bytes needs a multi-byte length");
    valueLength += 2 + c.size();
  }
  if (valueLength >= 253)
    throw Error(Errc::OverheadAssumptionViolated,
                "name value of " + std::to_string(valueLength) + " bytes needs a multi-byte length");
  return 2 + 2 * name.size();
}

} // namespace icnlowpan::ndn
