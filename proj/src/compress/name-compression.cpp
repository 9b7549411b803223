#include "icnlowpan/compress/name-compression.hpp"

namespace icnlowpan::compress {

bool
isCompressible(const ndn::Name& name)
{
  for (const auto& c : name.components()) {
    if (c.empty() || c.size() > kMaxCompressedComponent)
      return false;
  }
  return true;
}

size_t
compressedNameSize(const ndn::Name& name)
{
  return compressedNameOverhead(name.size()) + name.valueBytes();
}

void
appendCompressedName(Bytes& out, const ndn::Name& name)
{
  for (size_t i = 0; i < name.size(); ++i) {
    const auto& c = name[i];
    if (c.empty())
      throw Error(Errc::EmptyComponent, "component " + std::to_string(i) + " is empty");
    if (c.size() > kMaxCompressedComponent)
      throw Error(Errc::ComponentTooLong, "component " + std::to_string(i) + " has " +
                  std::to_string(c.size()) + " bytes");
  }

  size_t i = 0;
  for (; i + 1 < name.size(); i += 2) {
    out.push_back(static_cast<uint8_t>(name[i].size() << 4 | name[i + 1].size()));
    out.insert(out.end(), name[i].begin(), name[i].end());
    out.insert(out.end(), name[i + 1].begin(), name[i + 1].end());
  }
  if (i < name.size()) {
    out.push_back(static_cast<uint8_t>(name[i].size() << 4 | kStopNibble));
    out.insert(out.end(), name[i].begin(), name[i].end());
  }
  else {
    out.push_back(kStopNibble);
  }
}

CompressedName
compressName(const ndn::Name& name)
{
  CompressedName c;
  c.bytes.reserve(compressedNameSize(name));
  appendCompressedName(c.bytes, name);
  return c;
}

ndn::Name
decompressNamePrefix(ByteSpan in, size_t& consumed)
{
  ndn::Name name;
  size_t pos = 0;

  auto take = [&] (size_t len) {
    if (in.size() - pos < len)
      throw Error(Errc::MalformedCompressedName, "component truncated at offset " + std::to_string(pos));
    name.append(ndn::Component(in.begin() + pos, in.begin() + pos + len));
    pos += len;
  };

  while (true) {
    if (pos >= in.size())
      throw Error(Errc::MalformedCompressedName, "missing stop marker");
    uint8_t lengths = in[pos++];
    size_t first = lengths >> 4;
    size_t second = lengths & 0x0F;
    if (first == kStopNibble) {
      if (second != kStopNibble)
        throw Error(Errc::MalformedCompressedName, "length after stop nibble");
      break;
    }
    take(first);
    if (second == kStopNibble)
      break;
    take(second);
  }
  consumed = pos;
  return name;
}

ndn::Name
decompressName(const CompressedName& c)
{
  size_t consumed = 0;
  ndn::Name name = decompressNamePrefix(c.bytes, consumed);
  if (consumed != c.bytes.size())
    throw Error(Errc::MalformedCompressedName, "trailing bytes after stop marker");
  return name;
}

} // namespace icnlowpan::compress
