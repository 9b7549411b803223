#include "icnlowpan/lowpan/fragmentation.hpp"

#include <algorithm>

namespace icnlowpan::lowpan {

namespace {

constexpr uint8_t kFrag1Pattern = 0xC0;
constexpr uint8_t kFragNPattern = 0xE0;
constexpr uint8_t kFragMask = 0xF8;

} // namespace

bool
isFragmentHeader(uint8_t firstByte)
{
  uint8_t p = firstByte & kFragMask;
  return p == kFrag1Pattern || p == kFragNPattern;
}

void
FragHeader::appendTo(Bytes& out) const
{
  uint8_t pattern = kind == Kind::First ? kFrag1Pattern : kFragNPattern;
  out.push_back(static_cast<uint8_t>(pattern | ((datagramSize >> 8) & 0x07)));
  out.push_back(static_cast<uint8_t>(datagramSize));
  out.push_back(static_cast<uint8_t>(datagramTag >> 8));
  out.push_back(static_cast<uint8_t>(datagramTag));
  if (kind == Kind::Subsequent)
    out.push_back(offsetUnits8);
}

std::optional<FragHeader>
FragHeader::parse(ByteSpan in)
{
  if (in.empty() || !isFragmentHeader(in[0]))
    return std::nullopt;

  FragHeader h;
  h.kind = (in[0] & kFragMask) == kFrag1Pattern ? Kind::First : Kind::Subsequent;
  if (in.size() < h.size())
    throw Error(Errc::TruncatedFrame, "truncated fragment header");
  h.datagramSize = static_cast<uint16_t>((in[0] & 0x07) << 8 | in[1]);
  h.datagramTag = static_cast<uint16_t>(in[2] << 8 | in[3]);
  if (h.kind == Kind::Subsequent)
    h.offsetUnits8 = in[4];
  return h;
}

Bytes
LowpanFrame::serialize() const
{
  Bytes out;
  out.reserve((frag ? frag->size() : 0) + payload.size());
  if (frag)
    frag->appendTo(out);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

std::vector<LowpanFrame>
fragment(ByteSpan datagram, uint16_t tag, size_t linkMtu)
{
  if (datagram.size() > kMaxDatagramSize)
    throw Error(Errc::DatagramTooLarge, std::to_string(datagram.size()) +
                " bytes exceed the 11-bit datagram size");

  const size_t budget = linkMtu - kMacHeaderLen - kFcsLen;
  std::vector<LowpanFrame> frames;
  // a datagram opening with a fragment-header pattern would be misread on receipt
  if (datagram.size() <= budget && (datagram.empty() || !isFragmentHeader(datagram[0]))) {
    frames.push_back({std::nullopt, Bytes(datagram.begin(), datagram.end())});
    return frames;
  }

  const size_t firstChunk = (budget - kFrag1HeaderLen) / 8 * 8;
  const size_t nextChunk = (budget - kFragNHeaderLen) / 8 * 8;
  size_t offset = 0;
  while (offset < datagram.size()) {
    FragHeader h;
    h.datagramSize = static_cast<uint16_t>(datagram.size());
    h.datagramTag = tag;
    size_t chunk;
    if (offset == 0) {
      h.kind = FragHeader::Kind::First;
      chunk = firstChunk;
    }
    else {
      h.kind = FragHeader::Kind::Subsequent;
      h.offsetUnits8 = static_cast<uint8_t>(offset / 8);
      chunk = nextChunk;
    }
    chunk = std::min(chunk, datagram.size() - offset);
    auto part = datagram.subspan(offset, chunk);
    frames.push_back({h, Bytes(part.begin(), part.end())});
    offset += chunk;
  }
  return frames;
}

std::optional<Bytes>
ReassemblyBuffer::accept(uint32_t source, const FragHeader& header, ByteSpan payload, Time now)
{
  auto key = std::make_pair(source, header.datagramTag);
  auto it = m_partials.find(key);
  if (it == m_partials.end()) {
    Partial p;
    p.size = header.datagramSize;
    p.firstSeen = now;
    p.data.assign(header.datagramSize, 0);
    p.have.assign(header.datagramSize, false);
    it = m_partials.emplace(key, std::move(p)).first;
  }
  Partial& p = it->second;

  auto fail = [&] (Errc code, const std::string& why) {
    m_partials.erase(it);
    throw Error(code, why);
  };

  if (header.datagramSize != p.size)
    fail(Errc::SizeMismatch, "datagram size " + std::to_string(header.datagramSize) +
         " disagrees with " + std::to_string(p.size));
  size_t offset = header.offsetBytes();
  if (offset + payload.size() > p.size)
    fail(Errc::SizeMismatch, "fragment at " + std::to_string(offset) + "+" +
         std::to_string(payload.size()) + " overruns datagram of " + std::to_string(p.size));

  for (size_t i = 0; i < payload.size(); ++i) {
    if (p.have[offset + i] && p.data[offset + i] != payload[i])
      fail(Errc::OverlappingFragment, "conflicting bytes at offset " + std::to_string(offset + i));
  }
  for (size_t i = 0; i < payload.size(); ++i) {
    if (!p.have[offset + i]) {
      p.have[offset + i] = true;
      p.data[offset + i] = payload[i];
      ++p.received;
    }
  }

  if (p.received < p.size)
    return std::nullopt;
  Bytes datagram = std::move(p.data);
  m_partials.erase(it);
  return datagram;
}

size_t
ReassemblyBuffer::expire(Time now)
{
  return std::erase_if(m_partials, [&] (const auto& kv) {
    return now - kv.second.firstSeen >= m_timeout;
  });
}

Bytes
reassemble(std::span<const Bytes> fragments)
{
  ReassemblyBuffer buffer;
  std::optional<uint16_t> tag;
  for (const auto& frame : fragments) {
    auto header = FragHeader::parse(frame);
    if (!header) {
      if (fragments.size() == 1)
        return frame;
      throw Error(Errc::SizeMismatch, "unfragmented frame mixed into a fragment set");
    }
    if (tag && *tag != header->datagramTag)
      throw Error(Errc::SizeMismatch, "fragments carry different datagram tags");
    tag = header->datagramTag;
    auto done = buffer.accept(0, *header, ByteSpan(frame).subspan(header->size()), {});
    if (done)
      return *done;
  }
  throw Error(Errc::ReassemblyTimeout, "fragment set is incomplete");
}

} // namespace icnlowpan::lowpan
