#include "icnlowpan/lowpan/dispatch.hpp"

#include <ostream>

namespace icnlowpan::lowpan {

std::string_view
dispatchName(IcnDispatch d)
{
  switch (d) {
    case IcnDispatch::UncompressedInterest: return "uncompressed-interest";
    case IcnDispatch::UncompressedData: return "uncompressed-data";
    case IcnDispatch::CompressedInterest: return "compressed-interest";
    case IcnDispatch::CompressedData: return "compressed-data";
  }
  return "?";
}

Bytes
frameEncapsulate(const DispatchChain& chain, ByteSpan body)
{
  if (chain.page != kIcnlowpanPage)
    throw Error(Errc::InvalidChain, "ICNLoWPAN dispatches live in page 2, not page " +
                std::to_string(chain.page));
  if (chain.hopId && *chain.hopId == 0)
    throw Error(Errc::InvalidChain, "HopID 0 is reserved");

  uint8_t dispatch = static_cast<uint8_t>(chain.dispatch);
  if (!chain.cids.empty())
    dispatch |= kDispatchCidFlag;
  if (chain.hopId)
    dispatch |= kDispatchHopIdFlag;

  Bytes out;
  out.reserve(chain.size() + body.size());
  out.push_back(pageSwitchByte(chain.page));
  out.push_back(dispatch);
  for (size_t i = 0; i < chain.cids.size(); ++i) {
    uint8_t cid = chain.cids[i];
    if (cid > kMaxContextId)
      throw Error(Errc::InvalidChain, "context id " + std::to_string(cid) + " exceeds 7 bits");
    out.push_back(i + 1 < chain.cids.size() ? static_cast<uint8_t>(cid | kCidChainBit) : cid);
  }
  if (chain.hopId)
    out.push_back(*chain.hopId);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::ostream&
operator<<(std::ostream& os, IcnDispatch d)
{
  return os << dispatchName(d);
}

namespace {

class Cursor
{
public:
  explicit
  Cursor(ByteSpan in)
    : m_in(in)
  {
  }

  bool
  atEnd() const
  {
    return m_pos >= m_in.size();
  }

  uint8_t
  peek() const
  {
    if (atEnd())
      throw Error(Errc::TruncatedFrame, "frame ends at offset " + std::to_string(m_pos));
    return m_in[m_pos];
  }

  uint8_t
  next()
  {
    uint8_t b = peek();
    ++m_pos;
    return b;
  }

  void
  skip(size_t n, const char* what)
  {
    if (m_in.size() - m_pos < n)
      throw Error(Errc::TruncatedFrame, std::string("truncated ") + what);
    m_pos += n;
  }

  ByteSpan
  rest() const
  {
    return m_in.subspan(m_pos);
  }

private:
  ByteSpan m_in;
  size_t m_pos = 0;
};

constexpr uint8_t kLowpanBc0 = 0x50;

/// Skips page-0 RFC 4944 headers that carry no ICNLoWPAN meaning.
void
skipRfc4944Headers(Cursor& cur)
{
  while (true) {
    uint8_t b = cur.peek();
    if ((b & 0xC0) == 0x80) {
      // mesh header: 10 V F HopsLeft, then originator and final addresses
      cur.next();
      size_t origin = (b & 0x20) ? 2 : 8;
      size_t final = (b & 0x10) ? 2 : 8;
      cur.skip(origin + final, "mesh header");
    }
    else if (b == kLowpanBc0) {
      cur.next();
      cur.skip(1, "broadcast header");
    }
    else {
      return;
    }
  }
}

} // namespace

ParsedFrame
parseFrame(ByteSpan frame)
{
  Cursor cur(frame);
  skipRfc4944Headers(cur);

  uint8_t b = cur.next();
  if ((b & 0xC0) == 0x00 || (b & 0xC0) == 0x40)
    throw Error(Errc::NotIcnlowpan, "page-0 dispatch " + toHex(std::span(&b, 1)));
  if ((b & 0xF8) == 0xC0 || (b & 0xF8) == 0xE0)
    throw Error(Errc::UnknownDispatch, "fragment header in a complete datagram");
  if ((b & kPageSwitchMask) != kPageSwitchMask)
    throw Error(Errc::UnknownDispatch, "unexpected dispatch " + toHex(std::span(&b, 1)));

  uint8_t page = b & 0x0F;
  if (page == 0 || page == 1)
    throw Error(Errc::NotIcnlowpan, "page switch to 6LoWPAN page " + std::to_string(page));
  if (page != kIcnlowpanPage)
    throw Error(Errc::UnknownDispatch, "unassigned page " + std::to_string(page));

  uint8_t d = cur.next();
  if ((d & kPageSwitchMask) == kPageSwitchMask && (d & 0x0F) <= 1)
    throw Error(Errc::NotIcnlowpan, "switch back to 6LoWPAN page " + std::to_string(d & 0x0F));
  if ((d & kDispatchFixedMask) != kDispatchFixedBits)
    throw Error(Errc::UnknownDispatch, "unknown page-2 dispatch " + toHex(std::span(&d, 1)));

  ParsedFrame out;
  out.chain.page = page;
  out.chain.dispatch = static_cast<IcnDispatch>(d & 0x83);
  if (d & kDispatchCidFlag) {
    uint8_t cid;
    do {
      cid = cur.next();
      out.chain.cids.push_back(cid & kMaxContextId);
    } while (cid & kCidChainBit);
  }
  if (d & kDispatchHopIdFlag) {
    uint8_t hop = cur.next();
    if (hop == 0)
      throw Error(Errc::InvalidChain, "HopID 0 is reserved");
    out.chain.hopId = hop;
  }
  auto rest = cur.rest();
  out.body.assign(rest.begin(), rest.end());
  return out;
}

} // namespace icnlowpan::lowpan
