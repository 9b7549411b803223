#include "icnlowpan/compress/stateless.hpp"
#include "icnlowpan/ndn/tlv.hpp"

namespace icnlowpan::compress {

using ndn::TlvReader;

namespace {

/// Bounds-checked reader that reports failures under one error code.
class BodyReader
{
public:
  BodyReader(ByteSpan in, Errc code)
    : m_in(in)
    , m_code(code)
  {
  }

  [[noreturn]] void
  fail(const std::string& why) const
  {
    throw Error(m_code, why);
  }

  bool
  atEnd() const
  {
    return m_pos == m_in.size();
  }

  size_t
  remaining() const
  {
    return m_in.size() - m_pos;
  }

  uint8_t
  byte(const char* what)
  {
    if (atEnd())
      fail(std::string("missing ") + what);
    return m_in[m_pos++];
  }

  ByteSpan
  take(size_t n, const char* what)
  {
    if (remaining() < n)
      fail(std::string("truncated ") + what);
    auto s = m_in.subspan(m_pos, n);
    m_pos += n;
    return s;
  }

  uint64_t
  varNumber(const char* what)
  {
    TlvReader r(m_in.subspan(m_pos));
    try {
      uint64_t n = r.readVarNumber();
      m_pos += r.position();
      return n;
    }
    catch (const Error&) {
      fail(std::string("truncated ") + what);
    }
  }

  ndn::Name
  name(bool fallback)
  {
    try {
      if (fallback) {
        TlvReader r(m_in.subspan(m_pos));
        auto e = r.read();
        if (e.type != ndn::tlv::Name)
          fail("fallback name is not a Name TLV");
        m_pos += r.position();
        return ndn::decodeNameValue(e.value);
      }
      size_t consumed = 0;
      auto n = decompressNamePrefix(m_in.subspan(m_pos), consumed);
      m_pos += consumed;
      return n;
    }
    catch (const Error& e) {
      if (e.code() == m_code)
        throw;
      fail(std::string("bad name: ") + e.what());
    }
  }

  std::vector<ndn::OpaqueTlv>
  passThrough(bool (*allowed)(uint32_t))
  {
    std::vector<ndn::OpaqueTlv> out;
    try {
      TlvReader r(m_in.subspan(m_pos));
      while (!r.atEnd()) {
        auto e = r.read();
        if (!allowed(e.type))
          fail("type " + std::to_string(e.type) + " cannot be passed through");
        out.push_back({e.type, Bytes(e.value.begin(), e.value.end())});
      }
      m_pos = m_in.size();
    }
    catch (const Error& e) {
      if (e.code() == m_code)
        throw;
      fail(std::string("bad pass-through TLV: ") + e.what());
    }
    if (out.empty())
      fail("extension bit set without pass-through TLVs");
    return out;
  }

private:
  ByteSpan m_in;
  Errc m_code;
  size_t m_pos = 0;
};

ndn::Name
residualOf(const ndn::Name& name, size_t elided)
{
  if (elided > name.size())
    throw std::invalid_argument("elided prefix longer than the name");
  return name.getSubName(elided);
}

void
appendResidual(Bytes& out, const ndn::Name& residual, bool fallback)
{
  if (fallback)
    ndn::appendName(out, residual);
  else
    appendCompressedName(out, residual);
}

void
appendPassThrough(Bytes& out, const std::vector<ndn::OpaqueTlv>& extra)
{
  for (const auto& e : extra)
    ndn::appendTlv(out, e.type, e.value);
}

} // namespace

Bytes
compressInterest(const ndn::Interest& interest, const CompressOptions& opts)
{
  using namespace interest_bits;
  ndn::Name residual = residualOf(interest.name, opts.elidedPrefix);
  bool fallback = !residual.empty() && !isCompressible(residual);
  bool customLifetime = interest.lifetimeMs != kDefaultInterestLifetimeMs;

  uint8_t bits = 0;
  if (interest.nonce)
    bits |= Nonce;
  if (customLifetime)
    bits |= Lifetime;
  if (opts.hopId)
    bits |= HopId;
  if (opts.cidChain)
    bits |= CidChain;
  if (!residual.empty())
    bits |= NamePresent;
  if (fallback)
    bits |= NameFallback;
  if (!interest.extra.empty())
    bits |= Extensions;

  Bytes out;
  out.push_back(bits);
  if (!residual.empty())
    appendResidual(out, residual, fallback);
  if (interest.nonce)
    out.insert(out.end(), interest.nonce->begin(), interest.nonce->end());
  if (customLifetime) {
    // length octet 0 encodes an absent lifetime
    if (interest.lifetimeMs) {
      out.push_back(static_cast<uint8_t>(ndn::sizeofNonNegativeInteger(*interest.lifetimeMs)));
      ndn::appendNonNegativeInteger(out, *interest.lifetimeMs);
    }
    else {
      out.push_back(0);
    }
  }
  appendPassThrough(out, interest.extra);
  return out;
}

DecompressedInterest
decompressInterest(ByteSpan body, const ndn::Name& prefix)
{
  using namespace interest_bits;
  BodyReader in(body, Errc::MalformedCompressedInterest);
  DecompressedInterest out;
  uint8_t bits = out.bits = in.byte("presence bitfield");
  if (bits & Reserved)
    in.fail("reserved bit set");
  if ((bits & NameFallback) && !(bits & NamePresent))
    in.fail("name fallback without a name");

  ndn::Interest& interest = out.interest;
  interest.name = prefix;
  if (bits & NamePresent) {
    auto residual = in.name(bits & NameFallback);
    if (residual.empty())
      in.fail("name present but empty");
    interest.name.append(residual);
  }
  if (bits & Nonce) {
    auto n = in.take(4, "nonce");
    ndn::Nonce nonce;
    std::copy(n.begin(), n.end(), nonce.begin());
    interest.nonce = nonce;
  }
  if (bits & Lifetime) {
    uint8_t len = in.byte("lifetime length");
    if (len != 0) {
      auto v = in.take(len, "lifetime");
      try {
        interest.lifetimeMs = ndn::readNonNegativeInteger(v);
      }
      catch (const Error&) {
        in.fail("lifetime of invalid length");
      }
      if (interest.lifetimeMs == kDefaultInterestLifetimeMs)
        in.fail("default lifetime must be elided");
    }
  }
  else {
    interest.lifetimeMs = kDefaultInterestLifetimeMs;
  }
  if (bits & Extensions)
    interest.extra = in.passThrough(&ndn::isInterestPassThrough);
  if (!in.atEnd())
    in.fail("trailing bytes");
  return out;
}

Bytes
compressData(const ndn::Data& data, const CompressOptions& opts)
{
  using namespace data_bits;
  ndn::Name residual = residualOf(data.name, opts.elidedPrefix);
  bool fallback = !residual.empty() && !isCompressible(residual);

  uint8_t bits = 0;
  if (data.freshnessMs)
    bits |= Freshness;
  if (!data.content.empty())
    bits |= Content;
  if (!data.sigInfo.empty())
    bits |= SigInfo;
  if (!data.sigValue.empty())
    bits |= SigValue;
  if (opts.hopId)
    bits |= HopId;
  if (!residual.empty())
    bits |= NamePresent;
  if (fallback)
    bits |= NameFallback;
  if (!data.extra.empty())
    bits |= Extensions;

  const Bytes* fields[] = {&data.content, &data.sigInfo, &data.sigValue};
  const Bytes* last = nullptr;
  if (data.extra.empty()) {
    for (const Bytes* f : fields) {
      if (!f->empty())
        last = f;
    }
  }

  Bytes out;
  out.push_back(bits);
  if (!residual.empty())
    appendResidual(out, residual, fallback);
  if (data.freshnessMs)
    ndn::appendVarNumber(out, *data.freshnessMs);
  for (const Bytes* f : fields) {
    if (f->empty())
      continue;
    if (f != last)
      ndn::appendVarNumber(out, f->size());
    out.insert(out.end(), f->begin(), f->end());
  }
  appendPassThrough(out, data.extra);
  return out;
}

DecompressedData
decompressData(ByteSpan body, const ndn::Name& prefix)
{
  using namespace data_bits;
  BodyReader in(body, Errc::MalformedCompressedData);
  DecompressedData out;
  uint8_t bits = out.bits = in.byte("presence bitfield");
  if ((bits & NameFallback) && !(bits & NamePresent))
    in.fail("name fallback without a name");

  ndn::Data& data = out.data;
  data.name = prefix;
  if (bits & NamePresent) {
    auto residual = in.name(bits & NameFallback);
    if (residual.empty())
      in.fail("name present but empty");
    data.name.append(residual);
  }
  if (bits & Freshness)
    data.freshnessMs = in.varNumber("freshness");

  std::pair<uint8_t, Bytes*> fields[] = {
    {Content, &data.content}, {SigInfo, &data.sigInfo}, {SigValue, &data.sigValue}};
  uint8_t lastBit = 0;
  if (!(bits & Extensions)) {
    for (auto [bit, _] : fields) {
      if (bits & bit)
        lastBit = bit;
    }
  }
  for (auto [bit, field] : fields) {
    if (!(bits & bit))
      continue;
    size_t len = bit == lastBit ? in.remaining() : in.varNumber("field length");
    if (len == 0)
      in.fail("present field is empty");
    auto v = in.take(len, "field");
    field->assign(v.begin(), v.end());
  }
  if (bits & Extensions)
    data.extra = in.passThrough(&ndn::isDataPassThrough);
  if (!in.atEnd())
    in.fail("trailing bytes");
  return out;
}

} // namespace icnlowpan::compress
