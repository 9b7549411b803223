#include "icnlowpan/stateful/packet-codec.hpp"

#include <ostream>

namespace icnlowpan::stateful {

using lowpan::DispatchChain;
using lowpan::IcnDispatch;

std::string_view
schemeName(Scheme s)
{
  switch (s) {
    case Scheme::EnRoute: return "en-route";
    case Scheme::Cid: return "cid";
    case Scheme::Stateless: return "stateless";
    case Scheme::Uncompressed: return "uncompressed";
  }
  return "?";
}

std::ostream&
operator<<(std::ostream& os, Scheme s)
{
  return os << schemeName(s);
}

namespace {

EncodedFrame
makeFrame(DispatchChain chain, Bytes body, Scheme scheme, bool fallback)
{
  EncodedFrame f;
  f.datagram = lowpan::frameEncapsulate(chain, body);
  f.chain = std::move(chain);
  f.scheme = scheme;
  f.nameFallback = fallback;
  f.bodySize = body.size();
  return f;
}

/// CID elision of \p name, if a table is configured and matches.
CidCompressed
elideWithCid(const ndn::Name& name, const CidTable* table)
{
  if (table == nullptr || table->empty())
    return {{}, name};
  return cidCompress(name, *table);
}

bool
needsFallback(const ndn::Name& residual)
{
  return !residual.empty() && !compress::isCompressible(residual);
}

} // namespace

EncodedFrame
encodeInterest(const ndn::Interest& interest, const EncodeParams& params)
{
  DispatchChain plain{lowpan::kIcnlowpanPage, IcnDispatch::UncompressedInterest, {}, params.hopId};
  EncodedFrame uncompressed = makeFrame(plain, ndn::encodeInterest(interest), Scheme::Uncompressed, false);
  if (!params.compress)
    return uncompressed;

  auto [cids, residual] = elideWithCid(interest.name, params.cids);
  compress::CompressOptions opts;
  opts.elidedPrefix = interest.name.size() - residual.size();
  opts.hopId = params.hopId.has_value();
  opts.cidChain = !cids.empty();

  DispatchChain chain{lowpan::kIcnlowpanPage, IcnDispatch::CompressedInterest, cids, params.hopId};
  EncodedFrame compressed = makeFrame(std::move(chain), compress::compressInterest(interest, opts),
                                      cids.empty() ? Scheme::Stateless : Scheme::Cid,
                                      needsFallback(residual));
  if (compressed.datagram.size() > uncompressed.datagram.size())
    return uncompressed;
  return compressed;
}

EncodedFrame
encodeData(const ndn::Data& data, const EncodeParams& params)
{
  DispatchChain plain{lowpan::kIcnlowpanPage, IcnDispatch::UncompressedData, {}, std::nullopt};
  EncodedFrame uncompressed = makeFrame(plain, ndn::encodeData(data), Scheme::Uncompressed, false);
  if (!params.compress)
    return uncompressed;

  compress::CompressOptions opts;
  DispatchChain chain{lowpan::kIcnlowpanPage, IcnDispatch::CompressedData, {}, std::nullopt};
  Scheme scheme;
  ndn::Name residual;
  if (params.hopId && params.enRouteName != nullptr && params.enRouteName->isPrefixOf(data.name)) {
    opts.elidedPrefix = params.enRouteName->size();
    opts.hopId = true;
    chain.hopId = params.hopId;
    scheme = Scheme::EnRoute;
    residual = data.name.getSubName(opts.elidedPrefix);
  }
  else {
    auto elided = elideWithCid(data.name, params.cids);
    opts.elidedPrefix = data.name.size() - elided.residual.size();
    opts.cidChain = !elided.cids.empty();
    chain.cids = std::move(elided.cids);
    scheme = chain.cids.empty() ? Scheme::Stateless : Scheme::Cid;
    residual = std::move(elided.residual);
  }

  EncodedFrame compressed = makeFrame(std::move(chain), compress::compressData(data, opts), scheme,
                                      needsFallback(residual));
  if (compressed.datagram.size() > uncompressed.datagram.size())
    return uncompressed;
  return compressed;
}

DecodedFrame
decodeFrame(ByteSpan datagram, const CidTable& cids, const HopIdResolver& resolve)
{
  auto parsed = lowpan::parseFrame(datagram);
  DecodedFrame out;
  out.chain = parsed.chain;
  out.bodySize = parsed.body.size();
  const DispatchChain& chain = parsed.chain;

  if (!lowpan::isCompressed(chain.dispatch)) {
    if (!chain.cids.empty())
      throw Error(Errc::InvalidChain, "context ids on an uncompressed dispatch");
    if (lowpan::isInterest(chain.dispatch))
      out.packet = ndn::decodeInterest(parsed.body);
    else
      out.packet = ndn::decodeData(parsed.body);
    return out;
  }

  if (lowpan::isInterest(chain.dispatch)) {
    auto d = compress::decompressInterest(parsed.body, cidPrefix(chain.cids, cids));
    bool hopBit = d.bits & compress::interest_bits::HopId;
    bool cidBit = d.bits & compress::interest_bits::CidChain;
    if (hopBit != chain.hopId.has_value() || cidBit != !chain.cids.empty())
      throw Error(Errc::MalformedCompressedInterest, "presence bits disagree with the dispatch chain");
    out.nameFallback = d.nameFallback();
    out.packet = std::move(d.interest);
    return out;
  }

  ndn::Name prefix;
  if (chain.hopId) {
    if (!chain.cids.empty())
      throw Error(Errc::InvalidChain, "Data carries both a HopID and context ids");
    const ndn::Name* name = resolve ? resolve(*chain.hopId) : nullptr;
    if (name == nullptr)
      throw Error(Errc::UnknownHopId, "HopID " + std::to_string(*chain.hopId) + " has no PIT entry");
    prefix = *name;
  }
  else {
    prefix = cidPrefix(chain.cids, cids);
  }
  auto d = compress::decompressData(parsed.body, prefix);
  if (static_cast<bool>(d.bits & compress::data_bits::HopId) != chain.hopId.has_value())
    throw Error(Errc::MalformedCompressedData, "HopID bit disagrees with the dispatch chain");
  out.nameFallback = d.nameFallback();
  out.packet = std::move(d.data);
  return out;
}

} // namespace icnlowpan::stateful
