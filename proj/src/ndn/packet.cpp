#include "icnlowpan/ndn/packet.hpp"
#include "icnlowpan/ndn/tlv.hpp"

namespace icnlowpan::ndn {

bool
isInterestPassThrough(uint32_t type)
{
  switch (type) {
    case tlv::CanBePrefix:
    case tlv::MustBeFresh:
    case tlv::ForwardingHint:
    case tlv::HopLimit:
    case tlv::ApplicationParameters:
    case tlv::InterestSignatureInfo:
    case tlv::InterestSignatureValue:
      return true;
    default:
      return !tlv::isCritical(type);
  }
}

bool
isDataPassThrough(uint32_t type)
{
  switch (type) {
    case tlv::Name:
    case tlv::MetaInfo:
    case tlv::Content:
    case tlv::SignatureInfo:
    case tlv::SignatureValue:
      return false;
    default:
      return !tlv::isCritical(type);
  }
}

namespace {

/// Opens the outer TLV and checks that nothing follows it.
ByteSpan
openOuter(ByteSpan wire, uint32_t expectedType, const char* what)
{
  if (wire.empty())
    throw Error(Errc::MalformedTlv, std::string("empty ") + what);
  TlvReader reader(wire);
  auto outer = reader.read();
  if (outer.type != expectedType)
    throw Error(Errc::MalformedTlv, std::string("not an ") + what + " (type " +
                std::to_string(outer.type) + ")");
  if (!reader.atEnd())
    throw Error(Errc::MalformedTlv, std::string("trailing bytes after ") + what);
  return outer.value;
}

Name
readLeadingName(TlvReader& reader)
{
  if (reader.atEnd())
    throw Error(Errc::MalformedTlv, "missing Name");
  auto e = reader.read();
  if (e.type != tlv::Name)
    throw Error(Errc::MalformedTlv, "first element is not a Name");
  return decodeNameValue(e.value);
}

void
appendExtra(Bytes& out, const std::vector<OpaqueTlv>& extra)
{
  for (const auto& e : extra)
    appendTlv(out, e.type, e.value);
}

void
rejectDuplicate(bool seen, const char* field)
{
  if (seen)
    throw Error(Errc::MalformedTlv, std::string("duplicate ") + field);
}

} // namespace

Bytes
encodeInterest(const Interest& interest)
{
  Bytes value;
  appendName(value, interest.name);
  if (interest.nonce)
    appendTlv(value, tlv::Nonce, *interest.nonce);
  if (interest.lifetimeMs) {
    Bytes n;
    appendNonNegativeInteger(n, *interest.lifetimeMs);
    appendTlv(value, tlv::InterestLifetime, n);
  }
  appendExtra(value, interest.extra);

  Bytes out;
  appendTlv(out, tlv::Interest, value);
  return out;
}

Interest
decodeInterest(ByteSpan wire)
{
  TlvReader reader(openOuter(wire, tlv::Interest, "Interest"));
  Interest interest;
  interest.name = readLeadingName(reader);

  while (!reader.atEnd()) {
    auto e = reader.read();
    switch (e.type) {
      case tlv::Nonce: {
        rejectDuplicate(interest.nonce.has_value(), "Nonce");
        if (e.value.size() != 4)
          throw Error(Errc::MalformedTlv, "Nonce must be 4 bytes");
        Nonce n;
        std::copy(e.value.begin(), e.value.end(), n.begin());
        interest.nonce = n;
        break;
      }
      case tlv::InterestLifetime:
        rejectDuplicate(interest.lifetimeMs.has_value(), "InterestLifetime");
        interest.lifetimeMs = readNonNegativeInteger(e.value);
        break;
      default:
        if (!isInterestPassThrough(e.type))
          throw Error(Errc::MalformedTlv, "unrecognized critical type " + std::to_string(e.type));
        interest.extra.push_back({e.type, Bytes(e.value.begin(), e.value.end())});
        break;
    }
  }
  return interest;
}

Bytes
encodeData(const Data& data)
{
  Bytes value;
  appendName(value, data.name);
  if (data.freshnessMs) {
    Bytes fp;
    appendNonNegativeInteger(fp, *data.freshnessMs);
    Bytes meta;
    appendTlv(meta, tlv::FreshnessPeriod, fp);
    appendTlv(value, tlv::MetaInfo, meta);
  }
  appendTlv(value, tlv::Content, data.content);
  appendTlv(value, tlv::SignatureInfo, data.sigInfo);
  appendTlv(value, tlv::SignatureValue, data.sigValue);
  appendExtra(value, data.extra);

  Bytes out;
  appendTlv(out, tlv::Data, value);
  return out;
}

Data
decodeData(ByteSpan wire)
{
  TlvReader reader(openOuter(wire, tlv::Data, "Data"));
  Data data;
  data.name = readLeadingName(reader);

  bool seenMeta = false, seenContent = false, seenSigInfo = false, seenSigValue = false;
  while (!reader.atEnd()) {
    auto e = reader.read();
    switch (e.type) {
      case tlv::MetaInfo: {
        rejectDuplicate(seenMeta, "MetaInfo");
        seenMeta = true;
        TlvReader meta(e.value);
        while (!meta.atEnd()) {
          auto m = meta.read();
          if (m.type == tlv::FreshnessPeriod) {
            rejectDuplicate(data.freshnessMs.has_value(), "FreshnessPeriod");
            data.freshnessMs = readNonNegativeInteger(m.value);
          }
          else if (tlv::isCritical(m.type)) {
            throw Error(Errc::MalformedTlv, "unsupported MetaInfo element " + std::to_string(m.type));
          }
        }
        break;
      }
      case tlv::Content:
        rejectDuplicate(seenContent, "Content");
        seenContent = true;
        data.content.assign(e.value.begin(), e.value.end());
        break;
      case tlv::SignatureInfo:
        rejectDuplicate(seenSigInfo, "SignatureInfo");
        seenSigInfo = true;
        data.sigInfo.assign(e.value.begin(), e.value.end());
        break;
      case tlv::SignatureValue:
        rejectDuplicate(seenSigValue, "SignatureValue");
        seenSigValue = true;
        data.sigValue.assign(e.value.begin(), e.value.end());
        break;
      default:
        if (!isDataPassThrough(e.type))
          throw Error(Errc::MalformedTlv, "unrecognized critical type " + std::to_string(e.type));
        data.extra.push_back({e.type, Bytes(e.value.begin(), e.value.end())});
        break;
    }
  }
  return data;
}

} // namespace icnlowpan::ndn
