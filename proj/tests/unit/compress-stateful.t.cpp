#include "test-common.hpp"

#include "icnlowpan/stateful/packet-codec.hpp"

#include <set>
#include <sstream>

namespace icnlowpan::stateful {
namespace {

using namespace icnlowpan::tests;
using namespace std::chrono_literals;
using ndn::Name;

Time
lifetime()
{
  return 4s;
}

/// Resolver backed by a PIT: HID_o -> entry name.
HopIdResolver
resolverFor(Pit& pit)
{
  return [&pit] (HopId h) -> const Name* {
    auto* e = pit.findByHopId(h);
    return e == nullptr ? nullptr : &e->name;
  };
}

TEST_SUITE("compress-stateful")
{

TEST_CASE("CID compression with the default table")
{
  auto table = CidTable::defaults();
  auto shortName = cidCompress(nameShort(), table);
  CHECK(shortName.cids == std::vector<ContextId>{0});
  CHECK(shortName.residual == Name{"example", "temp", "7"});

  auto longName = cidCompress(nameLong(), table);
  CHECK(longName.cids == std::vector<ContextId>{1});
  CHECK(longName.residual == Name{"temp", "1"});

  auto none = cidCompress(Name{"net", "x"}, table);
  CHECK(none.cids.empty());
  CHECK(none.residual == Name{"net", "x"});

  CHECK(cidDecompress(longName.cids, longName.residual, table) == nameLong());
  CHECK_ERRC(cidPrefix(std::vector<ContextId>{0x7F}, table), Errc::UnknownCid);
}

TEST_CASE("chained context ids concatenate in order")
{
  CidTable t;
  t.insert(2, Name{"a"});
  t.insert(3, Name{"b", "c"});
  CHECK(cidDecompress(std::vector<ContextId>{2, 3}, Name{"d"}, t) == Name{"a", "b", "c", "d"});
  CHECK(cidDecompress(std::vector<ContextId>{3, 2}, Name{}, t) == Name{"b", "c", "a"});

  // a 2-CID chain survives framing and decoding
  lowpan::DispatchChain chain{2, lowpan::IcnDispatch::CompressedInterest, {2, 3}, std::nullopt};
  ndn::Interest i{Name{"a", "b", "c", "d"}, ndn::Nonce{1, 2, 3, 4}, std::nullopt, {}};
  auto body = compress::compressInterest(i, {3, false, true});
  auto decoded = decodeFrame(lowpan::frameEncapsulate(chain, body), t);
  CHECK(std::get<ndn::Interest>(decoded.packet) == i);
}

TEST_CASE("CID table parsing")
{
  std::istringstream good("# contexts\n"
                          "cid 0 /org\n"
                          "\n"
                          "cid 5 /org/example   # trailing comment\n");
  auto t = CidTable::parse(good);
  CHECK(t.size() == 2);
  CHECK(*t.find(5) == Name{"org", "example"});
  CHECK(t.longestMatch(nameShort())->id == 5);

  for (const char* bad : {"cid 128 /a\n", "cid 1 /a\ncid 1 /b\n", "cid 1 /a\ncid 2 /a\n",
                          "cid x /a\n", "ctx 1 /a\n", "cid 1\n", "cid 1 /a extra\n", "cid 1 /\n",
                          "cid 1 a\n"}) {
    std::istringstream is(bad);
    CHECK_ERRC(CidTable::parse(is), Errc::ConfigError);
  }

  std::istringstream second("cid 0 /a\n\ncid 300 /b\n");
  try {
    CidTable::parse(second);
    FAIL("expected ConfigError");
  }
  catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_ERRC(CidTable::loadFile("/nonexistent/cid.conf"), Errc::IoError);
  CHECK_NOTHROW(CidTable::loadFile(std::string(ICNLOWPAN_SOURCE_DIR) + "/data/cid.conf"));
}

TEST_CASE("HopIDs are unique, exhaust at 255 and are reused")
{
  Pit pit(99);
  std::set<HopId> seen;
  std::vector<PitEntry*> entries;
  for (int k = 0; k < 255; ++k) {
    auto r = pit.interestInbound(Name{"n", std::to_string(k)}, 1, std::nullopt, lifetime());
    HopId h = pit.interestOutbound(*r.entry);
    CHECK(h != 0);
    CHECK(seen.insert(h).second);
    entries.push_back(r.entry);
  }
  pit.checkInvariants();
  CHECK(pit.liveHopIds() == 255);

  auto extra = pit.interestInbound(Name{"n", "extra"}, 1, std::nullopt, lifetime());
  CHECK_ERRC(pit.interestOutbound(*extra.entry), Errc::HopIdSpaceExhausted);

  HopId freed = *entries[17]->hidOut;
  pit.erase(*entries[17]);
  CHECK(pit.findByHopId(freed) == nullptr);
  CHECK(pit.interestOutbound(*extra.entry) == freed);
  pit.checkInvariants();

  // the outbound HopID of an entry is stable
  CHECK(pit.interestOutbound(*extra.entry) == freed);
}

TEST_CASE("PIT capacity and expiry")
{
  Pit pit(1, 2);
  pit.interestInbound(Name{"a"}, 1, std::nullopt, 1s);
  pit.interestInbound(Name{"b"}, 1, std::nullopt, 2s);
  CHECK_ERRC(pit.interestInbound(Name{"c"}, 1, std::nullopt, 1s), Errc::PitFull);
  // aggregation into an existing entry is always possible
  CHECK_NOTHROW(pit.interestInbound(Name{"a"}, 2, std::nullopt, 1s));

  pit.interestOutbound(*pit.find(Name{"a"}));
  CHECK(pit.expire(1s) == 1);
  CHECK(pit.size() == 1);
  CHECK(pit.liveHopIds() == 0);
  pit.checkInvariants();
}

TEST_CASE("Data matching, suffixes and unknown HopIDs")
{
  Pit pit(3);
  auto r = pit.interestInbound(Name{"a", "b"}, 1, uint8_t{7}, lifetime());
  HopId out = pit.interestOutbound(*r.entry);

  auto exact = pit.dataOutbound(Name{"a", "b"});
  CHECK(exact.entry == r.entry);
  CHECK(exact.suffix.empty());
  auto longer = pit.dataOutbound(Name{"a", "b", "v1"});
  CHECK(longer.suffix == Name{"v1"});
  CHECK_ERRC(pit.dataOutbound(Name{"a"}), Errc::NoPitMatch);

  CHECK(&pit.dataInboundSwap(out) == r.entry);
  CHECK_ERRC(pit.dataInboundSwap(static_cast<HopId>(out + 1)), Errc::UnknownHopId);
  CHECK_ERRC(pit.dataInboundSwap(0), Errc::UnknownHopId);
  CHECK(pit.findByInbound(1, 7) == r.entry);
  CHECK(pit.interestInbound(Name{"a", "b"}, 1, uint8_t{7}, lifetime()).isDuplicate);
}

TEST_CASE("two consumers choosing the same HopID do not collide upstream")
{
  Pit fwd(5);
  auto a = fwd.interestInbound(Name{"x", "1"}, 1, uint8_t{42}, lifetime());
  auto b = fwd.interestInbound(Name{"x", "2"}, 2, uint8_t{42}, lifetime());
  HopId ha = fwd.interestOutbound(*a.entry);
  HopId hb = fwd.interestOutbound(*b.entry);
  CHECK(ha != hb);
  CHECK(fwd.findByInbound(1, 42) == a.entry);
  CHECK(fwd.findByInbound(2, 42) == b.entry);

  // same name from both faces aggregates under one upstream HopID
  auto c = fwd.interestInbound(Name{"x", "1"}, 2, uint8_t{42}, lifetime());
  CHECK_FALSE(c.isNew);
  CHECK(c.entry == a.entry);
  CHECK(a.entry->inRecords.size() == 2);
  CHECK(fwd.interestOutbound(*c.entry) == ha);
  fwd.checkInvariants();
}

TEST_CASE("a reused downstream HopID supersedes the stale in-record")
{
  Pit fwd(8);
  auto old = fwd.interestInbound(Name{"old"}, 1, uint8_t{9}, lifetime());
  fwd.interestOutbound(*old.entry);
  fwd.interestInbound(Name{"old"}, 2, uint8_t{9}, lifetime());
  auto fresh = fwd.interestInbound(Name{"new"}, 1, uint8_t{9}, lifetime());
  CHECK(fwd.findByInbound(1, 9) == fresh.entry);
  REQUIRE(fwd.find(Name{"old"}) != nullptr);
  CHECK(fwd.find(Name{"old"})->inRecords.size() == 1);

  fwd.interestInbound(Name{"newer"}, 2, uint8_t{9}, lifetime());
  CHECK(fwd.find(Name{"old"}) == nullptr);
  CHECK(fwd.liveHopIds() == 0);
  fwd.checkInvariants();
}

/// consumer (face 0 of F) -> forwarder -> producer (face 1 of F)
struct ThreeNodes
{
  CidTable cids = CidTable::defaults();
  Pit consumer{11};
  Pit forwarder{12};
  Pit producer{13};

  struct Trace
  {
    std::vector<EncodedFrame> frames;
    ndn::Data received;
  };

  Trace
  run(const Name& interestName, const Name& dataName)
  {
    Trace t;
    ndn::Interest interest{interestName, ndn::Nonce{1, 2, 3, 4}, 4000, {}};

    auto c = consumer.interestInbound(interestName, 0, std::nullopt, lifetime());
    HopId h1 = consumer.interestOutbound(*c.entry);
    auto f1 = encodeInterest(interest, {&cids, h1, nullptr, true});
    t.frames.push_back(f1);

    auto atF = decodeFrame(f1.datagram, cids);
    auto fe = forwarder.interestInbound(std::get<ndn::Interest>(atF.packet).name, 0, atF.chain.hopId,
                                        lifetime());
    HopId h2 = forwarder.interestOutbound(*fe.entry);
    auto f2 = encodeInterest(std::get<ndn::Interest>(atF.packet), {&cids, h2, nullptr, true});
    t.frames.push_back(f2);

    auto atP = decodeFrame(f2.datagram, cids);
    const auto& pi = std::get<ndn::Interest>(atP.packet);
    producer.interestInbound(pi.name, 1, atP.chain.hopId, lifetime());

    ndn::Data data;
    data.name = dataName;
    data.freshnessMs = 1000;
    data.content = {0, 0, 0, 21};
    auto d1 = encodeData(data, {&cids, atP.chain.hopId, &pi.name, true});
    t.frames.push_back(d1);

    auto backAtF = decodeFrame(d1.datagram, cids, resolverFor(forwarder));
    const auto& fd = std::get<ndn::Data>(backAtF.packet);
    PitEntry& entry = forwarder.dataInboundSwap(*backAtF.chain.hopId);
    REQUIRE(entry.inRecords.size() == 1);
    auto d2 = encodeData(fd, {&cids, entry.inRecords[0].hidIn, &entry.name, true});
    t.frames.push_back(d2);
    forwarder.erase(entry);

    auto atC = decodeFrame(d2.datagram, cids, resolverFor(consumer));
    t.received = std::get<ndn::Data>(atC.packet);
    return t;
  }
};

TEST_CASE("three-node HopID chain restores the name end to end")
{
  ThreeNodes net;
  auto t = net.run(nameLong(), nameLong());
  CHECK(t.received.name == nameLong());
  CHECK(t.received.freshnessMs == 1000u);

  REQUIRE(t.frames.size() == 4);
  CHECK(t.frames[0].scheme == Scheme::Cid);
  CHECK(t.frames[0].datagram.size() == 16);
  CHECK(t.frames[2].scheme == Scheme::EnRoute);
  CHECK(t.frames[2].datagram.size() == 11);
  CHECK(t.frames[3].datagram.size() == 11);
  // the forwarder swapped its own HopID for the consumer's
  CHECK(t.frames[3].chain.hopId == t.frames[0].chain.hopId);
  CHECK(t.frames[2].chain.hopId == t.frames[1].chain.hopId);
  CHECK(net.forwarder.size() == 0);
  net.forwarder.checkInvariants();
}

TEST_CASE("Data with a longer name carries only the suffix")
{
  ThreeNodes net;
  Name dataName = nameLong();
  dataName.append("v1");
  auto t = net.run(nameLong(), dataName);
  CHECK(t.received.name == dataName);
  CHECK(t.frames[2].scheme == Scheme::EnRoute);
  CHECK(t.frames[2].datagram.size() == 11 + 3);
}

TEST_CASE("stale HopID is reported")
{
  ThreeNodes net;
  ndn::Data data;
  data.name = nameLong();
  auto f = encodeData(data, {&net.cids, uint8_t{200}, &data.name, true});
  CHECK_ERRC(decodeFrame(f.datagram, net.cids, resolverFor(net.forwarder)), Errc::UnknownHopId);
  CHECK_ERRC(decodeFrame(f.datagram, net.cids), Errc::UnknownHopId);
}

TEST_CASE("unknown CID on the wire")
{
  auto table = CidTable::defaults();
  ndn::Interest i{Name{"t"}, ndn::Nonce{1, 2, 3, 4}, std::nullopt, {}};
  lowpan::DispatchChain chain{2, lowpan::IcnDispatch::CompressedInterest, {0x7F}, std::nullopt};
  auto wire = lowpan::frameEncapsulate(chain, compress::compressInterest(i, {0, false, true}));
  CHECK_ERRC(decodeFrame(wire, table), Errc::UnknownCid);
}

TEST_CASE("encode ladder: round trip and never larger than uncompressed")
{
  Rng rng(31);
  auto table = CidTable::defaults();
  Pit resolverPit(1);
  for (int iter = 0; iter < 2000; ++iter) {
    Name name = uniform(rng, 0, 1) ? nameLong().getPrefix(uniform(rng, 0, 10)) : Name{};
    name.append(randomAnyName(rng, 5));

    std::optional<HopId> hop;
    if (uniform(rng, 0, 1))
      hop = static_cast<HopId>(uniform(rng, 1, 255));

    ndn::Interest i = randomInterest(rng, name);
    auto fi = encodeInterest(i, {&table, hop, nullptr, true});
    auto plain = encodeInterest(i, {&table, hop, nullptr, false});
    REQUIRE(fi.datagram.size() <= plain.datagram.size());
    auto di = decodeFrame(fi.datagram, table);
    REQUIRE(std::get<ndn::Interest>(di.packet) == i);
    REQUIRE(di.chain.hopId == hop);

    ndn::Data d = randomData(rng, name);
    Name pending = name.getPrefix(uniform(rng, 0, name.size()));
    auto fd = encodeData(d, {&table, hop, &pending, true});
    auto plainD = encodeData(d, {&table, hop, &pending, false});
    REQUIRE(fd.datagram.size() <= plainD.datagram.size());
    auto dd = decodeFrame(fd.datagram, table,
                          [&] (HopId h) { return h == hop ? &pending : nullptr; });
    REQUIRE(std::get<ndn::Data>(dd.packet) == d);
  }
}

} // TEST_SUITE

} // namespace
} // namespace icnlowpan::stateful
