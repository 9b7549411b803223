#include "test-common.hpp"

#include "icnlowpan/ndn/tlv.hpp"

#include <fstream>

namespace icnlowpan::ndn {
namespace {

using namespace icnlowpan::tests;

std::vector<Bytes>
readGolden(const std::string& file)
{
  std::ifstream is(std::string(ICNLOWPAN_SOURCE_DIR) + "/tests/golden/" + file);
  REQUIRE(is);
  std::vector<Bytes> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    out.push_back(fromHex(line));
  }
  return out;
}

TEST_SUITE("ndn-codec")
{

TEST_CASE("var-number and non-negative integer widths")
{
  for (auto [n, size] : std::vector<std::pair<uint64_t, size_t>>{
         {0, 1}, {252, 1}, {253, 3}, {65535, 3}, {65536, 5}, {0xFFFFFFFF, 5}, {0x100000000, 9}}) {
    Bytes out;
    appendVarNumber(out, n);
    CHECK(out.size() == size);
    CHECK(sizeofVarNumber(n) == size);
    TlvReader r(out);
    CHECK(r.readVarNumber() == n);
    CHECK(r.atEnd());
  }
  for (auto [n, size] : std::vector<std::pair<uint64_t, size_t>>{
         {0, 1}, {255, 1}, {256, 2}, {4000, 2}, {65536, 4}, {0x100000000, 8}}) {
    Bytes out;
    appendNonNegativeInteger(out, n);
    CHECK(out.size() == size);
    CHECK(readNonNegativeInteger(out) == n);
  }
  CHECK_ERRC(readNonNegativeInteger(Bytes{1, 2, 3}), Errc::MalformedTlv);
  CHECK(TlvHeader{0x07, 300}.size() == 4);
}

TEST_CASE("encode_interest hand-encoded cases")
{
  Interest a;
  a.name = Name{"a"};
  CHECK(encodeInterest(a) == fromHex("05050703080161"));
  CHECK(encodeInterest(a).size() == 7);

  Interest empty;
  CHECK(encodeInterest(empty) == fromHex("05020700"));
}

TEST_CASE("golden vectors decode and re-encode byte-exactly")
{
  auto vectors = readGolden("ndn-tlv.hex");
  REQUIRE(vectors.size() == 5);
  for (const auto& wire : vectors) {
    if (wire[0] == tlv::Interest)
      CHECK(encodeInterest(decodeInterest(wire)) == wire);
    else
      CHECK(encodeData(decodeData(wire)) == wire);
  }

  auto i = decodeInterest(vectors[2]);
  CHECK(i.name == Name{"ab", "c"});
  CHECK(i.nonce == Nonce{1, 2, 3, 4});
  CHECK(i.lifetimeMs == 4000u);

  auto d = decodeData(vectors[4]);
  CHECK(d.freshnessMs == 1000u);
  CHECK(d.content.empty());
}

TEST_CASE("evaluation packet sizes")
{
  // /org/example/building/1/floor/4/room/481/temp/1
  Name nameLong{"org", "example", "building", "1", "floor", "4", "room", "481", "temp", "1"};
  CHECK(encodeName(nameLong).size() == 59);

  Interest i{nameLong, Nonce{1, 2, 3, 4}, 4000, {}};
  CHECK(encodeInterest(i).size() == 71);

  Data d;
  d.name = nameLong;
  d.freshnessMs = 1000;
  d.content = {0, 0, 0, 21};
  CHECK(encodeData(d).size() == 77);
  // empty signature TLVs are present on the wire
  auto wire = encodeData(d);
  CHECK(Bytes(wire.end() - 4, wire.end()) == fromHex("16001700"));
}

TEST_CASE("name_tlv_overhead_uncompressed")
{
  CHECK(nameTlvOverheadUncompressed(Name{"a", "b", "c", "d"}) == 10);
  CHECK(nameTlvOverheadUncompressed(Name{}) == 2);
  Name nameLong{"org", "example", "building", "1", "floor", "4", "room", "481", "temp", "1"};
  CHECK(nameTlvOverheadUncompressed(nameLong) == 22);

  CHECK_ERRC(nameTlvOverheadUncompressed(Name(std::vector<Component>{Bytes(253, 'x')})),
             Errc::OverheadAssumptionViolated);
  // components fit but the name value does not
  CHECK_ERRC(nameTlvOverheadUncompressed(Name(std::vector<Component>(2, Bytes(130, 'x')))),
             Errc::OverheadAssumptionViolated);
}

TEST_CASE("overhead oracle: encoded size minus component bytes")
{
  Rng rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    Name n = randomName(rng, 20, 0, 12);
    size_t expected = encodeName(n).size() - n.valueBytes();
    CHECK(nameTlvOverheadUncompressed(n) == expected);
    CHECK(expected == 2 + 2 * n.size());
  }
}

TEST_CASE("round trip over randomized packets")
{
  Rng rng(42);
  for (int iter = 0; iter < 1000; ++iter) {
    Interest i = randomInterest(rng, randomName(rng, 12, 0, 300));
    REQUIRE(decodeInterest(encodeInterest(i)) == i);

    Data d = randomData(rng, randomName(rng, 12, 0, 300));
    REQUIRE(decodeData(encodeData(d)) == d);
  }

  Data zero;
  zero.name = Name{"x"};
  CHECK(decodeData(encodeData(zero)).content.empty());
}

TEST_CASE("decode errors")
{
  CHECK_ERRC(decodeInterest(Bytes{}), Errc::MalformedTlv);
  CHECK_ERRC(decodeData(Bytes{}), Errc::MalformedTlv);
  // declared length exceeds the buffer
  CHECK_ERRC(decodeInterest(fromHex("050907030801")), Errc::MalformedTlv);
  // trailing bytes
  CHECK_ERRC(decodeInterest(fromHex("0505070308016100")), Errc::MalformedTlv);
  // unknown critical type 0x0F inside an Interest
  CHECK_ERRC(decodeInterest(fromHex("050707030801610f00")), Errc::MalformedTlv);
  // unknown non-critical type 0x80 is preserved
  auto i = decodeInterest(fromHex("050807030801618001aa"));
  REQUIRE(i.extra.size() == 1);
  CHECK(i.extra[0] == OpaqueTlv{0x80, {0xAA}});
  // 3-byte nonce
  CHECK_ERRC(decodeInterest(fromHex("050a07030801610a03010203")), Errc::MalformedTlv);
  // duplicate lifetime
  CHECK_ERRC(decodeInterest(fromHex("050b07030801610c01010c0102")), Errc::MalformedTlv);
  // Name must come first
  CHECK_ERRC(decodeInterest(fromHex("05080a04010203040700")), Errc::MalformedTlv);
  // Data type mismatch
  CHECK_ERRC(decodeData(fromHex("05020700")), Errc::MalformedTlv);
  // non-generic name component
  CHECK_ERRC(decodeInterest(fromHex("05050703010161")), Errc::MalformedTlv);
}

TEST_CASE("decoder totality under fuzzing")
{
  Rng rng(7);
  std::vector<Bytes> seeds;
  for (int i = 0; i < 50; ++i) {
    seeds.push_back(encodeInterest(randomInterest(rng, randomName(rng, 6))));
    seeds.push_back(encodeData(randomData(rng, randomName(rng, 6))));
  }

  size_t decoded = 0, rejected = 0;
  for (int iter = 0; iter < 20000; ++iter) {
    Bytes input;
    if (iter % 2 == 0) {
      input = randomBytes(rng, uniform(rng, 0, 64));
      if (!input.empty())
        input[0] = uniform(rng, 0, 1) ? 0x05 : 0x06;
    }
    else {
      input = seeds[uniform(rng, 0, seeds.size() - 1)];
      size_t flips = uniform(rng, 1, 4);
      for (size_t f = 0; f < flips && !input.empty(); ++f)
        input[uniform(rng, 0, input.size() - 1)] = static_cast<uint8_t>(rng());
      if (uniform(rng, 0, 3) == 0)
        input.resize(uniform(rng, 0, input.size()));
    }
    for (auto decode : {+[] (ByteSpan b) { (void)decodeInterest(b); },
                        +[] (ByteSpan b) { (void)decodeData(b); }}) {
      try {
        decode(input);
        ++decoded;
      }
      catch (const Error& e) {
        REQUIRE(e.code() == Errc::MalformedTlv);
        ++rejected;
      }
    }
  }
  CHECK(decoded > 0);
  CHECK(rejected > 0);
}

TEST_CASE("name URIs")
{
  CHECK(Name::fromUri("/org/example/temp/7") == Name{"org", "example", "temp", "7"});
  CHECK(Name::fromUri("/") == Name{});
  CHECK(Name::fromUri("/a%2Fb/") == Name{"a/b"});
  CHECK(Name{"a b", "c"}.toUri() == "/a%20b/c");
  CHECK(Name::fromUri(Name{"a b", "~x"}.toUri()) == Name{"a b", "~x"});
  CHECK_THROWS_AS(Name::fromUri("org"), std::invalid_argument);
  CHECK_THROWS_AS(Name::fromUri("/a%G0"), std::invalid_argument);

  Name n{"a", "b", "c"};
  CHECK(n.getPrefix(2) == Name{"a", "b"});
  CHECK(n.getSubName(2) == Name{"c"});
  CHECK(Name{"a"}.isPrefixOf(n));
  CHECK_FALSE(Name{"b"}.isPrefixOf(n));
  CHECK(Name{}.isPrefixOf(n));
}

} // TEST_SUITE

} // namespace
} // namespace icnlowpan::ndn
