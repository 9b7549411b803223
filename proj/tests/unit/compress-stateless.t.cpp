#include "test-common.hpp"

#include "icnlowpan/compress/stateless.hpp"

namespace icnlowpan::compress {
namespace {

using namespace icnlowpan::tests;
using ndn::Name;

/// Nibble packing written out directly: pairs of lengths, then components.
Bytes
oracleCompressName(const Name& name)
{
  std::vector<size_t> lens;
  for (size_t i = 0; i < name.size(); ++i)
    lens.push_back(name[i].size());
  lens.push_back(0);
  Bytes out;
  for (size_t i = 0; i < lens.size(); i += 2) {
    size_t hi = lens[i];
    size_t lo = i + 1 < lens.size() ? lens[i + 1] : 0;
    out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    if (hi != 0)
      out.insert(out.end(), name[i].begin(), name[i].end());
    if (lo != 0)
      out.insert(out.end(), name[i + 1].begin(), name[i + 1].end());
  }
  return out;
}

TEST_SUITE("compress-stateless")
{

TEST_CASE("compress_name hand-encoded cases")
{
  CHECK(compressName(Name{"ab", "c"}).bytes == fromHex("21616263 00"));
  CHECK(compressName(Name{"ab", "c", "d"}).bytes == fromHex("21616263 1064"));
  CHECK(compressName(Name{}).bytes == fromHex("00"));
  CHECK(compressName(Name{"a"}).bytes == fromHex("1061"));
  CHECK(compressName(Name{std::string(15, 'x')}).bytes.size() == 16);

  CHECK_ERRC(compressName(Name{std::string(16, 'x')}), Errc::ComponentTooLong);
  CHECK_ERRC(compressName(Name{"a", ""}), Errc::EmptyComponent);
}

TEST_CASE("compressed name matches the packing oracle")
{
  Rng rng(13);
  for (int iter = 0; iter < 3000; ++iter) {
    Name n = randomName(rng, 20);
    auto c = compressName(n);
    REQUIRE(c.bytes == oracleCompressName(n));
    REQUIRE(decompressName(c) == n);
    REQUIRE(compressedNameSize(n) == c.bytes.size());
  }
}

TEST_CASE("overhead formula and savings identity for 0..64 components")
{
  for (size_t n = 0; n <= 64; ++n) {
    Name name;
    for (size_t i = 0; i < n; ++i)
      name.append(std::string(1, static_cast<char>('a' + i % 26)));

    size_t compressedOverhead = compressName(name).bytes.size() - name.valueBytes();
    size_t uncompressedOverhead = ndn::encodeName(name).size() - name.valueBytes();
    // ceil((n + 1) / 2) length octets, computed without the library's helper
    CHECK(compressedOverhead == (n + 1 + 1) / 2);
    CHECK(compressedNameOverhead(n) == compressedOverhead);
    CHECK(ndn::nameTlvOverheadUncompressed(name) == uncompressedOverhead);

    size_t saved = ndn::encodeName(name).size() - compressName(name).bytes.size();
    CHECK(saved == uncompressedOverhead - compressedOverhead);
    CHECK(saved == 2 + 2 * n - (n + 2) / 2);
  }
}

TEST_CASE("decompress_name rejects malformed input")
{
  size_t consumed = 0;
  CHECK_ERRC(decompressNamePrefix(Bytes{}, consumed), Errc::MalformedCompressedName);
  CHECK_ERRC(decompressNamePrefix(fromHex("2161"), consumed), Errc::MalformedCompressedName);
  CHECK_ERRC(decompressNamePrefix(fromHex("216162"), consumed), Errc::MalformedCompressedName);
  CHECK_ERRC(decompressNamePrefix(fromHex("0161"), consumed), Errc::MalformedCompressedName);
  CHECK_ERRC(decompressName(CompressedName{fromHex("106100")}), Errc::MalformedCompressedName);

  auto n = decompressNamePrefix(fromHex("1061 ffff"), consumed);
  CHECK(n == Name{"a"});
  CHECK(consumed == 2);
}

TEST_CASE("Interest body example")
{
  ndn::Interest i{Name{"ab", "c"}, ndn::Nonce{1, 2, 3, 4}, 4000, {}};
  auto body = compressInterest(i);
  CHECK(body == fromHex("88 21616263 00 01020304"));
  CHECK(body.size() == 10);
  CHECK(decompressInterest(body).interest.lifetimeMs == 4000u);

  // an absent lifetime is kept distinct from the 4000 ms default
  i.lifetimeMs.reset();
  CHECK(compressInterest(i) == fromHex("c8 21616263 00 01020304 00"));
  CHECK(decompressInterest(compressInterest(i)).interest == i);

  i.lifetimeMs = 1000;
  CHECK(compressInterest(i) == fromHex("c8 21616263 00 01020304 0203e8"));
}

TEST_CASE("Data body example")
{
  ndn::Data d;
  d.name = Name{"a"};
  d.freshnessMs = 1000;
  d.content = {0, 0, 0, 0x15};
  // bits | name | freshness | content without a length prefix (last field)
  CHECK(compressData(d) == fromHex("c4 1061 fd03e8 00000015"));

  d.sigValue = {0xAB};
  CHECK(compressData(d) == fromHex("d4 1061 fd03e8 04 00000015 ab"));
}

TEST_CASE("elided prefix and dispatch mirror bits")
{
  ndn::Interest i{nameLong(), ndn::Nonce{9, 9, 9, 9}, 4000, {}};
  CompressOptions opts{8, true, true};
  auto body = compressInterest(i, opts);
  // /temp/1 remains: one length octet pair plus stop octet
  CHECK(body == fromHex("b8 41 74656d70 31 00 09090909"));
  CHECK(body.size() == 12);

  Name prefix = nameLong().getPrefix(8);
  auto back = decompressInterest(body, prefix);
  CHECK(back.interest == i);
  CHECK(back.bits == 0xB8);

  ndn::Data d;
  d.name = nameLong();
  d.freshnessMs = 1000;
  d.content = {0, 0, 0, 21};
  auto dataBody = compressData(d, {d.name.size(), true, false});
  CHECK(dataBody.size() == 8);
  CHECK(decompressData(dataBody, d.name).data == d);
}

TEST_CASE("name fallback is per name")
{
  ndn::Interest i{Name{"ok", std::string(20, 'L')}, ndn::Nonce{1, 1, 1, 1}, 4000, {}};
  auto body = compressInterest(i);
  CHECK(body[0] == (interest_bits::Nonce | interest_bits::NamePresent | interest_bits::NameFallback));
  auto tlv = ndn::encodeName(i.name);
  CHECK(Bytes(body.begin() + 1, body.begin() + 1 + tlv.size()) == tlv);
  auto back = decompressInterest(body);
  CHECK(back.nameFallback());
  CHECK(back.interest == i);

  ndn::Data d;
  d.name = Name{"x", ""};
  auto dataBody = compressData(d);
  CHECK((dataBody[0] & data_bits::NameFallback) != 0);
  CHECK(decompressData(dataBody).data == d);
}

TEST_CASE("malformed bodies")
{
  CHECK_ERRC(decompressInterest(Bytes{}), Errc::MalformedCompressedInterest);
  CHECK_ERRC(decompressInterest(fromHex("88 2161")), Errc::MalformedCompressedInterest);
  CHECK_ERRC(decompressInterest(fromHex("88 21616263 00 0102")), Errc::MalformedCompressedInterest);
  // reserved bit
  CHECK_ERRC(decompressInterest(fromHex("8a 21616263 00 01020304")), Errc::MalformedCompressedInterest);
  // explicit default lifetime
  CHECK_ERRC(decompressInterest(fromHex("c8 21616263 00 01020304 020fa0")),
             Errc::MalformedCompressedInterest);
  CHECK_ERRC(decompressInterest(fromHex("88 21616263 00 01020304 ff")), Errc::MalformedCompressedInterest);
  CHECK_ERRC(decompressInterest(fromHex("04")), Errc::MalformedCompressedInterest);

  CHECK_ERRC(decompressData(Bytes{}), Errc::MalformedCompressedData);
  CHECK_ERRC(decompressData(fromHex("c4 1061")), Errc::MalformedCompressedData);
  // content bit with zero-length content
  CHECK_ERRC(decompressData(fromHex("c4 1061 fd03e8")), Errc::MalformedCompressedData);
}

TEST_CASE("decompressors are total under fuzzing")
{
  Rng rng(17);
  for (int iter = 0; iter < 20000; ++iter) {
    Bytes input = randomBytes(rng, uniform(rng, 0, 40));
    try {
      (void)decompressInterest(input);
    }
    catch (const Error& e) {
      REQUIRE(e.code() == Errc::MalformedCompressedInterest);
    }
    try {
      (void)decompressData(input);
    }
    catch (const Error& e) {
      REQUIRE(e.code() == Errc::MalformedCompressedData);
    }
  }
}

TEST_CASE("round trip property over random packets")
{
  Rng rng(23);
  for (int iter = 0; iter < 3000; ++iter) {
    Name name = randomAnyName(rng, 10);
    size_t elided = uniform(rng, 0, name.size());
    Name prefix = name.getPrefix(elided);
    CompressOptions opts{elided, uniform(rng, 0, 1) == 1, uniform(rng, 0, 1) == 1};

    ndn::Interest i = randomInterest(rng, name);
    auto ci = decompressInterest(compressInterest(i, opts), prefix);
    REQUIRE(ci.interest == i);

    ndn::Data d = randomData(rng, name);
    auto cd = decompressData(compressData(d, opts), prefix);
    REQUIRE(cd.data == d);
  }
}

TEST_CASE("compressed Interest is never larger than its TLV encoding")
{
  Rng rng(29);
  for (int iter = 0; iter < 3000; ++iter) {
    ndn::Interest i = randomInterest(rng, randomAnyName(rng, 10));
    REQUIRE(compressInterest(i).size() <= ndn::encodeInterest(i).size());
    ndn::Data d = randomData(rng, randomAnyName(rng, 10));
    REQUIRE(compressData(d).size() <= ndn::encodeData(d).size());
  }
}

} // TEST_SUITE

} // namespace
} // namespace icnlowpan::compress
