#pragma once

// Generated by tests/oracle/oracle.py. Do not edit by hand.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace maskstego::golden {

inline constexpr std::string_view kDistContext = "the quiet river runs past the [MASK] town at night .";
inline constexpr std::size_t kDistPosition = 6;
inline constexpr std::uint64_t kDistHash = 0x57ab8c9dc3a14be6ULL;
// Full distribution in vocabulary order, exact binary values.
inline constexpr double kDistProbs[64] = {
    0x1.619dc8b68e7b8p-18,
    0x1.f3409b6eafddcp-11,
    0x1.7fb6f91c98744p-5,
    0x1.7fc9dba4f64f7p-12,
    0x1.788db325a5686p-12,
    0x1.9901af7a15accp-17,
    0x1.bbd750266d3fep-10,
    0x1.20346abee37bap-13,
    0x1.590a27cfbb749p-14,
    0x1.64dbaef14ad76p-18,
    0x1.2054be3641a3dp-15,
    0x1.13f33237f3d42p-6,
    0x1.a982cb6cfffd5p-8,
    0x1.d49ada50fc950p-10,
    0x1.1c20d25f2258dp-8,
    0x1.2f87a91d45bddp-4,
    0x1.9a1daabedba74p-6,
    0x1.02da4d67af9f3p-4,
    0x1.1b293913f03a8p-4,
    0x1.e3f02fe0f46bap-6,
    0x1.18bab8f4fa860p-4,
    0x1.9fe0c1a630affp-12,
    0x1.f500d0a478246p-5,
    0x1.2bc54d49ae3b3p-9,
    0x1.73dab364f370fp-13,
    0x1.8ba401a60061bp-7,
    0x1.2f61c1e261f0ap-11,
    0x1.6ea90bc75c3a1p-12,
    0x1.772859a3f0984p-18,
    0x1.5d21966656904p-10,
    0x1.013385aa4061fp-27,
    0x1.20bacb6fbef09p-6,
    0x1.48ce54018e27ep-5,
    0x1.165a3e5fb53ebp-12,
    0x1.43deef86a6272p-13,
    0x1.6b6441476b6e7p-25,
    0x1.3833df06fc278p-26,
    0x1.8fec6d45ee388p-6,
    0x1.d58e172b426efp-12,
    0x1.f388381f88c7fp-7,
    0x1.77009b10bff47p-7,
    0x1.60848128d5aa0p-16,
    0x1.29374fb717918p-10,
    0x1.f5082ca4b4a9fp-6,
    0x1.091d90b1976f2p-14,
    0x1.c520afc20777ap-5,
    0x1.30c6e4f2b465fp-7,
    0x1.541f6446ba85dp-5,
    0x1.7ff89174b04ecp-6,
    0x1.5fa17101543bfp-5,
    0x1.b97289398b743p-5,
    0x1.8ce1fbf7e3974p-7,
    0x1.f43aa32b810e5p-6,
    0x1.11fa6a9335140p-6,
    0x1.00ea471344cc8p-20,
    0x1.f757d41f00f50p-11,
    0x1.4756d36a953d4p-13,
    0x1.dff5a5a58a18ep-5,
    0x1.357b5044e7171p-8,
    0x1.13158235c73fbp-6,
    0x1.faaa78fdbfbc6p-10,
    0x1.60b83c2e88cd9p-10,
    0x1.7f4ede9c32499p-12,
    0x1.aa4abc2c66ac7p-16,
};
// Canonical entries with p >= 0.02.
inline constexpr std::string_view kDistTopTokens[18] = {
    "house",
    "children",
    "friend",
    "people",
    "morning",
    "warm",
    "stone",
    "take",
    "city",
    "make",
    "find",
    "answer",
    "water",
    "keep",
    "teacher",
    "street",
    "garden",
    "see",
};

inline constexpr std::string_view kKey = "golden-fixture-key-0001";
inline constexpr std::uint64_t kKeyOffsetHash = 0xc73d4b7e4ff7256eULL;
inline constexpr std::uint64_t kKeySwapHash_7_3 = 0xf501d6ed2a51ced6ULL;
inline constexpr std::uint64_t kLongKeyOffsetHash = 0x54ae7907bf7dd44aULL;

// Huffman codes for {wonderful .6, decent .2, fine .1, great .1} at position 3.
inline constexpr std::string_view kExampleCodes[4] = {
    "0",
    "10",
    "111",
    "110",
};

inline constexpr std::string_view kMessage = "1010010001100010000010000110101111100001000010001001000011111010";
inline constexpr std::string_view kStegoConsistencyAuto = "old nice early people old city morning book wonderful question street great good way morning people family find teacher answer world bridge : early city bright river evening , bright wonderful world ? find small student way answer river find long great old : little open see door big dark question good keep friend warm school dark close small long wonderful problem friend find quiet school good see house year quiet river bright window big bright . children market stone a friend .";
inline constexpr std::string_view kAnnotatedConsistencyAuto = "old nice early(21,00000) people old city(16,00000) morning book wonderful(17,0000) question street great(19,00000) good way morning(21,0000) people family find(19,00100) teacher answer world(20,000) bridge : early city(20,0101) bright river evening(19,00100) , bright wonderful world(16,01100) ? find small student(19,010) way answer river(21,0000) find long great(21,1000) old : little open(20,0110) see door big(19,1011) dark question good(18,1110) keep friend warm(19,00010) school dark close(17,0001) small long wonderful(18,000) problem friend find(24,10010) quiet school good(23,0001) see house year(17,111) quiet river bright(18,1010) window big bright . children market stone a friend .";
inline constexpr std::size_t kCarriedConsistencyAuto = 96;
inline constexpr std::string_view kStegoConsistencyParallel = "old nice early people old bright morning book evening question street small good way warm people family street teacher answer take bridge : early happy bright river long , bright wonderful house ? find small keep way answer market find long quiet old : little bridge see door window dark question story keep friend small school dark way small long find problem friend tree quiet school good see house wonderful quiet river early window big bright . children market stone a friend .";
inline constexpr std::string_view kAnnotatedConsistencyParallel = "old nice early(21,00000) people old bright(21,00000) morning book evening(22,00000) question street small(21,0000) good way warm(22,0000) people family street(21,00100) teacher answer take(17,0000) bridge : early happy(19,1010) bright river long(16,01000) , bright wonderful house(17,1100) ? find small keep(16,010) way answer market(17,00001) find long quiet(12,0000) old : little bridge(23,1101) see door window(17,011) dark question story(19,11100) keep friend small(17,0010) school dark way(19,0001) small long find(22,00010) problem friend tree(18,0100) quiet school good(19,001) see house wonderful(15,111) quiet river early(21,1010) window big bright . children market stone a friend .";
inline constexpr std::size_t kCarriedConsistencyParallel = 96;
inline constexpr std::string_view kStegoBlockAuto = "old nice stone people old evening morning book find question street day good way day people family small teacher answer great bridge : early find bright river stone , bright wonderful friend ? find small student way answer cold find long warm old : little tree see door family dark question story keep friend people school dark warm small long close problem friend window quiet school world see house the quiet river warm window big story . children market day a friend .";
inline constexpr std::string_view kAnnotatedBlockAuto = "old nice stone(21,0000) people old evening(19,0000) morning book find(22,0000) question street day(17,0000) good way day(19,0000) people family small(18,0000) teacher answer great(19,0100) bridge : early find(20,0000) bright river stone(17,1010) , bright wonderful friend(20,0100) ? find small student(19,0110) way answer cold(18,0010) find long warm(20,0000) old : little tree(20,1000) see door family(17,0110) dark question story(20,1011) keep friend people(16,1110) school dark warm(20,0001) small long close(18,0000) problem friend window(20,1000) quiet school world(17,1001) see house the(20,0000) quiet river warm(16,1111) window big story(15,101) . children market day(19,0000) a friend .";
inline constexpr std::size_t kCarriedBlockAuto = 99;
inline constexpr std::string_view kStegoBlockParallel = "old nice stone people old give morning book little question street town good way find people family river teacher answer warm bridge : early close bright river city , bright wonderful morning ? find small question way answer cold find long story old : little bridge see door walk dark question problem keep friend great school dark children small long stone problem friend late quiet school make see house night quiet river garden window big book . children market street a friend .";
inline constexpr std::string_view kAnnotatedBlockParallel = "old nice stone(21,0000) people old give(21,0000) morning book little(22,0000) question street town(21,0000) good way find(22,0000) people family river(21,0000) teacher answer warm(17,0100) bridge : early close(19,0000) bright river city(16,1010) , bright wonderful morning(17,0100) ? find small question(16,0110) way answer cold(17,0010) find long story(12,000) old : little bridge(23,0100) see door walk(17,0011) dark question problem(19,0101) keep friend great(17,1111) school dark children(19,0000) small long stone(22,1000) problem friend late(18,0100) quiet school make(19,0100) see house night(15,100) quiet river garden(21,0011) window big book(17,1110) . children market street(18,1000) a friend .";
inline constexpr std::size_t kCarriedBlockParallel = 98;

inline constexpr double kPseudoPerplexityText001 = 0x1.33dcf5417b0d8p+9;

inline constexpr std::string_view kOffsetOneKey = "fig1-demo-key-0001";
inline constexpr std::string_view kOffsetZeroKey = "fig1-demo-key-0000";
inline constexpr std::string_view kFig1Key = "fig1-demo-key-0001";
inline constexpr std::string_view kFig1NiceCode = "1";
inline constexpr std::string_view kFig1BeautifulCode = "00";
inline constexpr std::string_view kFig1LovelyCode = "01";
inline constexpr std::string_view kFig1CityCode = "0";

}  // namespace maskstego::golden
