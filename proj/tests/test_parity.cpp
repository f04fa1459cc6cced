#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pns/parity.hpp"

using namespace pns;

TEST_CASE("hamming weight of vectors and tables") {
  CHECK(hamming_weight(Parity::from_string("00000")) == 0);
  CHECK(hamming_weight(Parity::from_string("01101")) == 3);

  ParityTable table = testing::example_table_5x7();
  CHECK(hamming_weight(table) == 25);
}

TEST_CASE("row_add reproduces the worked 5x7 example") {
  ParityTable table = testing::example_table_5x7();
  table.row_add(5, 2);
  table.row_add(2, 3);
  for (int c = 0; c < 7; ++c) {
    CHECK(table.column_bits(c).to_string() == testing::kExampleTable5x7After[static_cast<size_t>(c)]);
  }
}

TEST_CASE("row_add is an involution") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    ParityTable table = testing::random_test_table(4, 6, rng);
    int i = 1 + static_cast<int>(testing::rand_below(rng, 4));
    int j = 1 + static_cast<int>(testing::rand_below(rng, 4));
    if (i == j) continue;
    std::vector<std::string> before;
    for (int c = 0; c < table.slot_count(); ++c) before.push_back(table.column_bits(c).to_string());
    table.row_add(i, j);
    table.row_add(i, j);
    for (int c = 0; c < table.slot_count(); ++c) {
      CHECK(table.column_bits(c).to_string() == before[static_cast<size_t>(c)]);
    }
  }
}

TEST_CASE("row_add rejects equal indices") {
  ParityTable table = testing::example_table_5x7();
  CHECK_THROWS_AS(table.row_add(2, 2), std::invalid_argument);
}

TEST_CASE("incremental weights agree with a recount over random row_adds") {
  std::mt19937_64 rng(12);
  auto recount = [](const ParityTable& t) {
    int total = 0;
    for (int c : t.live_slots()) total += t.column_bits(c).popcount();
    return total;
  };
  for (int round = 0; round < 1000; ++round) {
    ParityTable table = testing::random_test_table(4, 6, rng);
    int i, j;
    do {
      i = 1 + static_cast<int>(testing::rand_below(rng, 4));
      j = 1 + static_cast<int>(testing::rand_below(rng, 4));
    } while (i == j);
    int before = hamming_weight(table);
    int delta = table.xor_row_weight(i, j, table.live_mask()) -
                table.row_weight(i, table.live_mask());
    table.row_add(i, j);
    CHECK(hamming_weight(table) == before + delta);
    CHECK(hamming_weight(table) == recount(table));
  }
}

TEST_CASE("parity_key reads qubit 1 as the most significant bit") {
  CHECK(parity_key(Parity::from_string("1000")) == 8);
  CHECK(parity_key(Parity::from_string("0011")) == 3);

  Parity a = Parity::from_string("0110");
  Parity b = Parity::from_string("0111");
  Parity c = Parity::from_string("1000");
  CHECK(parity_key_less(a, b));
  CHECK(parity_key_less(b, c));
  CHECK(parity_key_less(a, c));
  CHECK_FALSE(parity_key_less(c, a));
}

TEST_CASE("parity_key_less is a strict total order") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 200; ++round) {
    int n = 2 + static_cast<int>(testing::rand_below(rng, 80));  // crosses word boundaries
    Parity a{testing::random_nonzero_bits(n, rng)};
    Parity b{testing::random_nonzero_bits(n, rng)};
    CHECK_FALSE(parity_key_less(a, a));
    if (a.bits == b.bits) {
      CHECK_FALSE(parity_key_less(a, b));
    } else {
      CHECK(parity_key_less(a, b) != parity_key_less(b, a));
    }
    if (n <= 64) {
      CHECK(parity_key_less(a, b) == (parity_key(a) < parity_key(b)));
    }
  }
}

TEST_CASE("support lists 1-indexed qubits") {
  CHECK(support(Parity::from_string("01101")) == std::vector<int>{2, 3, 5});
  CHECK(support(Parity::from_string("0010")) == std::vector<int>{3});
  CHECK(support(Parity::from_string("100001010100")) == std::vector<int>{1, 6, 8, 10});
}

TEST_CASE("ingestion rejects zero columns") {
  std::vector<Parity> columns{Parity::from_string("0000")};
  CHECK_THROWS_AS(ParityTable(4, std::move(columns)), std::invalid_argument);
}

TEST_CASE("duplicate columns merge by summing angles mod 2pi") {
  constexpr double pi = std::numbers::pi;

  SUBCASE("angles accumulate") {
    std::vector<Parity> columns{Parity::from_string("110", 0.5),
                                Parity::from_string("011", 0.25),
                                Parity::from_string("110", 0.75)};
    ParityTable table(3, std::move(columns));
    REQUIRE(table.slot_count() == 2);
    CHECK(table.column_bits(0).to_string() == "110");
    CHECK(table.column_angle(0).value() == doctest::Approx(1.25));
    CHECK(table.column_angle(1).value() == doctest::Approx(0.25));
  }

  SUBCASE("a merge that cancels drops the column") {
    std::vector<Parity> columns{Parity::from_string("110", pi),
                                Parity::from_string("011", 0.25),
                                Parity::from_string("110", pi)};
    ParityTable table(3, std::move(columns));
    REQUIRE(table.slot_count() == 1);
    CHECK(table.column_bits(0).to_string() == "011");
  }

  SUBCASE("plain parity-network entries survive cancellation") {
    std::vector<Parity> columns{Parity::from_string("110", pi), Parity::from_string("110"),
                                Parity::from_string("110", pi)};
    ParityTable table(3, std::move(columns));
    REQUIRE(table.slot_count() == 1);
    CHECK(table.column_bits(0).to_string() == "110");
    CHECK_FALSE(table.column_angle(0).has_value());
  }

  SUBCASE("tables without angles never drop columns") {
    std::vector<Parity> columns{Parity::from_string("110"), Parity::from_string("110")};
    ParityTable table(3, std::move(columns));
    CHECK(table.slot_count() == 1);
    CHECK(table.live_count() == 1);
  }
}

TEST_CASE("ptab round-trips exactly") {
  std::mt19937_64 rng(14);
  for (int round = 0; round < 50; ++round) {
    int n = 4 + static_cast<int>(testing::rand_below(rng, 7));
    int m = 1 + static_cast<int>(testing::rand_below(rng, 10));
    ParityTable table = testing::random_test_table(n, m, rng);
    std::string text = table.to_ptab();
    ParityTable reparsed = ParityTable::parse_ptab(text);
    CHECK(reparsed.to_ptab() == text);
  }

  std::string with_angles = "qubits 3\n110 0.25\n011 1.5707963267948966\n111\n";
  ParityTable table = ParityTable::parse_ptab(with_angles);
  CHECK(table.to_ptab() == with_angles);
}

TEST_CASE("ptab parsing reports malformed input") {
  CHECK_THROWS(ParityTable::parse_ptab("110\n"));                 // missing qubits line
  CHECK_THROWS(ParityTable::parse_ptab("qubits 3\n11\n"));        // short column
  CHECK_THROWS(ParityTable::parse_ptab("qubits 3\n1a0\n"));       // bad character
  CHECK_THROWS(ParityTable::parse_ptab("qubits 3\n110 x\n"));     // bad angle
  CHECK_THROWS(ParityTable::parse_ptab("qubits 3\n000\n"));       // zero column
  CHECK_NOTHROW(ParityTable::parse_ptab("# intro\nqubits 3\n110 0.5 # trailing comment\n"));
}
