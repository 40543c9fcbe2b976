#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bitaln/dataset.hpp"
#include "bitaln/fastx.hpp"

using namespace bitaln;

TEST_CASE("minimal one-record FASTQ") {
    std::istringstream in("@r1\nACGT\n+\nIIII\n");
    const auto seqs = parse_sequences(in, fastx_format::fastq);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].id() == "r1");
    CHECK(decode_sequence(seqs[0]) == "ACGT");
}

TEST_CASE("FASTA concatenates sequence lines") {
    std::istringstream in(">a\nAAT\nC\n");
    const auto seqs = parse_sequences(in, fastx_format::fasta);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].id() == "a");
    CHECK(decode_sequence(seqs[0]) == "AATC");
}

TEST_CASE("header ids stop at whitespace") {
    std::istringstream in(">read_1 some description\nACGT\n");
    const auto seqs = parse_sequences(in, fastx_format::fasta);
    CHECK(seqs.at(0).id() == "read_1");
}

TEST_CASE("malformed records report the line number") {
    SUBCASE("FASTQ missing quality line") {
        std::istringstream in("@r1\nACGT\n+\n");
        try {
            parse_sequences(in, fastx_format::fastq);
            FAIL("expected malformed_record_error");
        } catch (const malformed_record_error& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("FASTQ separator is not '+'") {
        std::istringstream in("@r1\nACGT\n*\nIIII\n");
        try {
            parse_sequences(in, fastx_format::fastq);
            FAIL("expected malformed_record_error");
        } catch (const malformed_record_error& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("FASTA data before any header") {
        std::istringstream in("ACGT\n>a\nACGT\n");
        CHECK_THROWS_AS(parse_sequences(in, fastx_format::fasta), malformed_record_error);
    }
    SUBCASE("FASTA header without sequence") {
        std::istringstream in(">a\n>b\nACGT\n");
        CHECK_THROWS_AS(parse_sequences(in, fastx_format::fasta), malformed_record_error);
    }
    SUBCASE("invalid base propagates") {
        std::istringstream in(">a\nACXT\n");
        CHECK_THROWS_AS(parse_sequences(in, fastx_format::fasta), invalid_base_error);
    }
}

TEST_CASE("generated dataset survives write/parse round trips") {
    const auto reads = generate_dataset(dataset_spec::fixed(1000, 200, 3));
    std::ostringstream fasta;
    write_fasta(fasta, reads);

    std::istringstream in(fasta.str());
    const auto parsed = parse_sequences(in, fastx_format::fasta);
    REQUIRE(parsed.size() == 1000);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].size() == 200);
        CHECK(parsed[i].id() == reads[i].id());
        CHECK(decode_sequence(parsed[i]) == decode_sequence(reads[i]));
    }

    // write(parse(f)) reproduces f byte for byte on normalized input.
    std::ostringstream again;
    write_fasta(again, parsed);
    CHECK(again.str() == fasta.str());
}
