#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bitaln/nucseq.hpp"

namespace bitaln {

enum class fastx_format { fasta, fastq };

// Parses FASTA ('>' headers, sequence possibly split over several lines) or
// FASTQ (strict 4-line records). Record ids are the first whitespace-delimited
// token of the header; FASTQ quality lines are discarded. Throws
// malformed_record_error (with the 1-based line number) on structural errors
// and invalid_base_error per encode_sequence.
std::vector<nuc_seq> parse_sequences(std::istream& in, fastx_format format,
                                     base_policy policy = base_policy::strict);

// Opens `path`, auto-detects the format from the first record marker
// ('>' FASTA, '@' FASTQ) and parses it.
std::vector<nuc_seq> parse_fastx_file(const std::string& path,
                                      base_policy policy = base_policy::strict);

// One ">id" header plus a single sequence line per record.
void write_fasta(std::ostream& out, std::span<const nuc_seq> seqs);
void write_fasta_file(const std::string& path, std::span<const nuc_seq> seqs);

}  // namespace bitaln
