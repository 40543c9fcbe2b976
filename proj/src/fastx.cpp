#include "bitaln/fastx.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace bitaln {

namespace {

// getline that strips a trailing '\r' and counts lines.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    return true;
}

std::string header_token(const std::string& header) {
    auto end = header.find_first_of(" \t");
    return header.substr(0, end == std::string::npos ? header.size() : end);
}

std::vector<nuc_seq> parse_fasta(std::istream& in, base_policy policy) {
    std::vector<nuc_seq> out;
    std::string line;
    std::size_t line_no = 0;

    std::string id;
    std::string seq;
    std::size_t record_line = 0;
    bool in_record = false;

    auto flush = [&] {
        if (!in_record) return;
        if (seq.empty())
            throw malformed_record_error(record_line, "FASTA record '" + id + "' has no sequence");
        try {
            out.push_back(encode_sequence(id, seq, policy));
        } catch (const invalid_base_error& e) {
            throw invalid_base_error(e.position(), e.base(), id);
        }
        seq.clear();
    };

    while (next_line(in, line, line_no)) {
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            id = header_token(line.substr(1));
            record_line = line_no;
            in_record = true;
        } else {
            if (!in_record)
                throw malformed_record_error(line_no, "sequence data before any FASTA header");
            seq += line;
        }
    }
    flush();
    return out;
}

std::vector<nuc_seq> parse_fastq(std::istream& in, base_policy policy) {
    std::vector<nuc_seq> out;
    std::string header, seq, plus, qual;
    std::size_t line_no = 0;

    while (next_line(in, header, line_no)) {
        if (header.empty()) continue;
        std::size_t record_line = line_no;
        if (header[0] != '@')
            throw malformed_record_error(record_line, "expected '@' FASTQ header");
        if (!next_line(in, seq, line_no))
            throw malformed_record_error(record_line, "truncated FASTQ record: missing sequence");
        if (!next_line(in, plus, line_no))
            throw malformed_record_error(record_line, "truncated FASTQ record: missing '+' line");
        if (plus.empty() || plus[0] != '+')
            throw malformed_record_error(line_no, "expected '+' separator");
        if (!next_line(in, qual, line_no))
            throw malformed_record_error(record_line, "truncated FASTQ record: missing quality line");
        const std::string id = header_token(header.substr(1));
        try {
            out.push_back(encode_sequence(id, seq, policy));
        } catch (const invalid_base_error& e) {
            throw invalid_base_error(e.position(), e.base(), id);
        }
    }
    return out;
}

}  // namespace

std::vector<nuc_seq> parse_sequences(std::istream& in, fastx_format format, base_policy policy) {
    return format == fastx_format::fasta ? parse_fasta(in, policy) : parse_fastq(in, policy);
}

std::vector<nuc_seq> parse_fastx_file(const std::string& path, base_policy policy) {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file: " + path);
    int first = in.peek();
    if (first == std::char_traits<char>::eof())
        throw malformed_record_error(1, "file is empty: " + path);
    fastx_format format;
    if (first == '>')
        format = fastx_format::fasta;
    else if (first == '@')
        format = fastx_format::fastq;
    else
        throw malformed_record_error(1, "unrecognized format: expected '>' or '@'");
    return parse_sequences(in, format, policy);
}

void write_fasta(std::ostream& out, std::span<const nuc_seq> seqs) {
    for (const auto& s : seqs) {
        out << '>' << s.id() << '\n' << decode_sequence(s) << '\n';
    }
}

void write_fasta_file(const std::string& path, std::span<const nuc_seq> seqs) {
    std::ofstream out(path);
    if (!out) throw error("cannot open output file: " + path);
    write_fasta(out, seqs);
}

}  // namespace bitaln
