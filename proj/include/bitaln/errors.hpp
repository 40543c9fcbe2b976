#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitaln {

// Base type for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class empty_sequence_error : public error {
public:
    empty_sequence_error() : error("sequence is empty") {}
    explicit empty_sequence_error(const std::string& what) : error(what) {}
};

class invalid_base_error : public error {
public:
    invalid_base_error(std::size_t position, char base)
        : error("invalid base '" + std::string(1, base) + "' at position " +
                std::to_string(position)),
          position_(position),
          base_(base) {}

    invalid_base_error(std::size_t position, char base, const std::string& record_id)
        : error("invalid base '" + std::string(1, base) + "' at position " +
                std::to_string(position) + " in record '" + record_id + "'"),
          position_(position),
          base_(base) {}

    std::size_t position() const noexcept { return position_; }
    char base() const noexcept { return base_; }

private:
    std::size_t position_;
    char base_;
};

class malformed_record_error : public error {
public:
    malformed_record_error(std::size_t line, const std::string& what)
        : error("malformed record at line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class sequence_too_long_error : public error {
public:
    sequence_too_long_error(const std::string& id, std::size_t len, std::size_t max_len)
        : error("sequence '" + id + "' has length " + std::to_string(len) +
                ", exceeding the configured maximum of " + std::to_string(max_len)),
          id_(id),
          len_(len),
          max_len_(max_len) {}

    const std::string& id() const noexcept { return id_; }
    std::size_t len() const noexcept { return len_; }
    std::size_t max_len() const noexcept { return max_len_; }

private:
    std::string id_;
    std::size_t len_;
    std::size_t max_len_;
};

class empty_dataset_error : public error {
public:
    empty_dataset_error() : error("dataset contains no sequences") {}
};

// Analytic-model argument errors.

class non_positive_length_error : public error {
public:
    non_positive_length_error() : error("sequence length must be positive") {}
};

class alpha_out_of_range_error : public error {
public:
    explicit alpha_out_of_range_error(double alpha)
        : error("utilization factor " + std::to_string(alpha) + " is outside [0, 1]") {}
};

class non_positive_energy_error : public error {
public:
    non_positive_energy_error() : error("energy must be positive") {}
};

class infeasible_error : public error {
public:
    explicit infeasible_error(const std::string& what) : error(what) {}
};

}  // namespace bitaln
