#ifndef NICEGEN_ERRORS_HPP
#define NICEGEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nicegen {

// Broken precondition on a public operation (bad dimensions, empty input, ...).
struct contract_violation : std::logic_error {
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// Row reduction of [A|I] could not establish a pivot in every column.
struct not_invertible : std::runtime_error {
    explicit not_invertible(const std::string& what) : std::runtime_error(what) {}
};

// The triangularity constraint system has no (unique) solution.
struct no_solution : std::runtime_error {
    explicit no_solution(const std::string& what) : std::runtime_error(what) {}
};

// A generator exhausted its retry budget; carries a summary of the config.
struct generation_failed : std::runtime_error {
    explicit generation_failed(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document; position is a byte offset into the input.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

}  // namespace nicegen

#endif
