#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

// Precondition violated by the caller (mismatched sizes, negative arguments, ...).
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

// Odd exponents where an even-entry formula was requested.
struct parity_error : std::domain_error {
    explicit parity_error(const std::string& msg) : std::domain_error(msg) {}
};

// Input outside the mathematical domain of the operation (n too small, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// A configured degree/enumeration limit was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The Gram matrix G_kn is not invertible at the requested n.
struct gram_singular_error : std::runtime_error {
    explicit gram_singular_error(int k, long n)
        : std::runtime_error("gram-singular at n=" + std::to_string(n) +
                             " (k=" + std::to_string(k) + ")") {}
};

// Malformed textual input; position is a 0-based character offset.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

} // namespace ortho
