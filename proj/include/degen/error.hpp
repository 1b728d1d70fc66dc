#ifndef DEGEN_ERROR_HPP
#define DEGEN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degen {

/// Malformed text input. column() is 1-based and points at the offending character.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t column)
        : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace degen

#endif // DEGEN_ERROR_HPP
