#pragma once

#include <stdexcept>
#include <string>

namespace zhu {

// Syntax error with the offending input and a 0-based column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string input, std::size_t position)
        : std::runtime_error(format(what, input, position)), input_(std::move(input)), position_(position) {}

    const std::string& input() const { return input_; }
    std::size_t position() const { return position_; }

private:
    static std::string format(const std::string& what, const std::string& input, std::size_t pos) {
        return "parse error at column " + std::to_string(pos + 1) + ": " + what + "\n  " + input + "\n  " +
               std::string(pos, ' ') + "^";
    }
    std::string input_;
    std::size_t position_;
};

}  // namespace zhu
