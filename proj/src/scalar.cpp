#include "hombol/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hombol/errors.hpp"

namespace hombol {

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.v_;
}

bool is_rational_literal(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) return false;
    if (pos == text.size()) return true;
    if (text[pos] != '/') return false;
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') return false;
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos == text.size();
}

Rational parse_rational(std::string_view text) {
    if (!is_rational_literal(text))
        throw FormatError("invalid rational literal: \"" + std::string(text) + "\"");
    return Rational(Rational::Backend(std::string(text)));
}

std::string to_string(const Rational& q) {
    return q.backend().str();
}

}  // namespace hombol
