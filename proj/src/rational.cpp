#include "gja/rational.hpp"

#include "gja/errors.hpp"

#include <cctype>

namespace gja {

Scalar parse_rational(const std::string& text) {
    std::size_t i = 0;
    const auto fail = [&](const char* msg) -> Scalar { throw ParseError(msg, i); };
    if (text.empty()) return fail("empty rational");
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) return fail("expected digits in rational");
    if (i < text.size()) {
        if (text[i] != '/') return fail("unexpected character in rational");
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) return fail("malformed denominator");
        if (text.substr(den_start) == std::string(text.size() - den_start, '0'))
            return fail("zero denominator");
    }
    return Scalar(text);
}

std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace gja
