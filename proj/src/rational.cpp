#include "chainmod/rational.hpp"

#include "chainmod/errors.hpp"

#include <cctype>

namespace chainmod {

namespace {

BigInt parse_integer(const std::string& text) {
    if (text.empty()) throw Error("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw Error("sign without digits: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("invalid integer literal: '" + text + "'");
    return BigInt(text);
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator: '" + text + "'");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

std::optional<Rational> rational_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    BigInt num_root = boost::multiprecision::sqrt(num);
    if (num_root * num_root != num) return std::nullopt;
    BigInt den_root = boost::multiprecision::sqrt(den);
    if (den_root * den_root != den) return std::nullopt;
    return Rational(num_root, den_root);
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw Error("zero to a negative power");
        return 1 / rational_pow(base, -exponent);
    }
    Rational result = 1;
    Rational acc = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= acc;
        acc *= acc;
    }
    return result;
}

} // namespace chainmod
