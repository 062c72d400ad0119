#include "hlv/bigrational.hpp"

#include <cctype>
#include <stdexcept>

namespace hlv {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

} // namespace

BigRational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_integer(text));

    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRational out(num, den);
    out.canonicalize();
    return out;
}

std::string to_fraction_string(const BigRational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_short_string(const BigRational& value)
{
    return value.get_str();
}

} // namespace hlv
