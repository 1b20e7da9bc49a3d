#include "strandlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace strandlab {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::rationals()
{
    return FieldSpec(Kind::rationals, 0);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "q" || s == "qq" || s == "rationals")
        return rationals();
    if (s.rfind("gf", 0) == 0) {
        std::string digits = s.substr(2);
        if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
            digits = digits.substr(1, digits.size() - 2);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return gf(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected gf2, gf<p> or q)");
}

std::string FieldSpec::name() const
{
    if (kind_ == Kind::rationals)
        return "q";
    return "gf" + std::to_string(p_);
}

} // namespace strandlab
