#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace strandlab {

/// Coefficient field for homology and rank: GF(p) for a prime p < 2^31, or Q.
class FieldSpec {
public:
    enum class Kind { prime, rationals };

    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec gf(std::uint64_t p);
    static FieldSpec rationals();

    /// Accepts "gf2", "gf<p>", "q" (case-insensitive); also "gf(p)" and "qq".
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    /// Canonical short name, inverse of parse: "gf2", "gf3", "q".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

} // namespace strandlab
