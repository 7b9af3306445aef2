#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace provlog {

/// An ordinal below epsilon_0 in hereditary Cantor normal form:
/// w^(e_k) + ... + w^(e_1) with e_k >= ... >= e_1, each e_i itself an Ordinal.
/// Coefficients are written out by repetition, so w*2 is the list [1, 1].
class Ordinal
{
public:
    Ordinal() = default;  // zero

    // Throws std::invalid_argument unless the exponents are weakly decreasing.
    explicit Ordinal( std::vector< Ordinal > exponents );

    static Ordinal zero() { return {}; }
    static Ordinal natural( std::size_t k );
    static Ordinal omega_power( Ordinal exponent );
    static Ordinal omega() { return omega_power( natural( 1 ) ); }

    [[nodiscard]] const std::vector< Ordinal >& exponents() const { return _exponents; }
    [[nodiscard]] bool is_zero() const { return _exponents.empty(); }

    // Hereditary representation size: each term counts 1 plus the size of its exponent.
    [[nodiscard]] std::size_t size() const;

    friend std::strong_ordering operator<=>( const Ordinal& a, const Ordinal& b );
    friend bool operator==( const Ordinal& a, const Ordinal& b ) { return ( a <=> b ) == 0; }

private:
    std::vector< Ordinal > _exponents;
};

enum class Comparison { LT, EQ, GT };

[[nodiscard]] Comparison compare( const Ordinal& a, const Ordinal& b );

// e(a): the last (smallest) exponent of the normal form; e(0) = 0.
[[nodiscard]] Ordinal end_exponent( const Ordinal& a );

/// Text syntax: sums of terms `0`, `<k>`, `w`, `w^<atom>`, each optionally
/// followed by `*k`; atoms are naturals, `w`, `w^<atom>` or a parenthesized sum.
/// Examples: "w+1", "w^2*3+w", "w^(w^w)". Unless `normalize` is set, terms must
/// be weakly decreasing; with it, absorbed terms are dropped (1+w = w).
[[nodiscard]] Ordinal parse_ordinal( std::string_view text, bool normalize = false );
[[nodiscard]] std::string print_ordinal( const Ordinal& a );

// Every ordinal of representation size <= max_size, ascending.
[[nodiscard]] std::vector< Ordinal > ordinals_up_to_size( std::size_t max_size );

} // namespace provlog
