#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "provlog/formula.hpp"

namespace provlog {

/// Seeded random formulas for property tests. `depth` bounds the modal
/// depth, `size` roughly bounds the number of connectives.
class FormulaGenerator
{
public:
    explicit FormulaGenerator( std::uint64_t seed ) : _rng{ seed } {}

    // Variables p, q, r, ... (the first `vars` of them).
    Formula gl( unsigned vars, unsigned depth, unsigned size = 8 );
    // Constants s_1..s_n.
    Formula fn( unsigned n, unsigned depth, unsigned size = 8 );
    Formula closed_b( unsigned depth, unsigned size = 8 );
    // Boxes [0]..[max_level].
    Formula closed_d( unsigned depth, unsigned max_level, unsigned size = 6 );
    // With |>, which counts as depth 2.
    Formula il( unsigned vars, unsigned depth, unsigned size = 6 );
    // Boolean combinations of []^k bot, 1 <= k <= max_power, and top.
    Formula box_bot_combination( unsigned max_power, unsigned size = 3 );

    std::mt19937_64& engine() { return _rng; }
    unsigned below( unsigned n ) { return std::uniform_int_distribution< unsigned >( 0, n - 1 )( _rng ); }

private:
    struct Grammar
    {
        std::vector< Formula > leaves;
        unsigned max_level = 0;
        bool rhd = false;
    };

    Formula make( const Grammar& grammar, unsigned depth, unsigned size );

    std::mt19937_64 _rng;
};

// p, q, r, s is skipped (constants), then t, u, ...
[[nodiscard]] std::vector< Formula > variables( unsigned count );

} // namespace provlog
