#include "provlog/random.hpp"

namespace provlog {

std::vector< Formula > variables( unsigned count )
{
    static const char* names[] = { "p", "q", "r", "t", "u", "v", "w", "x", "y", "z" };
    std::vector< Formula > out;
    for ( unsigned i = 0; i < count; ++i )
        out.push_back( Formula::var( i < 10 ? names[ i ] : "v" + std::to_string( i ) ) );
    return out;
}

Formula FormulaGenerator::make( const Grammar& grammar, unsigned depth, unsigned size )
{
    // leaf
    if ( size == 0 || below( 4 ) == 0 ) {
        auto k = below( static_cast< unsigned >( grammar.leaves.size() ) + 1 );
        if ( k == grammar.leaves.size() )
            return below( 2 ) ? Formula::bot() : Formula::top();
        return grammar.leaves[ k ];
    }
    const unsigned choices = depth > 0 ? ( grammar.rhd && depth >= 2 ? 7 : 6 ) : 4;
    const unsigned op = below( choices );
    const unsigned rest = size - 1;
    const unsigned split = rest == 0 ? 0 : below( rest + 1 );
    switch ( op ) {
    case 0: return Formula::neg( make( grammar, depth, rest ) );
    case 1: return Formula::conj( make( grammar, depth, split ), make( grammar, depth, rest - split ) );
    case 2: return Formula::disj( make( grammar, depth, split ), make( grammar, depth, rest - split ) );
    case 3: return Formula::implies( make( grammar, depth, split ), make( grammar, depth, rest - split ) );
    case 4: return Formula::box( below( grammar.max_level + 1 ), make( grammar, depth - 1, rest ) );
    case 5: return Formula::diamond( below( grammar.max_level + 1 ), make( grammar, depth - 1, rest ) );
    default: return Formula::rhd( make( grammar, depth - 2, split ), make( grammar, depth - 2, rest - split ) );
    }
}

Formula FormulaGenerator::gl( unsigned vars, unsigned depth, unsigned size )
{
    return make( { variables( vars ), 0, false }, depth, size );
}

Formula FormulaGenerator::fn( unsigned n, unsigned depth, unsigned size )
{
    Grammar grammar;
    for ( unsigned j = 1; j <= n; ++j )
        grammar.leaves.push_back( Formula::constant( j ) );
    return make( grammar, depth, size );
}

Formula FormulaGenerator::closed_b( unsigned depth, unsigned size ) { return make( {}, depth, size ); }

Formula FormulaGenerator::closed_d( unsigned depth, unsigned max_level, unsigned size )
{
    return make( { {}, max_level, false }, depth, size );
}

Formula FormulaGenerator::il( unsigned vars, unsigned depth, unsigned size )
{
    return make( { variables( vars ), 0, true }, depth, size );
}

Formula FormulaGenerator::box_bot_combination( unsigned max_power, unsigned size )
{
    Grammar grammar;
    for ( unsigned k = 1; k <= max_power; ++k )
        grammar.leaves.push_back( Formula::box_power( k, Formula::bot() ) );
    return make( grammar, 0, size );
}

} // namespace provlog
