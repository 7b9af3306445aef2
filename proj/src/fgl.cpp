#include "provlog/fgl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "provlog/closure.hpp"
#include "provlog/pmorphism.hpp"

namespace provlog {

namespace {

// values[m][i][node] for every node of the closure.
std::vector< std::vector< std::vector< char > > > node_table( unsigned n, unsigned max_row, const Closure& c )
{
    const unsigned cols = 1u << n;
    std::vector< std::uint64_t > column_bits( cols, 0 );
    for ( unsigned i = 0; i < cols; ++i )
        for ( std::size_t s = 0; s < c.atoms().size(); ++s ) {
            auto j = c.formula( c.atoms()[ s ] ).index();
            if ( ( i >> ( j - 1 ) ) & 1u )
                column_bits[ i ] |= std::uint64_t{ 1 } << s;
        }

    const std::size_t b = c.boxes().size();
    std::uint64_t below = b == 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << b ) - 1;
    std::vector< std::vector< std::vector< char > > > out( max_row + 1, std::vector< std::vector< char > >( cols ) );
    for ( unsigned m = 0; m <= max_row; ++m ) {
        std::uint64_t next = below;
        for ( unsigned i = 0; i < cols; ++i ) {
            c.evaluate_point( column_bits[ i ], below, out[ m ][ i ] );
            next &= c.true_bodies( out[ m ][ i ] );
        }
        below = next;
    }
    return out;
}

void require_fn( unsigned n, const Formula& f )
{
    if ( n > 8 )
        throw PreconditionError( "FGL_n is supported for n <= 8" );
    require_fragment( f, Language::fn( n ) );
    if ( box_count( f ) > 64 )
        throw ResourceLimit( "more than 64 distinct boxes", "evaluation not started" );
}

} // namespace

std::vector< std::vector< char > > gn_truth_table( unsigned n, unsigned max_row, const Formula& f )
{
    require_fn( n, f );
    Closure c( f );
    auto table = node_table( n, max_row, c );
    std::vector< std::vector< char > > out( max_row + 1, std::vector< char >( 1u << n ) );
    for ( unsigned m = 0; m <= max_row; ++m )
        for ( unsigned i = 0; i < ( 1u << n ); ++i )
            out[ m ][ i ] = table[ m ][ i ][ c.root() ];
    return out;
}

bool eval_Gn( unsigned n, unsigned m, unsigned i, const Formula& f )
{
    if ( n > 8 || i >= ( 1u << n ) )
        throw PreconditionError( "column " + std::to_string( i ) + " out of range for G_" + std::to_string( n ) );
    return gn_truth_table( n, m, f )[ m ][ i ];
}

// ---------------------------------------------------------------------------

std::string box_bot_text( std::optional< unsigned > alpha )
{
    return "[]^" + ( alpha ? std::to_string( *alpha ) : std::string( "omega" ) ) + " bot";
}

std::string NormalForm::to_string() const
{
    if ( clauses.empty() )
        return "bot";
    std::string out;
    for ( const auto& cl : clauses ) {
        std::vector< std::string > lits;
        for ( auto [ j, pos ] : cl.constants )
            lits.push_back( ( pos ? "s" : "~s" ) + std::to_string( j ) );
        if ( cl.at_least > 0 )
            lits.push_back( "~" + box_bot_text( cl.at_least ) );
        if ( cl.below )
            lits.push_back( box_bot_text( cl.below ) );
        std::string text;
        for ( std::size_t k = 0; k < lits.size(); ++k )
            text += ( k ? " & " : "" ) + lits[ k ];
        if ( lits.empty() )
            text = "top";
        else if ( lits.size() > 1 && clauses.size() > 1 )
            text = "(" + text + ")";
        out += ( out.empty() ? "" : " | " ) + text;
    }
    return out;
}

Formula NormalForm::to_formula() const
{
    std::optional< Formula > dnf;
    for ( const auto& cl : clauses ) {
        std::optional< Formula > conj;
        auto add = [ & ]( Formula lit ) { conj = conj ? Formula::conj( *conj, lit ) : lit; };
        for ( auto [ j, pos ] : cl.constants )
            add( pos ? Formula::constant( j ) : Formula::neg( Formula::constant( j ) ) );
        if ( cl.at_least > 0 )
            add( Formula::neg( Formula::box_power( cl.at_least, Formula::bot() ) ) );
        if ( cl.below )
            add( Formula::box_power( *cl.below, Formula::bot() ) );
        Formula c = conj.value_or( Formula::top() );
        dnf = dnf ? Formula::disj( *dnf, c ) : c;
    }
    return dnf.value_or( Formula::bot() );
}

NormalForm normal_form( unsigned n, const Formula& f )
{
    require_fn( n, f );
    Closure c( f );
    const unsigned depth = modal_depth( f );
    const unsigned cols = 1u << n;
    auto table = node_table( n, depth, c );

    NormalForm nf;
    nf.n = n;
    for ( int box : c.boxes() ) {
        const int body = c.node( box ).lhs;
        std::optional< unsigned > alpha;
        for ( unsigned m = 0; m <= depth && !alpha; ++m )
            for ( unsigned i = 0; i < cols; ++i )
                if ( !table[ m ][ i ][ body ] ) {
                    alpha = m + 1;
                    break;
                }
        nf.steps.push_back( print( c.formula( box ) ) + " ~> " + box_bot_text( alpha ) );
    }

    // Row sets per column, as maximal intervals; row `depth` stands for all rows >= depth.
    std::map< std::vector< std::pair< unsigned, std::optional< unsigned > > >, std::vector< unsigned > > by_rows;
    for ( unsigned i = 0; i < cols; ++i ) {
        std::vector< std::pair< unsigned, std::optional< unsigned > > > intervals;
        for ( unsigned m = 0; m <= depth; ) {
            if ( !table[ m ][ i ][ c.root() ] ) {
                ++m;
                continue;
            }
            unsigned lo = m;
            while ( m <= depth && table[ m ][ i ][ c.root() ] )
                ++m;
            intervals.emplace_back( lo, m > depth ? std::nullopt : std::optional< unsigned >( m ) );
        }
        by_rows[ intervals ].push_back( i );
    }
    for ( const auto& [ intervals, columns ] : by_rows ) {
        std::vector< std::vector< std::pair< unsigned, bool > > > patterns;
        if ( columns.size() == cols )
            patterns.emplace_back();
        else
            for ( unsigned i : columns ) {
                std::vector< std::pair< unsigned, bool > > lits;
                for ( unsigned j = 1; j <= n; ++j )
                    lits.emplace_back( j, ( ( i >> ( j - 1 ) ) & 1u ) != 0 );
                patterns.push_back( std::move( lits ) );
            }
        for ( const auto& lits : patterns )
            for ( auto [ lo, hi ] : intervals )
                nf.clauses.push_back( NormalClause{ lits, lo, hi } );
    }
    std::sort( nf.clauses.begin(), nf.clauses.end() );
    nf.clauses.erase( std::unique( nf.clauses.begin(), nf.clauses.end() ), nf.clauses.end() );

    auto lhs = gn_truth_table( n, depth + 1, f );
    auto rhs = gn_truth_table( n, depth + 1, nf.to_formula() );
    if ( lhs != rhs )
        throw std::logic_error( "normal form of " + print( f ) + " is not equivalent on G_" + std::to_string( n ) );
    return nf;
}

Verdict decide_fgl( unsigned n, const Formula& f )
{
    require_fn( n, f );
    const unsigned depth = modal_depth( f );
    auto table = gn_truth_table( n, depth, f );
    std::vector< std::string > trace{ "evaluated rows 0.." + std::to_string( depth ) + " of G_" + std::to_string( n ) + "*" };
    for ( unsigned m = 0; m <= depth; ++m )
        for ( unsigned i = 0; i < ( 1u << n ); ++i ) {
            if ( table[ m ][ i ] )
                continue;
            Frame fr = gn_generated_frame( n, m, i );
            std::map< std::string, WorldSet > val;
            for ( unsigned j = 1; j <= n; ++j ) {
                WorldSet s = fr.empty_set();
                for ( std::size_t w = 0; w < fr.size(); ++w ) {
                    // names are "<p,col>"
                    const auto& name = fr.name( w );
                    auto col = static_cast< unsigned >( std::stoul( name.substr( name.find( ',' ) + 1 ) ) );
                    if ( ( col >> ( j - 1 ) ) & 1u )
                        s.set( w );
                }
                val.emplace( "s" + std::to_string( j ), std::move( s ) );
            }
            Model model( std::move( fr ), std::move( val ) );
            if ( check( model, 0, f ) )
                throw std::logic_error( "G_n evaluation and Kripke truth disagree on " + print( f ) );
            auto pt = "<" + std::to_string( m ) + "," + std::to_string( i ) + ">";
            return Refuted{ std::move( model ), 0, "point " + pt + " of G_" + std::to_string( n ) + "*", std::move( trace ) };
        }
    return Provable{ std::move( trace ) };
}

} // namespace provlog
