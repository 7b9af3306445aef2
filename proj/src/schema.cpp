#include <algorithm>
#include <array>
#include <utility>

#include "provlog/formula.hpp"

namespace provlog {

namespace {

struct SchemaInfo
{
    Schema schema;
    std::string_view name;
    bool il;
};

constexpr std::array< SchemaInfo, 19 > kSchemas{ {
    { Schema::K, "K", false },
    { Schema::L, "L", false },
    { Schema::Four, "4", false },
    { Schema::Linearity, "linearity", false },
    { Schema::Q1, "Q1", false },
    { Schema::Q2, "Q2", false },
    { Schema::FGL, "FGL", false },
    { Schema::NonBranching, "nonbranching", false },
    { Schema::L1, "L1", true },
    { Schema::L2, "L2", true },
    { Schema::L3, "L3", true },
    { Schema::J1, "J1", true },
    { Schema::J2, "J2", true },
    { Schema::J3, "J3", true },
    { Schema::J4, "J4", true },
    { Schema::J5, "J5", true },
    { Schema::M, "M", true },
    { Schema::P, "P", true },
    { Schema::W, "W", true },
} };

class Letters
{
public:
    Letters( Schema s, const SchemaArgs& args ) : _schema{ s }, _args{ args } {}

    const Formula& operator()( const std::string& letter ) const
    {
        auto it = _args.letters.find( letter );
        if ( it == _args.letters.end() )
            throw SchemaError( "schema " + std::string( schema_name( _schema ) ) + " is missing argument " + letter );
        return it->second;
    }

private:
    Schema _schema;
    const SchemaArgs& _args;
};

Formula disjunction_of( const std::vector< Formula >& parts )
{
    if ( parts.empty() )
        return Formula::bot();
    Formula acc = parts.front();
    for ( std::size_t i = 1; i < parts.size(); ++i )
        acc = Formula::disj( acc, parts[ i ] );
    return acc;
}

} // namespace

std::string_view schema_name( Schema s )
{
    for ( const auto& info : kSchemas )
        if ( info.schema == s )
            return info.name;
    return "?";
}

Schema schema_from_name( std::string_view name )
{
    for ( const auto& info : kSchemas )
        if ( info.name == name )
            return info.schema;
    if ( name == "ILW3-linearity" )
        return Schema::Linearity;
    throw SchemaError( "unknown schema '" + std::string( name ) + "'" );
}

bool is_il_schema( Schema s )
{
    if ( s == Schema::Linearity )
        return true;  // the ILW.3 linearity axiom
    for ( const auto& info : kSchemas )
        if ( info.schema == s )
            return info.il;
    return false;
}

std::vector< std::string > schema_letters( Schema s, const SchemaArgs& args )
{
    switch ( s ) {
    case Schema::L:
    case Schema::Four:
    case Schema::L2:
    case Schema::L3:
    case Schema::J5: return { "A" };
    case Schema::FGL: return { "B" };
    case Schema::K:
    case Schema::Linearity:
    case Schema::Q2:
    case Schema::L1:
    case Schema::J1:
    case Schema::J4:
    case Schema::P:
    case Schema::W: return { "A", "B" };
    case Schema::Q1:
    case Schema::J2:
    case Schema::J3:
    case Schema::M: return { "A", "B", "C" };
    case Schema::NonBranching: {
        std::vector< std::string > out;
        for ( unsigned i = 1; i <= args.n + 2; ++i )
            out.push_back( "A" + std::to_string( i ) );
        return out;
    }
    }
    return {};
}

Formula constant_combination( unsigned n, unsigned i )
{
    if ( n == 0 )
        return Formula::top();
    if ( n < 32 && i >= ( 1u << n ) )
        throw SchemaError( "constant combination index " + std::to_string( i ) + " out of range for n = " + std::to_string( n ) );
    std::vector< Formula > lits;
    for ( unsigned j = 0; j < n; ++j ) {
        auto s = Formula::constant( j + 1 );
        lits.push_back( ( i >> j ) & 1u ? s : Formula::neg( s ) );
    }
    Formula acc = lits.front();
    for ( std::size_t k = 1; k < lits.size(); ++k )
        acc = Formula::conj( acc, lits[ k ] );
    return acc;
}

namespace {

bool is_box_bot_chain( const Formula& f )
{
    const Formula* g = &f;
    unsigned k = 0;
    while ( g->is( Formula::Kind::Box ) && g->level() == 0 ) {
        g = &g->body();
        ++k;
    }
    return k >= 1 && g->is( Formula::Kind::Bot );
}

} // namespace

bool is_box_bot_combination( const Formula& f )
{
    switch ( f.kind() ) {
    case Formula::Kind::Bot: return true;
    case Formula::Kind::Implies: return is_box_bot_combination( f.lhs() ) && is_box_bot_combination( f.rhs() );
    case Formula::Kind::Box: return is_box_bot_chain( f );
    default: return false;
    }
}

Formula instantiate_schema( Schema s, const SchemaArgs& args )
{
    using F = Formula;
    Letters get{ s, args };
    switch ( s ) {
    case Schema::K:
    case Schema::L1: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::implies( F::box( F::implies( a, b ) ), F::implies( F::box( a ), F::box( b ) ) );
    }
    case Schema::L:
    case Schema::L3: {
        const auto& a = get( "A" );
        return F::implies( F::box( F::implies( F::box( a ), a ) ), F::box( a ) );
    }
    case Schema::Four:
    case Schema::L2: {
        const auto& a = get( "A" );
        return F::implies( F::box( a ), F::box( F::box( a ) ) );
    }
    case Schema::Linearity: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::disj( F::box( F::implies( F::box( a ), b ) ), F::box( F::implies( F::boxplus( b ), a ) ) );
    }
    case Schema::Q1: {
        const auto &a = get( "A" ), &b = get( "B" ), &c = get( "C" );
        return F::disj( F::disj( F::box( F::implies( F::box( a ), F::disj( b, c ) ) ),
                                 F::box( F::implies( F::boxplus( b ), F::disj( a, c ) ) ) ),
                        F::box( F::implies( F::boxplus( c ), F::disj( a, b ) ) ) );
    }
    case Schema::Q2: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::implies( F::diamond( F::conj( F::diamond( a ), F::box( b ) ) ), F::box( F::disj( F::diamond( a ), b ) ) );
    }
    case Schema::FGL: {
        const auto& b = get( "B" );
        if ( !is_box_bot_combination( b ) )
            throw SchemaError( "FGL argument B must be a Boolean combination of []^k bot, got " + print( b ) );
        return F::implies( F::box( F::implies( constant_combination( args.n, args.index ), b ) ), F::box( b ) );
    }
    case Schema::NonBranching: {
        auto names = schema_letters( s, args );
        std::vector< Formula > as;
        for ( const auto& nm : names )
            as.push_back( get( nm ) );
        std::vector< Formula > disjuncts;
        for ( std::size_t i = 0; i < as.size(); ++i ) {
            std::vector< Formula > others;
            for ( std::size_t j = 0; j < as.size(); ++j )
                if ( j != i )
                    others.push_back( as[ j ] );
            disjuncts.push_back( F::box( F::implies( F::boxplus( as[ i ] ), disjunction_of( others ) ) ) );
        }
        return disjunction_of( disjuncts );
    }
    case Schema::J1: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::implies( F::box( F::implies( a, b ) ), F::rhd( a, b ) );
    }
    case Schema::J2: {
        const auto &a = get( "A" ), &b = get( "B" ), &c = get( "C" );
        return F::implies( F::conj( F::rhd( a, b ), F::rhd( b, c ) ), F::rhd( a, c ) );
    }
    case Schema::J3: {
        const auto &a = get( "A" ), &b = get( "B" ), &c = get( "C" );
        return F::implies( F::conj( F::rhd( a, c ), F::rhd( b, c ) ), F::rhd( F::disj( a, b ), c ) );
    }
    case Schema::J4: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::implies( F::rhd( a, b ), F::implies( F::diamond( a ), F::diamond( b ) ) );
    }
    case Schema::J5: {
        const auto& a = get( "A" );
        return F::rhd( F::diamond( a ), a );
    }
    case Schema::M: {
        const auto &a = get( "A" ), &b = get( "B" ), &c = get( "C" );
        return F::implies( F::rhd( a, b ), F::rhd( F::conj( a, F::box( c ) ), F::conj( b, F::box( c ) ) ) );
    }
    case Schema::P: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::implies( F::rhd( a, b ), F::box( F::rhd( a, b ) ) );
    }
    case Schema::W: {
        const auto &a = get( "A" ), &b = get( "B" );
        return F::implies( F::rhd( a, b ), F::rhd( a, F::conj( b, F::box( F::neg( a ) ) ) ) );
    }
    }
    throw SchemaError( "unhandled schema" );
}

} // namespace provlog
