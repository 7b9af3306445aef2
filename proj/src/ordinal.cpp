#include "provlog/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "provlog/error.hpp"

namespace provlog {

Ordinal::Ordinal( std::vector< Ordinal > exponents ) : _exponents{ std::move( exponents ) }
{
    for ( std::size_t i = 1; i < _exponents.size(); ++i )
        if ( _exponents[ i - 1 ] < _exponents[ i ] )
            throw std::invalid_argument( "Cantor normal form exponents must be weakly decreasing" );
}

Ordinal Ordinal::natural( std::size_t k ) { return Ordinal( std::vector< Ordinal >( k, Ordinal{} ) ); }

Ordinal Ordinal::omega_power( Ordinal exponent ) { return Ordinal( std::vector< Ordinal >{ std::move( exponent ) } ); }

std::size_t Ordinal::size() const
{
    std::size_t s = 0;
    for ( const auto& e : _exponents )
        s += 1 + e.size();
    return s;
}

std::strong_ordering operator<=>( const Ordinal& a, const Ordinal& b )
{
    const auto& x = a._exponents;
    const auto& y = b._exponents;
    for ( std::size_t i = 0; i < x.size() && i < y.size(); ++i )
        if ( auto c = x[ i ] <=> y[ i ]; c != 0 )
            return c;
    return x.size() <=> y.size();
}

Comparison compare( const Ordinal& a, const Ordinal& b )
{
    auto c = a <=> b;
    if ( c < 0 )
        return Comparison::LT;
    if ( c > 0 )
        return Comparison::GT;
    return Comparison::EQ;
}

Ordinal end_exponent( const Ordinal& a )
{
    return a.is_zero() ? Ordinal{} : a.exponents().back();
}

// ---------------------------------------------------------------------------

namespace {

class OrdinalParser
{
public:
    OrdinalParser( std::string_view s, bool normalize ) : _s{ s }, _normalize{ normalize } {}

    Ordinal run()
    {
        auto a = sum();
        skip();
        if ( _pos != _s.size() )
            throw SyntaxError( "unexpected trailing input in ordinal", _pos );
        return a;
    }

private:
    void skip()
    {
        while ( _pos < _s.size() && std::isspace( static_cast< unsigned char >( _s[ _pos ] ) ) )
            ++_pos;
    }

    bool eat( std::string_view tok )
    {
        skip();
        if ( _s.substr( _pos, tok.size() ) == tok ) {
            _pos += tok.size();
            return true;
        }
        return false;
    }

    bool at_digit()
    {
        skip();
        return _pos < _s.size() && std::isdigit( static_cast< unsigned char >( _s[ _pos ] ) );
    }

    std::size_t number()
    {
        if ( !at_digit() )
            throw SyntaxError( "expected a natural number", _pos );
        std::size_t v = 0;
        while ( _pos < _s.size() && std::isdigit( static_cast< unsigned char >( _s[ _pos ] ) ) ) {
            v = v * 10 + static_cast< std::size_t >( _s[ _pos ] - '0' );
            if ( v > 1'000'000 )
                throw SyntaxError( "natural number too large", _pos );
            ++_pos;
        }
        return v;
    }

    Ordinal sum()
    {
        std::vector< Ordinal > terms;
        auto start = _pos;
        append( terms, term(), start );
        while ( eat( "+" ) ) {
            start = _pos;
            append( terms, term(), start );
        }
        return Ordinal( std::move( terms ) );
    }

    void append( std::vector< Ordinal >& acc, const std::vector< Ordinal >& more, std::size_t pos )
    {
        for ( const auto& e : more ) {
            if ( _normalize ) {
                while ( !acc.empty() && acc.back() < e )
                    acc.pop_back();
            } else if ( !acc.empty() && acc.back() < e ) {
                throw SyntaxError( "ordinal terms must be weakly decreasing", pos );
            }
            acc.push_back( e );
        }
    }

    // The exponents contributed by one term, coefficient expanded.
    std::vector< Ordinal > term()
    {
        std::vector< Ordinal > base;
        if ( at_digit() ) {
            base.assign( number(), Ordinal{} );
        } else if ( eat( "w" ) ) {
            Ordinal exponent = Ordinal::natural( 1 );
            if ( eat( "^" ) )
                exponent = atom();
            base.push_back( exponent );
        } else if ( eat( "(" ) ) {
            auto inner = sum();
            if ( !eat( ")" ) )
                throw SyntaxError( "expected ')'", _pos );
            base = inner.exponents();
        } else {
            throw SyntaxError( "expected an ordinal term", _pos );
        }
        if ( eat( "*" ) || eat( "\xc2\xb7" ) ) {
            auto k = number();
            // (w^e*c + rest)*k = w^e*(c*k) + rest
            std::vector< Ordinal > out;
            if ( k == 0 || base.empty() )
                return out;
            auto lead = std::find_if( base.begin(), base.end(), [ & ]( const Ordinal& e ) { return e != base.front(); } );
            for ( std::size_t i = 0; i + 1 < k; ++i )
                out.insert( out.end(), base.begin(), lead );
            out.insert( out.end(), base.begin(), base.end() );
            return out;
        }
        return base;
    }

    Ordinal atom()
    {
        if ( at_digit() )
            return Ordinal::natural( number() );
        if ( eat( "w" ) ) {
            Ordinal exponent = Ordinal::natural( 1 );
            if ( eat( "^" ) )
                exponent = atom();
            return Ordinal::omega_power( exponent );
        }
        if ( eat( "(" ) ) {
            auto inner = sum();
            if ( !eat( ")" ) )
                throw SyntaxError( "expected ')'", _pos );
            return inner;
        }
        throw SyntaxError( "expected an ordinal exponent", _pos );
    }

    std::string_view _s;
    bool _normalize;
    std::size_t _pos = 0;
};

bool is_natural( const Ordinal& a )
{
    return std::all_of( a.exponents().begin(), a.exponents().end(), []( const Ordinal& e ) { return e.is_zero(); } );
}

std::string print_atom( const Ordinal& a )
{
    if ( is_natural( a ) )
        return std::to_string( a.exponents().size() );
    if ( a.exponents().size() == 1 ) {
        const auto& x = a.exponents().front();
        if ( x == Ordinal::natural( 1 ) )
            return "w";
        return "w^" + print_atom( x );
    }
    return "(" + print_ordinal( a ) + ")";
}

} // namespace

Ordinal parse_ordinal( std::string_view text, bool normalize ) { return OrdinalParser{ text, normalize }.run(); }

std::string print_ordinal( const Ordinal& a )
{
    if ( a.is_zero() )
        return "0";
    std::string out;
    const auto& es = a.exponents();
    for ( std::size_t i = 0; i < es.size(); ) {
        std::size_t j = i;
        while ( j < es.size() && es[ j ] == es[ i ] )
            ++j;
        auto count = j - i;
        if ( !out.empty() )
            out += "+";
        if ( es[ i ].is_zero() ) {
            out += std::to_string( count );
        } else {
            out += es[ i ] == Ordinal::natural( 1 ) ? "w" : "w^" + print_atom( es[ i ] );
            if ( count > 1 )
                out += "*" + std::to_string( count );
        }
        i = j;
    }
    return out;
}

std::vector< Ordinal > ordinals_up_to_size( std::size_t max_size )
{
    if ( max_size == 0 )
        return { Ordinal{} };
    // candidate exponents, descending
    auto exps = ordinals_up_to_size( max_size - 1 );
    std::sort( exps.begin(), exps.end(), std::greater<>{} );

    std::vector< Ordinal > out;
    std::vector< Ordinal > current;
    std::function< void( std::size_t, std::size_t ) > extend = [ & ]( std::size_t from, std::size_t budget ) {
        out.emplace_back( current );
        for ( std::size_t k = from; k < exps.size(); ++k ) {
            auto cost = 1 + exps[ k ].size();
            if ( cost > budget )
                continue;
            current.push_back( exps[ k ] );
            extend( k, budget - cost );
            current.pop_back();
        }
    };
    extend( 0, max_size );
    std::sort( out.begin(), out.end() );
    return out;
}

} // namespace provlog
