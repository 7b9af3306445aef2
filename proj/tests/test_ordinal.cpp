#include <doctest.h>

#include <stdexcept>

#include "provlog/ordinal.hpp"

using namespace provlog;

TEST_CASE( "ordinal comparison" )
{
    CHECK( compare( Ordinal::natural( 0 ), Ordinal::natural( 1 ) ) == Comparison::LT );
    CHECK( compare( Ordinal::omega(), Ordinal::natural( 2 ) ) == Comparison::GT );
    CHECK( compare( parse_ordinal( "w^w" ), parse_ordinal( "w^2*2" ) ) == Comparison::GT );
    CHECK( compare( parse_ordinal( "w+1" ), parse_ordinal( "w+1" ) ) == Comparison::EQ );
    CHECK( compare( parse_ordinal( "w*2" ), parse_ordinal( "w+5" ) ) == Comparison::GT );
}

TEST_CASE( "end exponent" )
{
    CHECK( end_exponent( Ordinal{} ).is_zero() );
    CHECK( end_exponent( Ordinal::natural( 1 ) ).is_zero() );
    CHECK( end_exponent( parse_ordinal( "w^w+w^2" ) ) == Ordinal::natural( 2 ) );
    CHECK( end_exponent( Ordinal::omega() ) == Ordinal::natural( 1 ) );
}

TEST_CASE( "ordinal text" )
{
    auto a = parse_ordinal( "w+1" );
    REQUIRE( a.exponents().size() == 2 );
    CHECK( a.exponents()[ 0 ] == Ordinal::natural( 1 ) );
    CHECK( a.exponents()[ 1 ].is_zero() );
    CHECK( parse_ordinal( "0" ).is_zero() );

    auto nested = parse_ordinal( "w^(w^w)" );
    REQUIRE( nested.exponents().size() == 1 );
    CHECK( nested.exponents()[ 0 ] == parse_ordinal( "w^w" ) );

    CHECK_THROWS( (void)parse_ordinal( "1+w" ) );
    CHECK( parse_ordinal( "1+w", true ) == Ordinal::omega() );
    CHECK_THROWS( (void)parse_ordinal( "w^" ) );

    for ( const auto& x : ordinals_up_to_size( 5 ) )
        CHECK( parse_ordinal( print_ordinal( x ) ) == x );
}

TEST_CASE( "comparison is a strict total order on small ordinals" )
{
    const auto all = ordinals_up_to_size( 5 );
    REQUIRE( all.size() > 20 );
    for ( std::size_t i = 0; i + 1 < all.size(); ++i )
        CHECK( compare( all[ i ], all[ i + 1 ] ) == Comparison::LT );
    for ( const auto& a : all )
        for ( const auto& b : all ) {
            auto ab = compare( a, b );
            auto ba = compare( b, a );
            CHECK( ( ab == Comparison::EQ ) == ( a == b ) );
            CHECK( ( ab == Comparison::LT ) == ( ba == Comparison::GT ) );
        }
    for ( const auto& a : all )
        for ( const auto& b : all )
            if ( compare( a, b ) == Comparison::LT )
                for ( const auto& c : all )
                    if ( compare( b, c ) == Comparison::LT )
                        CHECK( compare( a, c ) == Comparison::LT );
}

TEST_CASE( "end exponent lies below the ordinal" )
{
    for ( const auto& a : ordinals_up_to_size( 5 ) ) {
        if ( a.is_zero() )
            CHECK( end_exponent( a ).is_zero() );
        else
            CHECK( compare( end_exponent( a ), a ) == Comparison::LT );
    }
}

TEST_CASE( "malformed normal forms are rejected" )
{
    CHECK_THROWS_AS( Ordinal( { Ordinal::natural( 0 ), Ordinal::natural( 1 ) } ), std::invalid_argument );
}
