#include <doctest.h>

#include "provlog/glprover.hpp"
#include "provlog/random.hpp"
#include "provlog/search.hpp"

using namespace provlog;

namespace {

Formula schema( Schema s )
{
    SchemaArgs a;
    a.letters = { { "A", Formula::var( "p" ) }, { "B", Formula::var( "q" ) }, { "C", Formula::var( "r" ) } };
    return instantiate_schema( s, a );
}

// A refutation must falsify the formula at the reported world.
void check_refutation( const Verdict& v, const Formula& f )
{
    if ( const auto* r = std::get_if< Refuted >( &v ) )
        CHECK_FALSE( check( r->model, r->world, f ) );
}

} // namespace

TEST_CASE( "GL examples" )
{
    CHECK( is_provable( decide_gl( schema( Schema::K ) ) ) );
    CHECK( is_provable( decide_gl( schema( Schema::L ) ) ) );
    CHECK( is_provable( decide_gl( schema( Schema::Four ) ) ) );
    CHECK( is_provable( decide_gl( Formula::top() ) ) );

    auto lin = schema( Schema::Linearity );
    auto v = decide_gl( lin );
    REQUIRE_FALSE( is_provable( v ) );
    const auto& r = std::get< Refuted >( v );
    CHECK( r.model.frame().size() == 3 );
    CHECK( frame_class( r.model.frame() ).gl_frame() );
    CHECK_FALSE( frame_class( r.model.frame() ).linear );
    check_refutation( v, lin );

    CHECK_FALSE( is_provable( decide_gl( parse( "[]p -> p" ) ) ) );
    CHECK_FALSE( is_provable( decide_gl( parse( "<>top" ) ) ) );
    CHECK_THROWS_AS( (void)decide_gl( parse( "[1]p" ) ), PreconditionError );
}

TEST_CASE( "GL engines agree" )
{
    FormulaGenerator gen( 1234 );
    DecideOptions cross;
    cross.cross_check = true;
    for ( int k = 0; k < 150; ++k ) {
        auto f = gen.gl( 2, 3, 9 );
        Budget b1, b2;
        auto seq = gl_sequent_search( f, b1 );
        auto types = gl_type_search( f, b2 );
        CHECK( seq.has_value() == types.has_value() );
        if ( seq )
            CHECK_FALSE( check( seq->model, seq->world, f ) );
        if ( types )
            CHECK_FALSE( check( types->model, types->world, f ) );
        auto v = decide_gl( f, cross );
        CHECK( is_provable( v ) == !seq.has_value() );
        check_refutation( v, f );
    }
}

TEST_CASE( "GL.3 examples" )
{
    CHECK( is_provable( decide_gl3( schema( Schema::Linearity ) ) ) );
    auto v = decide_gl3( Formula::bot() );
    REQUIRE_FALSE( is_provable( v ) );
    CHECK( std::get< Refuted >( v ).model.frame().size() == 1 );

    auto refl = parse( "[]p -> p" );
    v = decide_gl3( refl );
    REQUIRE_FALSE( is_provable( v ) );
    CHECK( std::get< Refuted >( v ).model.frame().size() == 1 );
    check_refutation( v, refl );

    CHECK( is_provable( decide_gl3( schema( Schema::Q1 ) ) ) );
}

TEST_CASE( "closed fragment" )
{
    for ( unsigned n = 0; n <= 3; ++n ) {
        auto d = rank_formula( n );
        auto v = decide_gl_closed( d );
        REQUIRE_FALSE( is_provable( v ) );
        CHECK_FALSE( is_provable( decide_gl_closed( Formula::neg( d ) ) ) );
        const auto& r = std::get< Refuted >( v );
        for ( std::size_t w = 0; w < r.model.frame().size(); ++w )
            CHECK( check( r.model, w, d ) == ( w == n ) );
    }
    CHECK( is_provable( decide_gl_closed( parse( "[]bot | <>top", Language::closed_b() ) ) ) );

    auto v = decide_gl_closed( parse( "[][]bot -> []bot", Language::closed_b() ) );
    REQUIRE_FALSE( is_provable( v ) );
    CHECK( std::get< Refuted >( v ).world == 1 );

    CHECK_THROWS_AS( (void)decide_gl_closed( parse( "[]p" ) ), FragmentError );

    // GL, GL.3 and rank evaluation agree on closed formulas
    FormulaGenerator gen( 8 );
    for ( int k = 0; k < 100; ++k ) {
        auto f = gen.closed_b( 3, 8 );
        bool closed = is_provable( decide_gl_closed( f ) );
        CHECK( closed == is_provable( decide_gl( f ) ) );
        CHECK( closed == is_provable( decide_gl3( f ) ) );
    }
}

TEST_CASE( "GL.4 examples" )
{
    CHECK( is_provable( decide_gl4( schema( Schema::Q1 ) ) ) );
    CHECK( is_provable( decide_gl4( schema( Schema::Q2 ) ) ) );
    auto lin = schema( Schema::Linearity );
    auto v = decide_gl4( lin );
    REQUIRE_FALSE( is_provable( v ) );
    CHECK( frame_class( std::get< Refuted >( v ).model.frame() ).in_class_c() );
    check_refutation( v, lin );

    auto g = decide_gl4( lin, GL4Engine::G1 );
    REQUIRE_FALSE( is_provable( g ) );
    check_refutation( g, lin );

    DecideOptions cross;
    cross.cross_check = true;
    CHECK( is_provable( decide_gl4( schema( Schema::Q2 ), cross ) ) );
    CHECK_FALSE( is_provable( decide_gl4( lin, cross ) ) );
}

TEST_CASE( "theoremhood is monotone from GL to GL.4 to GL.3" )
{
    FormulaGenerator gen( 4321 );
    auto lin = schema( Schema::Linearity );
    CHECK_FALSE( is_provable( decide_gl4( lin ) ) );
    CHECK( is_provable( decide_gl3( lin ) ) );
    auto q1 = schema( Schema::Q1 );
    CHECK_FALSE( is_provable( decide_gl( q1 ) ) );
    CHECK( is_provable( decide_gl4( q1 ) ) );

    for ( int k = 0; k < 200; ++k ) {
        auto f = gen.gl( 2, 2, 8 );
        bool gl = is_provable( decide_gl( f ) );
        auto v4 = decide_gl4( f );
        auto v3 = decide_gl3( f );
        bool gl4 = is_provable( v4 );
        bool gl3 = is_provable( v3 );
        if ( gl )
            CHECK( gl4 );
        if ( gl4 )
            CHECK( gl3 );
        check_refutation( v4, f );
        check_refutation( v3, f );
    }
}

TEST_CASE( "GL.3 cross-check against brute force" )
{
    FormulaGenerator gen( 99 );
    DecideOptions cross;
    cross.cross_check = true;
    for ( int k = 0; k < 60; ++k ) {
        auto f = gen.gl( 2, 3, 8 );
        CHECK_NOTHROW( (void)decide_gl3( f, cross ) );
    }
}
