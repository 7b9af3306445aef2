#include <doctest.h>

#include "provlog/kripke.hpp"
#include "provlog/kripke_io.hpp"

using namespace provlog;

namespace {

WorldSet set_of( const Frame& fr, std::initializer_list< std::size_t > ws )
{
    WorldSet s = fr.empty_set();
    for ( auto w : ws )
        s.set( w );
    return s;
}

Frame fork_frame()
{
    return Frame( { "r", "a", "b" }, { { "r", "a" }, { "r", "b" } } );
}

// Every irreflexive transitive relation on n labelled worlds.
std::vector< Frame > all_gl_frames( std::size_t n )
{
    std::vector< std::pair< std::size_t, std::size_t > > slots;
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = 0; b < n; ++b )
            if ( a != b )
                slots.emplace_back( a, b );
    std::vector< Frame > out;
    for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << slots.size() ); ++s ) {
        std::vector< std::pair< std::size_t, std::size_t > > edges;
        for ( std::size_t k = 0; k < slots.size(); ++k )
            if ( ( s >> k ) & 1u )
                edges.push_back( slots[ k ] );
        Frame fr = Frame::from_edges( n, edges );
        if ( frame_class( fr ).gl_frame() )
            out.push_back( fr );
    }
    return out;
}

} // namespace

TEST_CASE( "frames validate their input" )
{
    CHECK_THROWS_AS( Frame( { "a", "a" }, {} ), PreconditionError );
    CHECK_THROWS_AS( Frame( { "a" }, { { "a", "b" } } ), PreconditionError );
    Frame fr = fork_frame();
    CHECK( fr.index( "b" ) == 2 );
    CHECK_FALSE( fr.find( "z" ).has_value() );
    CHECK( fr.related( 0, 1 ) );
    CHECK_FALSE( fr.related( 1, 0 ) );
    CHECK_THROWS_AS( Model( fr, { { "p", WorldSet( 2 ) } } ), PreconditionError );
}

TEST_CASE( "model checking on a linear order" )
{
    Model m( linear_frame( 6 ) );
    auto f = parse( "<><><>top & [][][][]bot" );
    for ( std::size_t w = 0; w < 6; ++w )
        CHECK( check( m, w, f ) == ( w == 3 ) );
    for ( std::size_t w = 0; w < 6; ++w )
        CHECK( check( m, w, Formula::top() ) );
    CHECK( rank_formula( 3 ) == f );
}

TEST_CASE( "linearity fails on a fork" )
{
    Frame fr = fork_frame();
    auto lin = parse( "[]([]p -> q) | [](boxplus q -> p)" );
    // with q false everywhere the second disjunct holds vacuously
    Model vacuous( fr, { { "p", set_of( fr, { 1 } ) }, { "q", fr.empty_set() } } );
    CHECK( check( vacuous, "r", lin ) );
    Model m( fr, { { "p", set_of( fr, { 1 } ) }, { "q", set_of( fr, { 2 } ) } } );
    CHECK_FALSE( check( m, "r", lin ) );
    // unknown atoms are false everywhere
    CHECK_FALSE( check( m, "a", parse( "z" ) ) );
    CHECK( check( m, "a", parse( "p & []bot" ) ) );
    CHECK_THROWS_AS( (void)check( m, "r", parse( "[1]p", Language::full_gl() ) ), PreconditionError );
}

TEST_CASE( "frame class flags" )
{
    auto chain = transitive_closure( Frame::from_edges( 3, { { 2, 1 }, { 1, 0 } } ) );
    auto c = frame_class( chain );
    CHECK( c.irreflexive );
    CHECK( c.transitive );
    CHECK( c.c2 );
    CHECK( c.c3 );
    CHECK( c.linear );

    auto f = frame_class( fork_frame() );
    CHECK( f.gl_frame() );
    CHECK( f.c2 );
    CHECK( f.c3 );
    CHECK_FALSE( f.linear );

    auto four = frame_class( Frame::from_edges( 5, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 0, 4 } } ) );
    CHECK_FALSE( four.c2 );
    auto three = frame_class( Frame::from_edges( 4, { { 0, 1 }, { 0, 2 }, { 0, 3 } } ) );
    CHECK_FALSE( three.c2 );

    // two branches of different height are not strongly confluent
    auto uneven = frame_class( transitive_closure( Frame::from_edges( 4, { { 0, 1 }, { 1, 2 }, { 0, 3 } } ) ) );
    CHECK( uneven.c2 );
    CHECK_FALSE( uneven.c3 );

    CHECK_FALSE( frame_class( Frame::from_edges( 2, { { 0, 0 } } ) ).irreflexive );
    CHECK_FALSE( frame_class( Frame::from_edges( 3, { { 0, 1 }, { 1, 2 } } ) ).transitive );
}

TEST_CASE( "generated subframes" )
{
    auto chain = linear_frame( 3 );
    auto top = generated_subframe( chain, 2 );
    CHECK( top.size() == 3 );
    CHECK( top.edges().size() == 3 );
    auto mid = generated_subframe( chain, 1 );
    CHECK( mid.size() == 2 );
    CHECK( mid.edges().size() == 1 );
    CHECK( mid.names() == std::vector< std::string >{ "0", "1" } );
}

TEST_CASE( "restricted substitution" )
{
    Frame fr = linear_frame( 4 );
    Model m( fr );
    std::vector< Formula > D;
    for ( unsigned x = 0; x < 4; ++x )
        D.push_back( rank_formula( x ) );

    auto s = restricted_substitution( m, 3, { { "p", set_of( fr, { 2 } ) } }, D );
    CHECK( s.at( "p" ) == rank_formula( 2 ) );

    s = restricted_substitution( m, 3, { { "p", fr.empty_set() } }, D );
    CHECK( s.at( "p" ) == Formula::bot() );

    s = restricted_substitution( m, 3, { { "p", set_of( fr, { 0, 1 } ) } }, D );
    CHECK( ( s.at( "p" ) == Formula::disj( D[ 0 ], D[ 1 ] ) || s.at( "p" ) == Formula::disj( D[ 1 ], D[ 0 ] ) ) );
    CHECK( truth_set( m, s.at( "p" ) ) == set_of( fr, { 0, 1 } ) );

    // only worlds visible from i are used
    s = restricted_substitution( m, 1, { { "p", set_of( fr, { 0, 3 } ) } }, D );
    CHECK( s.at( "p" ) == rank_formula( 0 ) );

    std::vector< Formula > vague( 4, Formula::top() );
    CHECK_THROWS_AS( (void)restricted_substitution( m, 3, { { "p", fr.empty_set() } }, vague ), PreconditionError );
}

TEST_CASE( "JSON and DOT" )
{
    Frame fr = fork_frame();
    Model m( fr, { { "p", set_of( fr, { 1 } ) } } );
    auto j = model_to_json( m );
    CHECK( j[ "worlds" ].size() == 3 );
    auto back = model_from_json( j );
    CHECK( back.frame().names() == fr.names() );
    CHECK( back.frame().edges() == fr.edges() );
    CHECK( back.atom_set( "p" ) == m.atom_set( "p" ) );

    auto numeric = nlohmann::json::parse( R"({"worlds":[0,1,2],"rel":[[0,1],[0,2],[1,2]],"val":{"q":[2]}})" );
    auto nm = model_from_json( numeric );
    CHECK( nm.frame().name( 2 ) == "2" );
    CHECK( model_to_json( nm ) == numeric );
    CHECK( check( nm, "0", parse( "[][]q" ) ) );

    CHECK_THROWS_AS( (void)frame_from_json( nlohmann::json::parse( R"({"worlds":[0],"rel":[[0,5]]})" ) ),
                     PreconditionError );
    CHECK_THROWS_AS( (void)frame_from_json( nlohmann::json::parse( R"({"rel":[]})" ) ), PreconditionError );

    auto dot = model_to_dot( m, 0 );
    CHECK( dot.find( "doublecircle" ) != std::string::npos );
    CHECK( dot.find( "a: p" ) != std::string::npos );
    CHECK( frame_to_dot( fr ).find( "->" ) != std::string::npos );
}

TEST_CASE( "Q1 is valid on a GL-frame exactly when it is non-triple branching" )
{
    auto q1 = instantiate_schema( Schema::Q1, [] {
        SchemaArgs a;
        a.letters = { { "A", Formula::var( "p" ) }, { "B", Formula::var( "q" ) }, { "C", Formula::var( "r" ) } };
        return a;
    }() );
    std::size_t frames = 0;
    for ( std::size_t n = 1; n <= 4; ++n )
        for ( const auto& fr : all_gl_frames( n ) ) {
            ++frames;
            bool valid = true;
            for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << ( 3 * n ) ) && valid; ++v ) {
                std::map< std::string, WorldSet > val;
                for ( std::size_t k = 0; k < 3; ++k ) {
                    WorldSet s = fr.empty_set();
                    for ( std::size_t w = 0; w < n; ++w )
                        if ( ( v >> ( k * n + w ) ) & 1u )
                            s.set( w );
                    val.emplace( std::string( 1, "pqr"[ k ] ), s );
                }
                valid = truth_set( Model( fr, val ), q1 ).all();
            }
            CHECK( valid == frame_class( fr ).c2 );
        }
    CHECK( frames == 1 + 3 + 19 + 219 );
}
