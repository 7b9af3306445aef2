#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "provlog/cli.hpp"

using namespace provlog;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run( std::vector< std::string > args )
{
    args.insert( args.begin(), "provlog" );
    std::vector< const char* > argv;
    for ( const auto& a : args )
        argv.push_back( a.c_str() );
    std::ostringstream out, err;
    int code = run_cli( static_cast< int >( argv.size() ), argv.data(), out, err );
    return { code, out.str(), err.str() };
}

std::string temp_file( const std::string& name, const std::string& text )
{
    auto path = std::filesystem::temp_directory_path() / ( "provlog_test_" + name );
    std::ofstream( path ) << text;
    return path.string();
}

const std::string linearity = "[]([]p->q) | []((q & []q)->p)";

} // namespace

TEST_CASE( "decide" )
{
    CHECK( run( { "decide", "--logic", "gl3", "--formula", linearity } ).code == 0 );
    CHECK( run( { "decide", "--logic", "gl", "--formula", "top" } ).code == 0 );

    auto r = run( { "decide", "--logic", "gl", "--formula", linearity } );
    CHECK( r.code == 1 );
    CHECK( r.out.find( "digraph" ) != std::string::npos );
    CHECK( r.out.find( "w2" ) != std::string::npos );
    CHECK( r.out.find( "w3" ) == std::string::npos );

    CHECK( run( { "decide", "--logic", "gl4", "--formula", linearity } ).code == 1 );
    CHECK( run( { "decide", "--logic", "glclosed", "--formula", "[]bot | <>top" } ).code == 0 );
    CHECK( run( { "decide", "--logic", "fgl:1", "--formula", "[]([]s1 -> s1) -> []s1" } ).code == 0 );
    CHECK( run( { "decide", "--logic", "fgl:1", "--formula", "s1" } ).code == 1 );
    CHECK( run( { "decide", "--logic", "ilw3", "--formula", "p |> q -> p |> (q & []~p)" } ).code == 0 );
    CHECK( run( { "decide", "--logic", "gl", "--formula", linearity, "--cross-check" } ).code == 1 );
}

TEST_CASE( "decide output is versioned and deterministic" )
{
    std::vector< std::string > args{ "decide", "--logic", "gl", "--formula", linearity, "--json" };
    auto a = run( args );
    auto b = run( args );
    CHECK( a.out == b.out );
    auto j = nlohmann::json::parse( a.out );
    CHECK( j[ "schema" ] == "provlog/1" );
    CHECK( j[ "verdict" ] == "refuted" );
    CHECK( j[ "model" ][ "worlds" ].size() == 3 );

    auto dot = std::filesystem::temp_directory_path() / "provlog_test_cm.dot";
    std::filesystem::remove( dot );
    auto r = run( { "decide", "--logic", "gl", "--formula", linearity, "--dot", dot.string() } );
    CHECK( r.code == 1 );
    CHECK( std::filesystem::exists( dot ) );
}

TEST_CASE( "errors exit with 2" )
{
    CHECK( run( { "decide", "--logic", "gl", "--formula", "p ->" } ).code == 2 );
    CHECK( run( { "decide", "--logic", "nope", "--formula", "p" } ).code == 2 );
    CHECK( run( { "decide", "--logic", "fgl:x", "--formula", "s1" } ).code == 2 );
    CHECK( run( { "decide", "--logic", "gl", "--formula", "p |> q" } ).code == 2 );
    CHECK( run( { "decide", "--formula", "p" } ).code == 2 );
    CHECK( run( {} ).code == 2 );
    CHECK( run( { "experiment", "--suite", "nope" } ).code == 2 );
    CHECK( run( { "modelcheck", "--model", "/nonexistent.json", "--world", "0", "--formula", "p" } ).code == 2 );
    auto r = run( { "normalform", "--n", "1", "--formula", "p" } );
    CHECK( r.code == 2 );
    CHECK( r.err.find( "error" ) != std::string::npos );
}

TEST_CASE( "other subcommands" )
{
    auto nf = run( { "normalform", "--n", "1", "--formula", "[](s1 -> []bot)" } );
    CHECK( nf.code == 0 );
    CHECK( nf.out == "[]^2 bot\n" );

    auto tr = run( { "translate", "--formula", "p |> q" } );
    CHECK( tr.out == "[](p -> q | <>q)\n" );

    auto model = temp_file( "model.json", R"({"worlds":["r","a","b"],"rel":[["r","a"],["r","b"]],"val":{"p":["a"],"q":["b"]}})" );
    CHECK( run( { "modelcheck", "--model", model, "--world", "r", "--formula", linearity } ).code == 1 );
    CHECK( run( { "modelcheck", "--model", model, "--world", "r", "--formula", "<>p & <>q" } ).code == 0 );
    CHECK( run( { "modelcheck", "--model", model, "--world", "zz", "--formula", "p" } ).code == 2 );

    auto frame = temp_file( "frame.json", R"({"worlds":[0,1,2],"rel":[[0,1],[0,2]]})" );
    auto pm = run( { "pmorph", "--frame", frame, "--world", "0" } );
    CHECK( pm.code == 0 );
    auto j = nlohmann::json::parse( pm.out );
    CHECK( j[ "verified" ] == true );
    CHECK( j[ "point" ][ "row" ] == 1 );
    auto wide = temp_file( "wide.json", R"({"worlds":[0,1,2,3],"rel":[[0,1],[0,2],[0,3]]})" );
    CHECK( run( { "pmorph", "--frame", wide, "--world", "0" } ).code == 2 );

    auto ig = run( { "ignatiev", "--bound", "2", "--levels", "1" } );
    CHECK( ig.code == 0 );
    CHECK( ig.out.find( "points:" ) != std::string::npos );
    CHECK( nlohmann::json::parse( run( { "ignatiev", "--export", "json" } ).out )[ "approximate" ] == true );
    CHECK( run( { "ignatiev", "--export", "dot" } ).out.rfind( "digraph", 0 ) == 0 );
    auto lin = run( { "ignatiev", "--linearity", "<0>top", "<1>top" } );
    CHECK( lin.code == 0 );
    CHECK( lin.out.find( "violations: 0" ) != std::string::npos );

    auto ex = run( { "experiment", "--suite", "thm4.5" } );
    CHECK( ex.code == 0 );
    CHECK( ex.out.rfind( "PASS thm4.5", 0 ) == 0 );
}
