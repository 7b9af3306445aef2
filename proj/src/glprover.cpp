#include "provlog/glprover.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "provlog/closure.hpp"
#include "provlog/search.hpp"

namespace provlog {

namespace {

using Mask = std::uint64_t;

Mask bit( std::size_t i ) { return Mask{ 1 } << i; }

// A world of an extracted countermodel: the atoms it makes true and the
// worlds it sees directly. Shared subtrees are shared nodes.
struct TreeNode
{
    std::vector< std::string > atoms;
    std::vector< std::shared_ptr< const TreeNode > > kids;
};
using Tree = std::shared_ptr< const TreeNode >;

constexpr std::size_t kMaxExtractedWorlds = 5000;

PointedModel flatten( const Tree& root )
{
    std::vector< const TreeNode* > order;
    std::unordered_map< const TreeNode*, std::size_t > id;
    id.emplace( root.get(), 0 );
    order.push_back( root.get() );
    for ( std::size_t i = 0; i < order.size(); ++i )
        for ( const auto& k : order[ i ]->kids )
            if ( id.emplace( k.get(), order.size() ).second ) {
                order.push_back( k.get() );
                if ( order.size() > kMaxExtractedWorlds )
                    throw ResourceLimit( "extracted countermodel too large", "more than 5000 worlds" );
            }
    std::vector< std::pair< std::size_t, std::size_t > > edges;
    for ( std::size_t i = 0; i < order.size(); ++i )
        for ( const auto& k : order[ i ]->kids )
            edges.emplace_back( i, id.at( k.get() ) );
    Frame fr = transitive_closure( Frame::from_edges( order.size(), edges ) );
    std::map< std::string, WorldSet > val;
    for ( std::size_t i = 0; i < order.size(); ++i )
        for ( const auto& a : order[ i ]->atoms ) {
            auto [ it, fresh ] = val.try_emplace( a, fr.empty_set() );
            it->second.set( i );
        }
    return { Model( std::move( fr ), std::move( val ) ), 0 };
}

class SequentSearch
{
public:
    SequentSearch( const Closure& c, Budget& budget ) : _c{ c }, _budget{ budget } {}

    // nullptr when gamma => delta is derivable, else the root of a countermodel.
    Tree refute( std::vector< int > gamma, std::vector< int > delta )
    {
        _budget.tick( "sequent search" );
        normalize( gamma );
        normalize( delta );
        auto key = std::make_pair( gamma, delta );
        if ( auto it = _memo.find( key ); it != _memo.end() )
            return it->second;
        auto result = solve( gamma, delta );
        _memo.emplace( std::move( key ), result );
        return result;
    }

private:
    static void normalize( std::vector< int >& v )
    {
        std::sort( v.begin(), v.end() );
        v.erase( std::unique( v.begin(), v.end() ), v.end() );
    }

    Formula::Kind kind( int i ) const { return _c.node( i ).kind; }

    Tree solve( const std::vector< int >& gamma, const std::vector< int >& delta )
    {
        for ( int g : gamma ) {
            if ( kind( g ) == Formula::Kind::Bot )
                return nullptr;
            if ( std::binary_search( delta.begin(), delta.end(), g ) )
                return nullptr;
        }
        for ( std::size_t k = 0; k < gamma.size(); ++k ) {
            if ( kind( gamma[ k ] ) != Formula::Kind::Implies )
                continue;
            const auto& n = _c.node( gamma[ k ] );
            auto rest = gamma;
            rest.erase( rest.begin() + static_cast< std::ptrdiff_t >( k ) );
            auto g1 = rest;
            g1.push_back( n.rhs );
            if ( auto t = refute( g1, delta ) )
                return t;
            auto d2 = delta;
            d2.push_back( n.lhs );
            return refute( rest, d2 );
        }
        for ( std::size_t k = 0; k < delta.size(); ++k ) {
            if ( kind( delta[ k ] ) != Formula::Kind::Implies )
                continue;
            const auto& n = _c.node( delta[ k ] );
            auto g1 = gamma;
            g1.push_back( n.lhs );
            auto d1 = delta;
            d1.erase( d1.begin() + static_cast< std::ptrdiff_t >( k ) );
            d1.push_back( n.rhs );
            return refute( g1, d1 );
        }

        // Only atoms, boxes and bot remain: one Loeb premise per box on the right.
        std::vector< int > boxed_left;
        for ( int g : gamma )
            if ( kind( g ) == Formula::Kind::Box ) {
                boxed_left.push_back( g );
                boxed_left.push_back( _c.node( g ).lhs );
            }
        auto node = std::make_shared< TreeNode >();
        for ( int g : gamma )
            if ( kind( g ) == Formula::Kind::Var || kind( g ) == Formula::Kind::Const )
                node->atoms.push_back( _c.formula( g ).atom_name() );
        for ( int d : delta ) {
            if ( kind( d ) != Formula::Kind::Box )
                continue;
            auto g1 = boxed_left;
            g1.push_back( d );
            auto t = refute( g1, { _c.node( d ).lhs } );
            if ( !t )
                return nullptr;
            node->kids.push_back( std::move( t ) );
        }
        return node;
    }

    const Closure& _c;
    Budget& _budget;
    std::map< std::pair< std::vector< int >, std::vector< int > >, Tree > _memo;
};

void verify_refutation( const PointedModel& pm, const Formula& f, const char* engine )
{
    if ( check( pm.model, pm.world, f ) )
        throw std::logic_error( std::string( engine ) + " returned a model that does not falsify " + print( f ) );
}

Refuted make_refuted( PointedModel pm, std::string note, std::vector< std::string > trace )
{
    return Refuted{ std::move( pm.model ), pm.world, std::move( note ), std::move( trace ) };
}

// Largest world count the brute-force oracle can enumerate for f.
std::size_t brute_force_cap( const Formula& f, FrameClass cls, std::size_t requested )
{
    std::size_t k = atoms( f ).size();
    std::size_t cap = requested;
    if ( k > 0 )
        cap = std::min< std::size_t >( cap, 30 / k );
    if ( cls == FrameClass::GL )
        cap = std::min< std::size_t >( cap, 8 );
    if ( cls == FrameClass::Irreflexive )
        cap = std::min< std::size_t >( cap, 5 );
    return cap;
}

void disagreement( const std::string& what, const Formula& f )
{
    throw std::logic_error( "engines disagree on " + print( f ) + ": " + what );
}

} // namespace

// ---------------------------------------------------------------------------

std::optional< PointedModel > gl_sequent_search( const Formula& f, Budget& budget )
{
    require_kripke_formula( f );
    Closure c( f );
    SequentSearch search( c, budget );
    auto tree = search.refute( {}, { c.root() } );
    if ( !tree )
        return std::nullopt;
    auto pm = flatten( tree );
    verify_refutation( pm, f, "sequent search" );
    return pm;
}

std::optional< PointedModel > gl_type_search( const Formula& f, Budget& budget )
{
    require_kripke_formula( f );
    Closure c( f );
    const std::size_t b = c.boxes().size();
    const std::size_t k = c.atoms().size();
    if ( b > 12 || k > 12 )
        throw ResourceLimit( "type elimination needs <= 12 boxes and <= 12 atoms",
                             std::to_string( b ) + " boxes, " + std::to_string( k ) + " atoms" );
    const Mask full = bit( b ) - 1;
    const Mask assignments = bit( k );

    std::vector< Mask > order;
    for ( Mask beta = 0; beta <= full; ++beta )
        order.push_back( beta );
    std::stable_sort( order.begin(), order.end(),
                      []( Mask x, Mask y ) { return std::popcount( x ) > std::popcount( y ); } );

    struct TypeInfo
    {
        bool realizable = false;
        std::vector< Mask > bodies;    // per atom assignment
        std::vector< char > root_true; // per atom assignment
        std::vector< std::pair< Mask, Mask > > witness;  // per missing box: (beta', a')
    };
    std::vector< TypeInfo > info( full + 1 );
    std::vector< char > vals;

    for ( Mask beta : order ) {
        auto& ti = info[ beta ];
        ti.bodies.resize( assignments );
        ti.root_true.resize( assignments );
        for ( Mask a = 0; a < assignments; ++a ) {
            budget.tick( "type elimination" );
            c.evaluate_point( a, beta, vals );
            ti.bodies[ a ] = c.true_bodies( vals );
            ti.root_true[ a ] = vals[ c.root() ];
        }
        ti.realizable = true;
        for ( std::size_t j = 0; j < b && ti.realizable; ++j ) {
            if ( beta & bit( j ) )
                continue;
            const Mask need = beta | bit( j );
            const Mask spare = full & ~need;
            bool found = false;
            // supersets of need, via submasks of the spare bits
            for ( Mask s = spare;; s = ( s - 1 ) & spare ) {
                budget.tick( "type elimination" );
                const auto& wi = info[ need | s ];
                if ( wi.realizable )
                    for ( Mask a = 0; a < assignments; ++a )
                        if ( !( wi.bodies[ a ] & bit( j ) ) && ( wi.bodies[ a ] & beta ) == beta ) {
                            ti.witness.emplace_back( need | s, a );
                            found = true;
                            break;
                        }
                if ( found || s == 0 )
                    break;
            }
            ti.realizable = found;
        }
    }

    for ( Mask beta : order ) {
        const auto& ti = info[ beta ];
        if ( !ti.realizable )
            continue;
        for ( Mask a = 0; a < assignments; ++a ) {
            if ( ti.root_true[ a ] )
                continue;
            // Build the DAG of types below (beta, a).
            std::map< std::pair< Mask, Mask >, Tree > built;
            std::function< Tree( Mask, Mask ) > make = [ & ]( Mask bt, Mask at ) -> Tree {
                if ( auto it = built.find( { bt, at } ); it != built.end() )
                    return it->second;
                auto node = std::make_shared< TreeNode >();
                for ( std::size_t x = 0; x < k; ++x )
                    if ( at & bit( x ) )
                        node->atoms.push_back( c.formula( c.atoms()[ x ] ).atom_name() );
                for ( auto [ wb, wa ] : info[ bt ].witness )
                    node->kids.push_back( make( wb, wa ) );
                built.emplace( std::make_pair( bt, at ), node );
                return node;
            };
            auto pm = flatten( make( beta, a ) );
            verify_refutation( pm, f, "type elimination" );
            return pm;
        }
    }
    return std::nullopt;
}

Verdict decide_gl( const Formula& f, const DecideOptions& opts )
{
    require_kripke_formula( f );
    Budget budget( opts.timeout );
    std::vector< std::string > trace;

    auto seq = gl_sequent_search( f, budget );
    trace.push_back( seq ? "sequent search: open branch, countermodel extracted with "
                               + std::to_string( seq->model.frame().size() ) + " worlds"
                         : "sequent search: every branch closed" );

    std::optional< PointedModel > smallest;
    if ( opts.cross_check ) {
        if ( box_count( f ) <= 12 && atoms( f ).size() <= 12 ) {
            auto ty = gl_type_search( f, budget );
            if ( ty.has_value() != seq.has_value() )
                disagreement( "sequent search vs type elimination", f );
            trace.push_back( ty ? "type elimination: falsifying type found" : "type elimination: no falsifying type" );
        } else {
            trace.push_back( "type elimination: skipped, more than 12 boxes or atoms" );
        }
        auto cap = brute_force_cap( f, FrameClass::GL, opts.max_worlds );
        if ( cap >= 1 ) {
            smallest = countermodel_search( f, FrameClass::GL, cap, SearchOptions{ opts.threads, budget } );
            if ( smallest && !seq )
                disagreement( "brute force found a countermodel to a derivable formula", f );
            trace.push_back( "brute force over GL-frames up to " + std::to_string( cap ) + " worlds: "
                             + ( smallest ? "countermodel found" : "none" ) );
        }
    }
    if ( !seq )
        return Provable{ std::move( trace ) };

    // Prefer the least countermodel when it is cheap to find.
    if ( !smallest ) {
        auto k = atoms( f ).size();
        auto cap = std::min( { seq->model.frame().size() - 1, opts.max_worlds, std::size_t{ 8 } } );
        if ( k > 0 )
            cap = std::min( cap, 20 / k );
        if ( cap >= 1 ) {
            try {
                smallest = countermodel_search( f, FrameClass::GL, cap, SearchOptions{ opts.threads, budget } );
            } catch ( const ResourceLimit& ) {
                smallest.reset();
            }
        }
    }
    PointedModel pm = smallest ? std::move( *smallest ) : std::move( *seq );
    verify_refutation( pm, f, "decide_gl" );
    return make_refuted( std::move( pm ), "finite irreflexive transitive model", std::move( trace ) );
}

Verdict decide_gl3( const Formula& f, const DecideOptions& opts )
{
    require_kripke_formula( f );
    Budget budget( opts.timeout );
    const auto bound = subformulas( f ).size() + 1;
    std::vector< std::string > trace;

    auto hit = layered_countermodel_search( f, LayerShape::Linear, bound, budget );
    trace.push_back( "chains up to " + std::to_string( bound ) + " worlds: "
                     + ( hit ? "falsified on " + std::to_string( hit->model.frame().size() ) + " worlds" : "none falsify" ) );

    if ( opts.cross_check ) {
        auto cap = brute_force_cap( f, FrameClass::Linear, std::min( opts.max_worlds, bound ) );
        if ( cap >= 1 ) {
            auto brute = countermodel_search( f, FrameClass::Linear, cap, SearchOptions{ opts.threads, budget } );
            if ( brute && ( !hit || hit->model.frame().size() != brute->model.frame().size() ) )
                disagreement( "shortest falsifying chain differs from brute force", f );
            if ( !brute && hit && hit->model.frame().size() <= cap )
                disagreement( "brute force missed a short falsifying chain", f );
            trace.push_back( "brute force over chains up to " + std::to_string( cap ) + " worlds agrees" );
        }
    }
    if ( !hit )
        return Provable{ std::move( trace ) };
    verify_refutation( *hit, f, "decide_gl3" );
    auto n = hit->model.frame().size();
    return make_refuted( std::move( *hit ), "strict linear order of " + std::to_string( n ) + " worlds, world 0 on top",
                         std::move( trace ) );
}

Verdict decide_gl_closed( const Formula& f, const DecideOptions& )
{
    require_fragment( f, Language::closed_b() );
    const auto d = modal_depth( f );
    Model m( linear_frame( d + 1 ) );
    auto truth = truth_set( m, f );
    std::vector< std::string > trace;
    for ( unsigned r = 0; r <= d; ++r ) {
        trace.push_back( "rank " + std::to_string( r ) + ": " + ( truth.test( r ) ? "true" : "false" ) );
        if ( !truth.test( r ) )
            return Refuted{ std::move( m ), r, "rank " + std::to_string( r ) + " of the linear frame", std::move( trace ) };
    }
    trace.push_back( "ranks above " + std::to_string( d ) + " behave like rank " + std::to_string( d ) );
    return Provable{ std::move( trace ) };
}

Verdict decide_gl4( const Formula& f, GL4Engine engine, const DecideOptions& opts )
{
    require_kripke_formula( f );
    Budget budget( opts.timeout );
    const auto bound = 1 + 2 * box_count( f );
    std::vector< std::string > trace;
    if ( engine == GL4Engine::ClassC ) {
        auto hit = layered_countermodel_search( f, LayerShape::ClassC, bound, budget );
        trace.push_back( "class C frames up to " + std::to_string( bound ) + " worlds: "
                         + ( hit ? "falsified" : "none falsify" ) );
        if ( !hit )
            return Provable{ std::move( trace ) };
        verify_refutation( *hit, f, "decide_gl4" );
        if ( !frame_class( hit->model.frame() ).in_class_c() )
            throw std::logic_error( "class C search produced a frame outside class C" );
        return make_refuted( std::move( *hit ), "frame of class C", std::move( trace ) );
    }
    auto hit = layered_countermodel_search( f, LayerShape::G1, bound, budget );
    trace.push_back( "G_1 points up to row " + std::to_string( bound ) + ": " + ( hit ? "falsified" : "none falsify" ) );
    if ( !hit )
        return Provable{ std::move( trace ) };
    verify_refutation( *hit, f, "decide_gl4" );
    auto rows = ( hit->model.frame().size() - 1 ) / 2;
    return make_refuted( std::move( *hit ), "subframe of G_1 generated by <" + std::to_string( rows ) + ",0>",
                         std::move( trace ) );
}

Verdict decide_gl4( const Formula& f, const DecideOptions& opts )
{
    auto main = decide_gl4( f, GL4Engine::ClassC, opts );
    if ( !opts.cross_check )
        return main;
    auto other = decide_gl4( f, GL4Engine::G1, opts );
    if ( is_provable( main ) != is_provable( other ) )
        disagreement( "class C search vs G_1 search", f );
    Budget budget( opts.timeout );
    auto cap = brute_force_cap( f, FrameClass::C, opts.max_worlds );
    std::string note;
    if ( cap >= 1 ) {
        auto brute = countermodel_search( f, FrameClass::C, cap, SearchOptions{ opts.threads, budget } );
        if ( brute ) {
            const auto* r = std::get_if< Refuted >( &main );
            if ( !r || r->model.frame().size() != brute->model.frame().size() )
                disagreement( "least class C countermodel differs from brute force", f );
        } else if ( const auto* r = std::get_if< Refuted >( &main ); r && r->model.frame().size() <= cap ) {
            disagreement( "brute force missed a small class C countermodel", f );
        }
        note = "brute force over class C up to " + std::to_string( cap ) + " worlds agrees";
    }
    std::visit(
        [ & ]( auto& v ) {
            v.trace.push_back( "G_1 search agrees" );
            if ( !note.empty() )
                v.trace.push_back( note );
        },
        main );
    return main;
}

} // namespace provlog
