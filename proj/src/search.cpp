#include "provlog/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "provlog/closure.hpp"
#include "provlog/pmorphism.hpp"

namespace provlog {

unsigned default_threads()
{
    if ( const char* env = std::getenv( "PROVLOG_THREADS" ) ) {
        char* end = nullptr;
        long v = std::strtol( env, &end, 10 );
        if ( end != env && *end == '\0' && v >= 1 && v <= 1024 )
            return static_cast< unsigned >( v );
    }
    return std::max( 1u, std::thread::hardware_concurrency() );
}

void require_kripke_formula( const Formula& f )
{
    if ( contains_rhd( f ) )
        throw PreconditionError( "formula contains |>; translate it first" );
    if ( max_box_level( f ) > 0 )
        throw PreconditionError( "formula uses boxes above level 0" );
}

namespace {

using Mask = std::uint64_t;
using Relation = std::vector< Mask >;  // successor mask per world

constexpr std::size_t kMaxMaskWorlds = 64;
constexpr std::size_t kMaxGLWorlds = 8;
constexpr std::size_t kMaxIrreflexiveWorlds = 5;
constexpr std::size_t kMaxValuationBits = 30;

Mask bit( std::size_t i ) { return Mask{ 1 } << i; }

bool transitive( const Relation& r )
{
    for ( std::size_t a = 0; a < r.size(); ++a )
        for ( std::size_t b = 0; b < r.size(); ++b )
            if ( ( r[ a ] & bit( b ) ) && ( r[ b ] & ~r[ a ] ) )
                return false;
    return true;
}

bool reachable_from_root( const Relation& r )
{
    Mask seen = 1, frontier = 1;
    while ( frontier ) {
        Mask next = 0;
        for ( std::size_t w = 0; w < r.size(); ++w )
            if ( frontier & bit( w ) )
                next |= r[ w ];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == ( r.size() == 64 ? ~Mask{ 0 } : bit( r.size() ) - 1 );
}

// Relation bitmask a*n+b, compared as a big integer.
bool mask_less( const Relation& x, const Relation& y )
{
    const auto n = x.size();
    for ( std::size_t idx = n * n; idx-- > 0; ) {
        bool bx = x[ idx / n ] & bit( idx % n );
        bool by = y[ idx / n ] & bit( idx % n );
        if ( bx != by )
            return by;
    }
    return false;
}

void level_sequences( std::size_t remaining, std::vector< std::size_t >& widths,
                      std::vector< std::vector< std::size_t > >& out )
{
    if ( remaining == 0 ) {
        out.push_back( widths );
        return;
    }
    for ( std::size_t w : { 1u, 2u } ) {
        if ( w > remaining )
            continue;
        widths.push_back( w );
        level_sequences( remaining - w, widths, out );
        widths.pop_back();
    }
}

std::vector< Relation > rooted_relations( FrameClass cls, std::size_t n )
{
    if ( n == 0 )
        return {};
    if ( n > kMaxMaskWorlds )
        throw ResourceLimit( "frame enumeration supports at most 64 worlds", "requested " + std::to_string( n ) );
    std::vector< Relation > out;
    switch ( cls ) {
    case FrameClass::Linear: {
        Relation r( n, 0 );
        for ( std::size_t a = 0; a < n; ++a )
            for ( std::size_t b = a + 1; b < n; ++b )
                r[ a ] |= bit( b );
        out.push_back( r );
        break;
    }
    case FrameClass::GL: {
        if ( n > kMaxGLWorlds )
            throw ResourceLimit( "GL-frame enumeration is capped at 8 worlds", "requested " + std::to_string( n ) );
        std::vector< std::pair< std::size_t, std::size_t > > free;
        for ( std::size_t a = 1; a < n; ++a )
            for ( std::size_t b = a + 1; b < n; ++b )
                free.emplace_back( a, b );
        for ( Mask s = 0; s < bit( free.size() ); ++s ) {
            Relation r( n, 0 );
            for ( std::size_t b = 1; b < n; ++b )
                r[ 0 ] |= bit( b );
            for ( std::size_t k = 0; k < free.size(); ++k )
                if ( s & bit( k ) )
                    r[ free[ k ].first ] |= bit( free[ k ].second );
            if ( transitive( r ) )
                out.push_back( std::move( r ) );
        }
        break;
    }
    case FrameClass::C: {
        std::vector< std::vector< std::size_t > > seqs;
        std::vector< std::size_t > widths;
        level_sequences( n - 1, widths, seqs );
        for ( const auto& seq : seqs ) {
            std::vector< std::size_t > level( n, 0 );
            std::size_t w = 1;
            for ( std::size_t l = 0; l < seq.size(); ++l )
                for ( std::size_t k = 0; k < seq[ l ]; ++k )
                    level[ w++ ] = l + 1;
            Relation r( n, 0 );
            for ( std::size_t a = 0; a < n; ++a )
                for ( std::size_t b = 0; b < n; ++b )
                    if ( level[ a ] < level[ b ] )
                        r[ a ] |= bit( b );
            out.push_back( std::move( r ) );
        }
        std::sort( out.begin(), out.end(), mask_less );
        break;
    }
    case FrameClass::Irreflexive: {
        if ( n > kMaxIrreflexiveWorlds )
            throw ResourceLimit( "irreflexive-frame enumeration is capped at 5 worlds",
                                 "requested " + std::to_string( n ) );
        std::vector< std::pair< std::size_t, std::size_t > > free;
        for ( std::size_t a = 0; a < n; ++a )
            for ( std::size_t b = 0; b < n; ++b )
                if ( a != b )
                    free.emplace_back( a, b );
        for ( Mask s = 0; s < bit( free.size() ); ++s ) {
            Relation r( n, 0 );
            for ( std::size_t k = 0; k < free.size(); ++k )
                if ( s & bit( k ) )
                    r[ free[ k ].first ] |= bit( free[ k ].second );
            if ( reachable_from_root( r ) )
                out.push_back( std::move( r ) );
        }
        break;
    }
    }
    return out;
}

Frame to_frame( const Relation& r )
{
    std::vector< std::pair< std::size_t, std::size_t > > edges;
    for ( std::size_t a = 0; a < r.size(); ++a )
        for ( std::size_t b = 0; b < r.size(); ++b )
            if ( r[ a ] & bit( b ) )
                edges.emplace_back( a, b );
    return Frame::from_edges( r.size(), edges );
}

// Truth sets as world masks over a closure.
class MaskEvaluator
{
public:
    explicit MaskEvaluator( const Closure& c ) : _c{ c }, _vals( c.size() ) {}

    // Returns the truth mask of the root node.
    Mask run( const Relation& r, const std::vector< Mask >& atom_masks )
    {
        const auto n = r.size();
        const Mask all = n == 64 ? ~Mask{ 0 } : bit( n ) - 1;
        for ( std::size_t i = 0; i < _c.size(); ++i ) {
            const auto& node = _c.node( i );
            switch ( node.kind ) {
            case Formula::Kind::Bot: _vals[ i ] = 0; break;
            case Formula::Kind::Var:
            case Formula::Kind::Const: _vals[ i ] = atom_masks[ _c.atom_slot( static_cast< int >( i ) ) ]; break;
            case Formula::Kind::Implies: _vals[ i ] = ( ~_vals[ node.lhs ] | _vals[ node.rhs ] ) & all; break;
            case Formula::Kind::Box: {
                Mask s = 0;
                const Mask body = _vals[ node.lhs ];
                for ( std::size_t w = 0; w < n; ++w )
                    if ( ( r[ w ] & ~body ) == 0 )
                        s |= bit( w );
                _vals[ i ] = s;
                break;
            }
            case Formula::Kind::Rhd: throw PreconditionError( "mask evaluation does not interpret |>" );
            }
        }
        return _vals[ _c.root() ];
    }

private:
    const Closure& _c;
    std::vector< Mask > _vals;
};

Model build_model( const Closure& c, const Frame& frame, Mask valuation )
{
    const auto n = frame.size();
    std::map< std::string, WorldSet > val;
    for ( std::size_t k = 0; k < c.atoms().size(); ++k ) {
        WorldSet s( n );
        for ( std::size_t w = 0; w < n; ++w )
            if ( valuation & bit( k * n + w ) )
                s.set( w );
        val.emplace( c.formula( c.atoms()[ k ] ).atom_name(), std::move( s ) );
    }
    return Model( frame, std::move( val ) );
}

} // namespace

std::vector< Frame > rooted_frames( FrameClass cls, std::size_t n )
{
    std::vector< Frame > out;
    for ( const auto& r : rooted_relations( cls, n ) )
        out.push_back( to_frame( r ) );
    return out;
}

std::optional< PointedModel > countermodel_search( const Formula& f, FrameClass cls, std::size_t max_worlds,
                                                   SearchOptions opts )
{
    require_kripke_formula( f );
    if ( max_worlds == 0 )
        throw PreconditionError( "max_worlds must be at least 1" );
    Closure c( f );
    const std::size_t k = c.atoms().size();

    for ( std::size_t n = 1; n <= max_worlds; ++n ) {
        const std::string progress = "no countermodel with fewer than " + std::to_string( n ) + " worlds";
        if ( k * n > kMaxValuationBits )
            throw ResourceLimit( "valuation enumeration exceeds 2^30 per frame", progress );
        std::vector< Relation > frames;
        try {
            frames = rooted_relations( cls, n );
        } catch ( const ResourceLimit& e ) {
            throw ResourceLimit( e.what(), progress );
        }
        const Mask valuations = bit( k * n );
        const Mask world_mask = bit( n ) - 1;

        constexpr auto none = static_cast< std::size_t >( -1 );
        std::atomic< std::size_t > best_frame{ none };
        std::atomic< std::size_t > next{ 0 };
        std::vector< Mask > best_val( frames.size(), 0 );
        std::exception_ptr failure;
        std::mutex failure_lock;

        auto worker = [ & ]( Budget budget ) {
            try {
                MaskEvaluator ev( c );
                std::vector< Mask > atom_masks( k );
                for ( ;; ) {
                    auto idx = next.fetch_add( 1 );
                    if ( idx >= frames.size() || idx >= best_frame.load() )
                        return;
                    for ( Mask v = 0; v < valuations; ++v ) {
                        budget.tick( "countermodel enumeration" );
                        for ( std::size_t a = 0; a < k; ++a )
                            atom_masks[ a ] = ( v >> ( a * n ) ) & world_mask;
                        if ( ( ev.run( frames[ idx ], atom_masks ) & 1 ) == 0 ) {
                            best_val[ idx ] = v;
                            auto cur = best_frame.load();
                            while ( idx < cur && !best_frame.compare_exchange_weak( cur, idx ) ) {}
                            break;
                        }
                    }
                }
            } catch ( ... ) {
                std::lock_guard lock( failure_lock );
                if ( !failure )
                    failure = std::current_exception();
                next.store( frames.size() );
            }
        };

        const unsigned threads = std::max( 1u, std::min< unsigned >( opts.threads, static_cast< unsigned >( frames.size() ) ) );
        if ( threads == 1 ) {
            worker( opts.budget );
        } else {
            std::vector< std::thread > pool;
            for ( unsigned t = 0; t < threads; ++t )
                pool.emplace_back( worker, opts.budget );
            for ( auto& th : pool )
                th.join();
        }
        if ( failure ) {
            try {
                std::rethrow_exception( failure );
            } catch ( const ResourceLimit& e ) {
                throw ResourceLimit( "time limit exceeded in countermodel enumeration", progress );
            }
        }
        if ( auto idx = best_frame.load(); idx != none )
            return PointedModel{ build_model( c, to_frame( frames[ idx ] ), best_val[ idx ] ), 0 };
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::optional< PointedModel > layered_countermodel_search( const Formula& f, LayerShape shape, std::size_t max_cost,
                                                           Budget& budget )
{
    require_kripke_formula( f );
    Closure c( f );
    const std::size_t k = c.atoms().size();
    const std::size_t b = c.boxes().size();
    if ( b > 64 )
        throw ResourceLimit( "more than 64 distinct boxes", "layered search not started" );
    if ( k > 16 )
        throw ResourceLimit( "more than 16 atoms", "layered search not started" );
    const Mask full = b == 64 ? ~Mask{ 0 } : bit( b ) - 1;
    const Mask assignments = bit( k );
    const int root = c.root();

    struct Reach
    {
        Mask prev = 0;
        std::vector< Mask > level;  // atom assignments of the points on the newest level
        std::size_t cost = 0;
    };
    std::unordered_map< Mask, Reach > seen;
    std::vector< std::vector< Mask > > buckets( max_cost + 3 );
    seen.emplace( full, Reach{} );
    buckets[ 0 ].push_back( full );

    // Cost of a prefix: worlds so far (Linear, ClassC) or rows (G1).
    auto root_fits = [ & ]( std::size_t cost ) { return shape == LayerShape::G1 ? cost <= max_cost : cost + 1 <= max_cost; };

    std::vector< char > vals;
    std::vector< Mask > bodies( assignments );
    std::vector< char > falsified( assignments );

    for ( std::size_t cost = 0; cost < buckets.size() && root_fits( cost ); ++cost ) {
        for ( std::size_t pos = 0; pos < buckets[ cost ].size(); ++pos ) {
            const Mask beta = buckets[ cost ][ pos ];
            if ( seen.at( beta ).cost != cost )
                continue;  // reached more cheaply later on
            for ( Mask a = 0; a < assignments; ++a ) {
                budget.tick( "layered search" );
                c.evaluate_point( a, beta, vals );
                bodies[ a ] = c.true_bodies( vals );
                falsified[ a ] = !vals[ root ];
            }
            for ( Mask a = 0; a < assignments; ++a ) {
                if ( !falsified[ a ] )
                    continue;
                // Rebuild the levels, newest (topmost) first.
                std::vector< std::vector< Mask > > levels;
                for ( Mask s = beta; s != full; ) {
                    const auto& r = seen.at( s );
                    levels.push_back( r.level );
                    s = r.prev;
                }
                Frame frame;
                std::vector< Mask > point_assignment{ a };
                if ( shape == LayerShape::G1 ) {
                    frame = gn_generated_frame( 1, static_cast< unsigned >( levels.size() ), 0 );
                } else {
                    std::vector< std::size_t > height{ levels.size() + 1 };
                    for ( std::size_t l = 0; l < levels.size(); ++l )
                        for ( auto pa : levels[ l ] ) {
                            point_assignment.push_back( pa );
                            height.push_back( levels.size() - l );
                        }
                    std::vector< std::pair< std::size_t, std::size_t > > edges;
                    for ( std::size_t x = 0; x < height.size(); ++x )
                        for ( std::size_t y = 0; y < height.size(); ++y )
                            if ( height[ x ] > height[ y ] )
                                edges.emplace_back( x, y );
                    frame = Frame::from_edges( height.size(), edges );
                }
                if ( shape == LayerShape::G1 )
                    for ( const auto& lv : levels )
                        point_assignment.insert( point_assignment.end(), lv.begin(), lv.end() );

                std::map< std::string, WorldSet > val;
                for ( std::size_t atom = 0; atom < k; ++atom ) {
                    WorldSet s( frame.size() );
                    for ( std::size_t w = 0; w < frame.size(); ++w )
                        if ( point_assignment[ w ] & bit( atom ) )
                            s.set( w );
                    val.emplace( c.formula( c.atoms()[ atom ] ).atom_name(), std::move( s ) );
                }
                PointedModel hit{ Model( std::move( frame ), std::move( val ) ), 0 };
                if ( check( hit.model, hit.world, f ) )
                    throw std::logic_error( "layered search produced a model that does not falsify " + print( f ) );
                return hit;
            }

            auto push = [ & ]( std::size_t new_cost, Mask next, std::vector< Mask > level ) {
                if ( new_cost >= buckets.size() || !root_fits( new_cost ) )
                    return;
                auto [ it, fresh ] = seen.try_emplace( next, Reach{ beta, level, new_cost } );
                if ( !fresh ) {
                    if ( it->second.cost <= new_cost )
                        return;
                    it->second = Reach{ beta, std::move( level ), new_cost };
                }
                buckets[ new_cost ].push_back( next );
            };
            switch ( shape ) {
            case LayerShape::Linear:
                for ( Mask a = 0; a < assignments; ++a )
                    push( cost + 1, beta & bodies[ a ], { a } );
                break;
            case LayerShape::ClassC:
                for ( Mask a = 0; a < assignments; ++a )
                    push( cost + 1, beta & bodies[ a ], { a } );
                for ( Mask a = 0; a < assignments; ++a )
                    for ( Mask a2 = a + 1; a2 < assignments; ++a2 )
                        push( cost + 2, beta & bodies[ a ] & bodies[ a2 ], { a, a2 } );
                break;
            case LayerShape::G1:
                for ( Mask a = 0; a < assignments; ++a )
                    for ( Mask a2 = a; a2 < assignments; ++a2 )
                        push( cost + 1, beta & bodies[ a ] & bodies[ a2 ], { a, a2 } );
                break;
            }
        }
    }
    return std::nullopt;
}

} // namespace provlog
