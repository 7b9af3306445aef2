#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "provlog/error.hpp"
#include "provlog/kripke.hpp"

namespace provlog {

enum class FrameClass {
    GL,           // finite, irreflexive, transitive
    Linear,       // finite strict linear orders
    C,            // GL-frames satisfying C2 and C3
    Irreflexive,  // irreflexive, transitivity not required
};

struct SearchOptions
{
    unsigned threads = 1;
    Budget budget;
};

// Thread count from PROVLOG_THREADS, else the hardware concurrency (at least 1).
[[nodiscard]] unsigned default_threads();

// Throws PreconditionError unless f is free of |> and of boxes above level 0.
void require_kripke_formula( const Formula& f );

/// Every rooted frame of the class on n worlds, root = world 0, up to
/// isomorphism for GL/Linear/C (worlds are topologically labelled), in
/// ascending order of the relation bitmask (bit a*n+b for the edge a R b).
/// Irreflexive lists every labelled relation in which all worlds are
/// reachable from 0.
[[nodiscard]] std::vector< Frame > rooted_frames( FrameClass cls, std::size_t n );

/// Exhaustive search for a model falsifying f at world 0: frames by world
/// count, then relation bitmask, then valuation bitmask (bit k*n+w: atom k
/// at world w). Returns the first hit in that order regardless of thread
/// count. Throws ResourceLimit when the enumeration would exceed its caps
/// (GL <= 8 worlds, Irreflexive <= 5, atoms*worlds <= 30 valuation bits) or
/// the budget runs out.
[[nodiscard]] std::optional< PointedModel > countermodel_search( const Formula& f, FrameClass cls,
                                                                 std::size_t max_worlds,
                                                                 SearchOptions opts = {} );

enum class LayerShape {
    Linear,  // levels of one point
    ClassC,  // levels of one point or two incomparable points
    G1,      // rows of two points, as in G_1
};

/// Shortest-first search over frames built from a root placed above a
/// sequence of levels, each level seeing every level below it. Instead of
/// enumerating valuations it tracks, per prefix of levels, the set of boxes
/// that would be true at a point placed above them; two prefixes with the
/// same set are interchangeable. `max_cost` bounds the number of worlds
/// (Linear, ClassC) or of rows below the root (G1). For G1 the model lives
/// on gn_generated_frame(1, m, 0).
[[nodiscard]] std::optional< PointedModel > layered_countermodel_search( const Formula& f, LayerShape shape,
                                                                         std::size_t max_cost, Budget& budget );

} // namespace provlog
