#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "provlog/error.hpp"

namespace provlog {

/// Immutable modal formula over the core connectives
///   bot | variable | constant s_i | A -> B | [n]A | A |> B.
///
/// Negation, conjunction, disjunction, top, diamonds, `boxplus` and `<->` are
/// smart constructors that expand into the core, so every engine only has to
/// handle the five (six with `|>`) node kinds. Plain `[]` is `[0]`.
///
/// Nodes are shared; copying a Formula is a reference-count bump. Equality is
/// structural.
class Formula
{
public:
    enum class Kind : std::uint8_t { Bot, Var, Const, Implies, Box, Rhd };

    static Formula bot();
    static Formula var( std::string name );
    static Formula constant( unsigned index );
    static Formula implies( Formula lhs, Formula rhs );
    static Formula box( unsigned level, Formula body );
    static Formula box( Formula body ) { return box( 0, std::move( body ) ); }
    static Formula rhd( Formula lhs, Formula rhs );

    static Formula top();
    static Formula neg( Formula f );
    static Formula conj( Formula lhs, Formula rhs );
    static Formula disj( Formula lhs, Formula rhs );
    static Formula iff( Formula lhs, Formula rhs );
    static Formula diamond( unsigned level, Formula body );
    static Formula diamond( Formula body ) { return diamond( 0, std::move( body ) ); }
    static Formula boxplus( Formula body );

    // []^k f and <>^k f at level 0.
    static Formula box_power( unsigned k, Formula body );
    static Formula diamond_power( unsigned k, Formula body );

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] bool is( Kind k ) const { return kind() == k; }
    [[nodiscard]] bool is_atom() const { return is( Kind::Var ) || is( Kind::Const ); }

    [[nodiscard]] const std::string& name() const;   // Var
    [[nodiscard]] unsigned index() const;            // Const
    [[nodiscard]] unsigned level() const;            // Box
    [[nodiscard]] const Formula& lhs() const;        // Implies, Rhd
    [[nodiscard]] const Formula& rhs() const;        // Implies, Rhd
    [[nodiscard]] const Formula& body() const;       // Box

    // Valuation key of an atom: the variable name, or "s<i>" for a constant.
    [[nodiscard]] std::string atom_name() const;

    [[nodiscard]] std::size_t hash() const;
    // Number of nodes in the syntax tree.
    [[nodiscard]] std::size_t size() const;

    friend bool operator==( const Formula& a, const Formula& b );
    friend std::strong_ordering operator<=>( const Formula& a, const Formula& b );

private:
    struct Node;
    explicit Formula( std::shared_ptr< const Node > node ) : _node{ std::move( node ) } {}

    std::shared_ptr< const Node > _node;
};

struct FormulaHash
{
    std::size_t operator()( const Formula& f ) const { return f.hash(); }
};

/// Fragments of the language, plus the two full languages.
///   ClosedB : bot, ->, [0]            (no atoms)
///   ClosedD : bot, ->, [n] any n      (no atoms)
///   Fn      : s_1..s_n, bot, ->, [0]  (no variables)
///   FullGL  : everything except |>
///   FullIL  : everything
struct Language
{
    enum class Kind : std::uint8_t { ClosedB, ClosedD, Fn, FullGL, FullIL };

    Kind kind = Kind::FullGL;
    unsigned n = 0;

    static Language closed_b() { return { Kind::ClosedB, 0 }; }
    static Language closed_d() { return { Kind::ClosedD, 0 }; }
    static Language fn( unsigned n ) { return { Kind::Fn, n }; }
    static Language full_gl() { return { Kind::FullGL, 0 }; }
    static Language full_il() { return { Kind::FullIL, 0 }; }

    [[nodiscard]] std::string to_string() const;
    friend bool operator==( const Language&, const Language& ) = default;
};

[[nodiscard]] bool in_fragment( const Formula& f, const Language& lang );

// Throws FragmentError naming the offending subformula.
void require_fragment( const Formula& f, const Language& lang );

/// Parses the ASCII surface syntax:
///   bot top p q v12 s3 ~F F&G F|G F->G F<->G []F <>F [n]F <n>F boxplus F F|>G
/// Precedence, tightest first: prefix operators, &, |, |>, then -> and <->
/// (right associative). & | |> associate to the left.
[[nodiscard]] Formula parse( std::string_view text, const Language& lang = Language::full_gl() );

/// Prints with derived connectives recovered where the core shape matches
/// exactly; parse(print(f)) == f for every f.
[[nodiscard]] std::string print( const Formula& f );

// Longest chain of nested boxes; a |> node counts as two levels.
[[nodiscard]] unsigned modal_depth( const Formula& f );

// Distinct subformulas (including f), in Formula order.
[[nodiscard]] std::vector< Formula > subformulas( const Formula& f );

// Distinct atoms (variables and constants), in Formula order.
[[nodiscard]] std::vector< Formula > atoms( const Formula& f );

// Number of distinct box subformulas.
[[nodiscard]] std::size_t box_count( const Formula& f );

[[nodiscard]] unsigned max_box_level( const Formula& f );
[[nodiscard]] bool contains_rhd( const Formula& f );

// Simultaneous substitution of variables.
[[nodiscard]] Formula substitute( const Formula& f, const std::map< std::string, Formula >& subst );

// ---------------------------------------------------------------------------
// Axiom schemata

enum class Schema : std::uint8_t {
    K,             // [](A->B) -> ([]A -> []B)
    L,             // []([]A->A) -> []A
    Four,          // []A -> [][]A
    Linearity,     // []([]A->B) | [](boxplus B -> A)
    Q1,            // non-triple-branching
    Q2,            // strong confluence
    FGL,           // [](s_i -> B) -> []B, parameters n and index
    NonBranching,  // generalized non-(n+2)-branching, letters A1..A{n+2}
    L1, L2, L3, J1, J2, J3, J4, J5, M, P, W
};

struct SchemaArgs
{
    std::map< std::string, Formula > letters;
    unsigned n = 0;      // FGL: number of constants; NonBranching: branching parameter
    unsigned index = 0;  // FGL: which Boolean combination of constants
};

[[nodiscard]] std::string_view schema_name( Schema s );
[[nodiscard]] Schema schema_from_name( std::string_view name );
[[nodiscard]] bool is_il_schema( Schema s );

// Schema letters a schema needs, e.g. {"A","B"}.
[[nodiscard]] std::vector< std::string > schema_letters( Schema s, const SchemaArgs& args = {} );

// Throws SchemaError on a missing letter or a malformed FGL argument.
[[nodiscard]] Formula instantiate_schema( Schema s, const SchemaArgs& args );

// The conjunction of literals s_{j+1} / ~s_{j+1}, j < n, selected by the bits of i.
[[nodiscard]] Formula constant_combination( unsigned n, unsigned i );

// True when f is a Boolean combination of []^k bot (k >= 1) and top.
[[nodiscard]] bool is_box_bot_combination( const Formula& f );

} // namespace provlog

template<>
struct std::hash< provlog::Formula >
{
    std::size_t operator()( const provlog::Formula& f ) const noexcept { return f.hash(); }
};
