#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace provlog {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error
{
public:
    SyntaxError( const std::string& message, std::size_t position )
        : Error( message + " at position " + std::to_string( position ) ), _position{ position }
    {}

    [[nodiscard]] std::size_t position() const { return _position; }

private:
    std::size_t _position;
};

// The formula lies outside the requested fragment.
class FragmentError : public Error
{
public:
    using Error::Error;
};

class SchemaError : public Error
{
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

// A search ran out of time or exceeded a size cap. `progress` says how far it got.
class ResourceLimit : public Error
{
public:
    ResourceLimit( const std::string& message, std::string progress )
        : Error( message + " (" + progress + ")" ), _progress{ std::move( progress ) }
    {}

    [[nodiscard]] const std::string& progress() const { return _progress; }

private:
    std::string _progress;
};

// Wall-clock deadline shared by a search. Cheap to poll: the clock is read
// once every 1024 calls to tick().
class Budget
{
public:
    Budget() = default;
    explicit Budget( std::chrono::milliseconds limit )
        : _deadline{ std::chrono::steady_clock::now() + limit }
    {}

    static Budget unlimited() { return Budget{}; }

    void tick( const char* where = "search" )
    {
        if ( !_deadline || ( ++_calls & 1023u ) != 0 )
            return;
        check( where );
    }

    void check( const char* where = "search" ) const
    {
        if ( _deadline && std::chrono::steady_clock::now() > *_deadline )
            throw ResourceLimit( "time limit exceeded", std::string{ "in " } + where );
    }

private:
    std::optional< std::chrono::steady_clock::time_point > _deadline;
    std::size_t _calls = 0;
};

} // namespace provlog
