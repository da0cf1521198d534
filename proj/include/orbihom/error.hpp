#ifndef ORBIHOM_ERROR_HPP
#define ORBIHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbihom {

enum class ErrorKind
{
    Input,         // malformed text, unknown names, rejected descriptors
    Precondition,  // an operation was called outside its domain
    Internal       // an invariant the library guarantees did not hold
};

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(std::string const& what)
{
    throw Error(ErrorKind::Input, what);
}

[[noreturn]] inline void fail_precondition(std::string const& what)
{
    throw Error(ErrorKind::Precondition, what);
}

[[noreturn]] inline void fail_internal(std::string const& what)
{
    throw Error(ErrorKind::Internal, what);
}

} // namespace orbihom

#endif
