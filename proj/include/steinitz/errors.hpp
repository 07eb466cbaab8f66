#ifndef STEINITZ_ERRORS_HPP
#define STEINITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace steinitz {

/* Base class of everything the library throws on purpose. */
struct error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Bad user input: malformed groups, non-fundamental discriminants, ... */
struct invalid_input : public error {
    using error::error;
};

/* A group tree outside the shapes the realizability engine accepts. */
struct inadmissible_tree : public invalid_input {
    using invalid_input::invalid_input;
};

/* An exhaustive enumeration would exceed the configured element cap. */
struct cap_exceeded : public invalid_input {
    using invalid_input::invalid_input;
};

/* Prime enumeration ran into the hard ceiling before stabilizing. */
struct enumeration_ceiling : public error {
    using error::error;
};

/* A checked invariant failed. Always a bug, never a user mistake. */
struct internal_error : public error {
    using error::error;
};

} // namespace steinitz

#endif
