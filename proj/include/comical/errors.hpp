#pragma once

#include <stdexcept>
#include <string>

namespace comical {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operator was built or applied with an index outside its admissible range.
struct ArityError : Error {
    using Error::Error;
};

// Two operators (or entries of a word) do not compose; the message names the
// offending position.
struct CompositionError : Error {
    using Error::Error;
};

// A constructor was called with parameters outside its documented domain.
struct ParameterError : Error {
    using Error::Error;
};

// A presheaf object or map failed the coherence validation pass.
struct IntegrityError : Error {
    using Error::Error;
};

// Serialized input did not match the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

// A total structure (e.g. a homotopy category) could not be completed from
// the available cells; the message names the first witness of failure.
struct IncompletenessError : Error {
    using Error::Error;
};

} // namespace comical
