#pragma once

#include <stdexcept>
#include <string>

namespace cluco {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex identity that is not present in the graph it was used against.
struct UnknownVertex : Error {
    using Error::Error;
};

/// An edge operation named a pair that is not an edge.
struct NotAnEdge : Error {
    using Error::Error;
};

/// A cut query was asked for an adjacent pair (no separator can exist).
struct AdjacentPair : Error {
    using Error::Error;
};

/// A separation value violates the separation axioms for its host graph.
struct InvalidSeparation : Error {
    using Error::Error;
};

/// Construction parameters outside their documented range.
struct InvalidParams : Error {
    using Error::Error;
};

/// A list assignment violating the clustered-colouring hypotheses.
struct InvalidLists : Error {
    using Error::Error;
};

/// A stated hypothesis of a contraction search does not hold; the message
/// names the failed hypothesis and a witness.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// The contractible-edge search exhausted all candidates.  Signals inputs
/// outside the guaranteed hypothesis range.
struct NoEdgeFound : Error {
    using Error::Error;
};

/// Internal guard: a contraction plan's result failed its final
/// connectivity verification.
struct ResultNotConnectedEnough : Error {
    using Error::Error;
};

/// A text input could not be parsed; carries a 1-based line number.
struct ParseError : Error {
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

} // namespace cluco
