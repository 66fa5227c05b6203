#pragma once

#include <stdexcept>
#include <string>

namespace deckrec {

enum class ErrorKind {
    InvalidArgument,      // precondition violation: bad sizes, labels, parameters
    ParseError,           // malformed graph6 string or deck file
    InconsistentDeck,     // counting contradiction inside a deck
    NotRegularConsistent, // card's missing-edge count fits no regular graph
    InconsistentCard,     // pair counts fit neither Same nor Different
    Mu1Unsupported,       // reconstruction needs mu' >= 2
    NeedDistance2Card,    // omitted pair of the given card is at distance > 2
    NotANonadjacentCard,  // degree profile is not that of a nonadjacent-omitted card
    NotACardOfRegular,    // card cannot come from a k-regular graph
    Unrecognized,         // deck matches no supported reconstruction branch
    DeckMismatch,         // reconstructed graph's deck differs from the input deck
    OutOfOracleRange,     // exhaustive oracle only covers n <= 7
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace deckrec
