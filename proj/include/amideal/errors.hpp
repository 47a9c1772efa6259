#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amideal {

using Index = unsigned long long;

// Base class for every error thrown by the library.  Callers that only care
// about "did it work" can catch this; the CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MonotonicityViolated : Error {
    Index index;
    explicit MonotonicityViolated(Index i)
        : Error("monotonicity violated at index " + std::to_string(i)), index(i) {}
};

struct NonPointInterval : Error {
    Index index;
    explicit NonPointInterval(Index i)
        : Error("exact value requested but only an enclosure is available at index " +
                std::to_string(i)),
          index(i) {}
};

struct NoTailOracle : Error {
    explicit NoTailOracle(const std::string& ctx)
        : Error("operation requires a tail oracle: " + ctx) {}
};

struct BlocksOutOfRange : Error {
    explicit BlocksOutOfRange(const std::string& msg) : Error("bad block list: " + msg) {}
};

struct HypothesisViolated : Error {
    Index block;
    explicit HypothesisViolated(Index k)
        : Error("density hypothesis violated at block " + std::to_string(k)), block(k) {}
};

struct NotQuasiconcave : Error {
    Index index;
    explicit NotQuasiconcave(Index i)
        : Error("input is not quasiconcave (violation near index " + std::to_string(i) + ")"),
          index(i) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error("length mismatch: " + msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotMajorized : Error {
    Index index;
    explicit NotMajorized(Index i)
        : Error("prefix-sum domination fails at index " + std::to_string(i)), index(i) {}
};

struct NotSummable : Error {
    explicit NotSummable(const std::string& ctx)
        : Error("operation requires a summable sequence: " + ctx) {}
};

struct NonpositiveEntry : Error {
    Index index;
    explicit NonpositiveEntry(Index i)
        : Error("entry at index " + std::to_string(i) + " must be positive"), index(i) {}
};

struct ZeroPrefixSum : Error {
    explicit ZeroPrefixSum(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroAtIndex : Error {
    Index index;
    explicit DivisionByZeroAtIndex(Index i)
        : Error("division by a zero sequence value at index " + std::to_string(i)), index(i) {}
};

struct ParseError : Error {
    std::size_t pos;  // 0-based offset into the input text
    ParseError(std::size_t p, const std::string& msg)
        : Error("parse error at position " + std::to_string(p) + ": " + msg), pos(p) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& msg) : Error("bad parameters: " + msg) {}
};

struct UnknownCheckId : Error {
    explicit UnknownCheckId(const std::string& id) : Error("unknown corpus check id: " + id) {}
};

struct UnsupportedIdeal : Error {
    explicit UnsupportedIdeal(const std::string& msg)
        : Error("no normalization rule applies: " + msg) {}
};

struct NotPrincipal : Error {
    explicit NotPrincipal(const std::string& msg)
        : Error("ideal has no principal generator: " + msg) {}
};

struct GuardIndeterminate : Error {
    explicit GuardIndeterminate(const std::string& msg)
        : Error("guard condition could not be decided: " + msg) {}
};

struct GuardFailed : Error {
    explicit GuardFailed(const std::string& msg)
        : Error("guard condition does not hold: " + msg) {}
};

}  // namespace amideal
