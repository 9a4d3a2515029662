#pragma once

#include <stdexcept>
#include <string>

namespace unitsep {

// Base for all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// group construction
struct NotAssociative : Error {
    int a, b, c;
    NotAssociative(int a_, int b_, int c_)
        : Error("table is not associative at triple (" + std::to_string(a_) + "," +
                std::to_string(b_) + "," + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};
struct NoIdentity : Error {
    NoIdentity() : Error("table has no two-sided identity") {}
};
struct NoInverse : Error {
    int element;
    explicit NoInverse(int x)
        : Error("element " + std::to_string(x) + " has no two-sided inverse"), element(x) {}
};
struct BadParameter : Error {
    explicit BadParameter(const std::string& what) : Error(what) {}
};
struct BadAction : Error {
    explicit BadAction(const std::string& what) : Error(what) {}
};
struct NotCentral : Error {
    explicit NotCentral(const std::string& what) : Error(what) {}
};
struct WrongOrder : Error {
    explicit WrongOrder(const std::string& what) : Error(what) {}
};
struct NotNormal : Error {
    explicit NotNormal(const std::string& what) : Error(what) {}
};
struct GroupTooLarge : Error {
    int order, cap;
    GroupTooLarge(int order_, int cap_)
        : Error("group of order " + std::to_string(order_) +
                " exceeds the configured cap " + std::to_string(cap_)),
          order(order_), cap(cap_) {}
};

// presentations
struct SyntaxError : Error {
    std::size_t offset;
    std::string expected;
    SyntaxError(std::size_t off, const std::string& expected_)
        : Error("syntax error at offset " + std::to_string(off) + ": expected " + expected_),
          offset(off), expected(expected_) {}
};
struct UnknownAtom : Error {
    explicit UnknownAtom(const std::string& name) : Error("unknown group atom '" + name + "'") {}
};
struct CosetOverflow : Error {
    explicit CosetOverflow(int cap)
        : Error("coset enumeration exceeded " + std::to_string(cap) +
                " cosets (group may be infinite)") {}
};
struct EmptyPresentation : Error {
    EmptyPresentation() : Error("presentation has no generators") {}
};

// numbers
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct BadGaloisIndex : Error {
    explicit BadGaloisIndex(const std::string& what) : Error(what) {}
};
struct NotQuadratic : Error {
    explicit NotQuadratic(const std::string& what) : Error(what) {}
};
struct SignUncertain : Error {
    explicit SignUncertain(const std::string& what) : Error(what) {}
};
struct EvenConductor : Error {
    explicit EvenConductor(const std::string& what) : Error(what) {}
};

// wedderburn
struct NotStronglyMonomial : Error {
    // q-dimension left uncovered by the strong Shoda pair idempotents
    long defect_dimension;
    explicit NotStronglyMonomial(long defect)
        : Error("strong Shoda pairs do not cover the group algebra (uncovered dimension " +
                std::to_string(defect) + ")"),
          defect_dimension(defect) {}
};
struct OracleMismatch : Error {
    explicit OracleMismatch(const std::string& what) : Error(what) {}
};

} // namespace unitsep
