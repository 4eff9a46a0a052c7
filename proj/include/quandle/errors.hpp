#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandle {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Cayley table failed one of the three quandle axioms.
///
/// `axiom` is 1 (idempotency), 2 (right-bijectivity) or 3 (right
/// self-distributivity). `witness` holds (x, x) for axiom 1, (x, y) for
/// axiom 2 where row x repeats an earlier value of column y, and (x, y, z)
/// for axiom 3.
class AxiomViolation : public Error {
public:
    AxiomViolation(int axiom, std::vector<int> witness);

    int axiom() const noexcept { return axiom_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    int axiom_;
    std::vector<int> witness_;
};

/// Table shape or entries out of range; raised before any axiom is checked.
class InvalidTable : public Error {
public:
    using Error::Error;
};

class InvalidGroup : public Error {
public:
    using Error::Error;
};

class NotSubgroup : public Error {
public:
    using Error::Error;
};

class NotCentralizing : public Error {
public:
    NotCentralizing(int part, int element);
    int part() const noexcept { return part_; }
    int element() const noexcept { return element_; }

private:
    int part_;
    int element_;
};

class BoundExceeded : public Error {
public:
    BoundExceeded(int requested, int bound);
    int requested() const noexcept { return requested_; }
    int bound() const noexcept { return bound_; }

private:
    int requested_;
    int bound_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownGenerator : public Error {
public:
    explicit UnknownGenerator(std::string name);
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnassignedGenerator : public Error {
public:
    explicit UnassignedGenerator(std::string name);
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownElement : public Error {
public:
    explicit UnknownElement(std::string name);
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NotFreePresentation : public Error {
public:
    using Error::Error;
};

class NotHomomorphism : public Error {
public:
    NotHomomorphism(int x, int y);
    int x() const noexcept { return x_; }
    int y() const noexcept { return y_; }

private:
    int x_;
    int y_;
};

class EmptyBraid : public Error {
public:
    EmptyBraid();
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(int index, int strands);
};

class InconsistentArcs : public Error {
public:
    using Error::Error;
};

/// A file or JSON document does not have the expected shape.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace quandle
