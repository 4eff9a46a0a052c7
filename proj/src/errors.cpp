#include "quandle/errors.hpp"

namespace quandle {

namespace {

std::string describe_axiom(int axiom, const std::vector<int>& witness)
{
    std::string msg = "quandle axiom " + std::to_string(axiom) + " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i)
            msg += ", ";
        msg += std::to_string(witness[i]);
    }
    return msg + ")";
}

} // namespace

AxiomViolation::AxiomViolation(int axiom, std::vector<int> witness) :
    Error(describe_axiom(axiom, witness)),
    axiom_(axiom),
    witness_(std::move(witness))
{
}

NotCentralizing::NotCentralizing(int part, int element) :
    Error("subgroup element " + std::to_string(element) + " of part " + std::to_string(part) +
          " does not commute with z"),
    part_(part),
    element_(element)
{
}

BoundExceeded::BoundExceeded(int requested, int bound) :
    Error("order " + std::to_string(requested) + " exceeds the configured bound " + std::to_string(bound)),
    requested_(requested),
    bound_(bound)
{
}

SyntaxError::SyntaxError(std::string message, std::size_t position) :
    Error("syntax error at " + std::to_string(position) + ": " + message),
    position_(position)
{
}

UnknownGenerator::UnknownGenerator(std::string name) :
    Error("unknown generator '" + name + "'"),
    name_(std::move(name))
{
}

UnassignedGenerator::UnassignedGenerator(std::string name) :
    Error("generator '" + name + "' has no assigned value"),
    name_(std::move(name))
{
}

UnknownElement::UnknownElement(std::string name) :
    Error("'" + name + "' does not name an element of the quandle"),
    name_(std::move(name))
{
}

NotHomomorphism::NotHomomorphism(int x, int y) :
    Error("map is not a homomorphism at (" + std::to_string(x) + ", " + std::to_string(y) + ")"),
    x_(x),
    y_(y)
{
}

EmptyBraid::EmptyBraid() :
    Error("empty braid word")
{
}

IndexOutOfRange::IndexOutOfRange(int index, int strands) :
    Error("braid generator s" + std::to_string(index) + " out of range for " + std::to_string(strands) +
          " strands")
{
}

} // namespace quandle
