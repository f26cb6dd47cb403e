#include "vfree/errors.hpp"

namespace vfree {

const char* to_string(Diagnostic::Kind kind) {
    switch (kind) {
        case Diagnostic::Kind::BadTable: return "BadTable";
        case Diagnostic::Kind::BadMap: return "BadMap";
        case Diagnostic::Kind::NotInjective: return "NotInjective";
        case Diagnostic::Kind::NotHomomorphism: return "NotHomomorphism";
        case Diagnostic::Kind::NotConnected: return "NotConnected";
        case Diagnostic::Kind::DuplicateSymbol: return "DuplicateSymbol";
        case Diagnostic::Kind::BadSymbol: return "BadSymbol";
        case Diagnostic::Kind::BadReference: return "BadReference";
    }
    return "Unknown";
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    std::string out = "invalid graph of groups";
    for (const auto& d : diagnostics) {
        out += "\n  ";
        out += to_string(d.kind);
        out += ": ";
        out += d.message;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

NotALoop::NotALoop(std::size_t word_index, std::size_t position, const std::string& reason)
    : Error("word " + std::to_string(word_index) + " is not an A-loop at position " +
            std::to_string(position) + ": " + reason),
      word_index_(word_index),
      position_(position) {}

}  // namespace vfree
